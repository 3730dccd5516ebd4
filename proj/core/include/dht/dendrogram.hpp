#pragma once

#include <vector>

#include "dht/dataset.hpp"
#include "dht/padic.hpp"

namespace dht {

// Full binary merge tree over N events. Node ids: leaves are the event ids
// 0..N-1, internal node k (0-based merge order) is N+k, root is 2N-2.
// Each merge stores `left` as the child whose subtree holds the smaller
// minimum event id, which is also the digit-0 side of the branch codes.
struct Dendrogram {
    struct Merge {
        int left = -1;
        int right = -1;
        double height = 0.0;
    };

    int n = 0;
    std::vector<Merge> merges;       // size n-1
    std::vector<BranchCode> codes;   // one per leaf once assigned, else empty

    bool has_codes() const { return !codes.empty(); }
    int root() const { return n + static_cast<int>(merges.size()) - 1; }
};

// Sequential agglomerative clustering. Ties on the linkage distance are
// broken toward the pair with lexicographically smallest
// (min cluster id, max cluster id), cluster id = smallest event id inside,
// so rebuilds are byte-reproducible.
Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage);

// Root-to-leaf digit paths (left child 0, right child 1), padded with
// trailing zeros to the maximum leaf depth.
Dendrogram assign_codes(Dendrogram d);

// Depth of each leaf's lowest common ancestor counted from the root.
int lca_depth(const Dendrogram& d, int leaf_a, int leaf_b);

}  // namespace dht
