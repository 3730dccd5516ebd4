#include "dht/dendrogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dht {

namespace {

struct Slot {
    bool active = false;
    int cid = 0;    // smallest event id inside
    int node = 0;   // tree node id
    int size = 0;
};

double lance_williams(Linkage linkage, double dki, double dkj, double dij,
                      int si, int sj, int sk) {
    switch (linkage) {
        case Linkage::single:
            return std::min(dki, dkj);
        case Linkage::complete:
            return std::max(dki, dkj);
        case Linkage::average:
            return (si * dki + sj * dkj) / (si + sj);
        case Linkage::ward: {
            // operates on squared distances
            const double t = si + sj + sk;
            return ((si + sk) * dki + (sj + sk) * dkj - sk * dij) / t;
        }
    }
    return 0.0;
}

}  // namespace

Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage) {
    const int n = static_cast<int>(dm.size());
    if (n < 2) throw IngestionError("agglomerate: need n >= 2");

    const bool squared = linkage == Linkage::ward;
    std::vector<double> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = dm.at(i, j);
            if (d < 0.0 || !std::isfinite(d)) {
                throw IngestionError("distance matrix entries must be finite and >= 0");
            }
            w[i * n + j] = squared ? d * d : d;
        }
    }

    std::vector<Slot> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = {true, i, i, 1};

    Dendrogram tree;
    tree.n = n;
    tree.merges.reserve(n - 1);

    for (int step = 0; step < n - 1; ++step) {
        int bi = -1, bj = -1;
        double best = std::numeric_limits<double>::infinity();
        int best_lo = 0, best_hi = 0;
        for (int i = 0; i < n; ++i) {
            if (!slots[i].active) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!slots[j].active) continue;
                const double d = w[i * n + j];
                const int lo = std::min(slots[i].cid, slots[j].cid);
                const int hi = std::max(slots[i].cid, slots[j].cid);
                if (d < best || (d == best && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
                    best = d;
                    bi = i;
                    bj = j;
                    best_lo = lo;
                    best_hi = hi;
                }
            }
        }

        Slot& a = slots[bi].cid < slots[bj].cid ? slots[bi] : slots[bj];
        Slot& b = slots[bi].cid < slots[bj].cid ? slots[bj] : slots[bi];
        const double height = squared ? std::sqrt(best) : best;
        tree.merges.push_back({a.node, b.node, height});
        const int merged_node = n + step;

        const int ia = &a == &slots[bi] ? bi : bj;
        const int ib = ia == bi ? bj : bi;
        for (int k = 0; k < n; ++k) {
            if (!slots[k].active || k == ia || k == ib) continue;
            const double d = lance_williams(linkage, w[k * n + ia], w[k * n + ib], best,
                                            a.size, b.size, slots[k].size);
            w[k * n + ia] = d;
            w[ia * n + k] = d;
        }
        a.node = merged_node;
        a.size += b.size;
        b.active = false;
    }
    return tree;
}

Dendrogram assign_codes(Dendrogram d) {
    const int n = d.n;
    if (n == 0) throw NumericError("assign_codes: empty tree");

    // digit path from root for every node, then pad leaf paths
    const int total = n + static_cast<int>(d.merges.size());
    std::vector<std::vector<std::uint8_t>> path(total);
    for (int k = static_cast<int>(d.merges.size()) - 1; k >= 0; --k) {
        const int node = n + k;
        const auto& m = d.merges[k];
        path[m.left] = path[node];
        path[m.left].push_back(0);
        path[m.right] = path[node];
        path[m.right].push_back(1);
    }

    std::size_t depth = 0;
    for (int leaf = 0; leaf < n; ++leaf) depth = std::max(depth, path[leaf].size());
    if (n == 1) depth = 1;

    d.codes.clear();
    d.codes.reserve(n);
    for (int leaf = 0; leaf < n; ++leaf) {
        auto digits = path[leaf];
        digits.resize(depth, 0);
        d.codes.emplace_back(std::move(digits), 2u);
    }
    return d;
}

int lca_depth(const Dendrogram& d, int leaf_a, int leaf_b) {
    const int total = d.n + static_cast<int>(d.merges.size());
    std::vector<int> parent(total, -1), depth(total, 0);
    for (int k = 0; k < static_cast<int>(d.merges.size()); ++k) {
        parent[d.merges[k].left] = d.n + k;
        parent[d.merges[k].right] = d.n + k;
    }
    for (int k = static_cast<int>(d.merges.size()) - 1; k >= 0; --k) {
        const int node = d.n + k;
        depth[d.merges[k].left] = depth[node] + 1;
        depth[d.merges[k].right] = depth[node] + 1;
    }
    int a = leaf_a, b = leaf_b;
    while (a != b) {
        if (depth[a] >= depth[b]) a = parent[a];
        else b = parent[b];
    }
    return depth[a];
}

}  // namespace dht
