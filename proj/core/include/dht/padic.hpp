#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dht/common.hpp"

namespace dht {

bool is_prime(unsigned n);

// Truncated base-p expansion of a dendrogram branch. Digit index 0 is the
// root-most split, so codes sharing a long prefix belong to branches with a
// long common root.
struct BranchCode {
    std::vector<std::uint8_t> digits;
    unsigned base = 2;

    BranchCode() = default;
    BranchCode(std::vector<std::uint8_t> d, unsigned p = 2);

    std::size_t length() const { return digits.size(); }
    std::string to_string() const;

    auto operator<=>(const BranchCode&) const = default;
};

// Exact image of a code under the Monna map; a rational in [0, 1).
struct MonnaValue {
    Rational value;
};

// Clopen ball B(p^-L, prefix): all codes whose first L digits equal `prefix`.
struct UltrametricBall {
    std::vector<std::uint8_t> prefix;
    unsigned base = 2;

    Rational radius() const;
    bool contains(const BranchCode& code) const;
};

// edge_i = sum_j digits[j] * p^j, exact.
BigInt encode_edge(const BranchCode& code);

// event_i = sum_j digits[j] * p^(-j-1), exact; injective on fixed-length codes.
MonnaValue monna_map(const BranchCode& code);

// |n|_p = p^(-v_p(n)); |0|_p = 0 by convention.
Rational padic_norm(const BigInt& n, unsigned p);

// p^(-L) with L the longest common root-side prefix; 0 iff a == b.
Rational ultrametric_distance(const BranchCode& a, const BranchCode& b);

// All codes within ultrametric distance <= radius of center. radius must be
// p^(-L) for integer L >= 0, or >= 1 (the whole space).
std::vector<BranchCode> ball_members(std::span<const BranchCode> codes,
                                     const BranchCode& center,
                                     const Rational& radius);

}  // namespace dht
