#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dht/dendrogram.hpp"

namespace dht {

// Monna values of all leaves, indexed by event id; pairwise distinct because
// codes are distinct and the Monna map is injective on fixed-length codes.
struct EventValueList {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
};

// q[i][k] = event_i - event_k as IEEE doubles; the view V_i^k is row i.
struct DifferenceMatrix {
    std::size_t n = 0;
    std::vector<double> q;  // row-major

    double at(std::size_t i, std::size_t k) const { return q[i * n + k]; }
};

struct VarietyConfig {
    double scale_a = 1.0;  // the undetermined constant A
};

EventValueList event_values(const Dendrogram& d);

// Probability mass of each distinct event value; exact rationals. For a
// dendrogram of N distinct events every mass is exactly 1/N.
std::vector<std::pair<Rational, Rational>> event_distribution(const EventValueList& values);

DifferenceMatrix difference_matrix(const EventValueList& values);

// I_ij = (1/N) sum_{k not in {i,j}} (V_i^k - V_j^k)^2
double distinctiveness(const DifferenceMatrix& q, std::size_t i, std::size_t j);

// v = (A/N^2) sum_{i != j} I_ij, evaluated through the closed form
// I_ij = ((N-2)/N) (e_i - e_j)^2; requires N >= 3.
double variety(const DifferenceMatrix& q, const VarietyConfig& cfg);

// p_j = mean of row j over the N-1 off-diagonal entries
double mean_momentum(const DifferenceMatrix& q, std::size_t j);

// T = (1/M) sum over ordered pairs of q^2, M = N(N-1)
double differences_energy(const DifferenceMatrix& q);

}  // namespace dht
