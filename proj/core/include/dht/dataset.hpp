#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dht/common.hpp"

namespace dht {

// A measured event: dense id plus a fixed-dimension coordinate vector.
struct EventPoint {
    std::uint32_t id = 0;
    std::vector<double> coords;
};

enum class DistanceMetric { euclidean, manhattan };
enum class Linkage { single, complete, average, ward };

DistanceMetric parse_distance_metric(const std::string& s);
Linkage parse_linkage(const std::string& s);
std::string to_string(DistanceMetric m);
std::string to_string(Linkage l);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

// Checks ids are dense 0..N-1, coordinates finite and uniform-dimension.
void validate_events(const std::vector<EventPoint>& events);

// Symmetric zero-diagonal matrix of the chosen metric; requires N >= 2.
DistanceMatrix pairwise_distances(const std::vector<EventPoint>& events, DistanceMetric metric);

}  // namespace dht
