#include "dht/dataset.hpp"

#include <cmath>

namespace dht {

DistanceMetric parse_distance_metric(const std::string& s) {
    if (s == "euclidean") return DistanceMetric::euclidean;
    if (s == "manhattan") return DistanceMetric::manhattan;
    throw ConfigError("unknown metric '" + s + "' (expected euclidean|manhattan)");
}

Linkage parse_linkage(const std::string& s) {
    if (s == "single") return Linkage::single;
    if (s == "complete") return Linkage::complete;
    if (s == "average") return Linkage::average;
    if (s == "ward") return Linkage::ward;
    throw ConfigError("unknown linkage '" + s + "' (expected single|complete|average|ward)");
}

std::string to_string(DistanceMetric m) {
    return m == DistanceMetric::euclidean ? "euclidean" : "manhattan";
}

std::string to_string(Linkage l) {
    switch (l) {
        case Linkage::single: return "single";
        case Linkage::complete: return "complete";
        case Linkage::average: return "average";
        case Linkage::ward: return "ward";
    }
    return "?";
}

void validate_events(const std::vector<EventPoint>& events) {
    const std::size_t n = events.size();
    std::vector<bool> seen(n, false);
    std::size_t dim = n ? events.front().coords.size() : 0;
    for (const auto& e : events) {
        if (e.id >= n || seen[e.id]) {
            throw IngestionError("event ids must be distinct and dense 0..N-1 (bad id " +
                                 std::to_string(e.id) + ")");
        }
        seen[e.id] = true;
        if (e.coords.size() != dim) {
            throw IngestionError("coordinate dimension mismatch at event " + std::to_string(e.id));
        }
        for (double c : e.coords) {
            if (!std::isfinite(c)) {
                throw IngestionError("non-finite coordinate at event " + std::to_string(e.id));
            }
        }
    }
    if (dim == 0 && n > 0) {
        throw IngestionError("events carry no coordinates");
    }
}

DistanceMatrix pairwise_distances(const std::vector<EventPoint>& events, DistanceMetric metric) {
    validate_events(events);
    const std::size_t n = events.size();
    if (n < 2) throw IngestionError("need at least 2 events");

    // row lookup by id so the matrix is id-indexed regardless of input order
    std::vector<const EventPoint*> byid(n, nullptr);
    for (const auto& e : events) byid[e.id] = &e;

    DistanceMatrix dm(n);
    const std::size_t dim = events.front().coords.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double delta = byid[i]->coords[d] - byid[j]->coords[d];
                acc += metric == DistanceMetric::euclidean ? delta * delta : std::abs(delta);
            }
            const double dist = metric == DistanceMetric::euclidean ? std::sqrt(acc) : acc;
            dm.at(i, j) = dist;
            dm.at(j, i) = dist;
        }
    }
    return dm;
}

}  // namespace dht
