#include "dht/views.hpp"

#include <map>

namespace dht {

EventValueList event_values(const Dendrogram& d) {
    if (!d.has_codes()) throw NumericError("event_values: codes not assigned");
    EventValueList out;
    out.values.reserve(d.codes.size());
    for (const auto& code : d.codes) {
        out.values.push_back(monna_map(code).value);
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> event_distribution(const EventValueList& values) {
    std::map<Rational, long> counts;
    for (const auto& v : values.values) ++counts[v];
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(counts.size());
    const long n = static_cast<long>(values.size());
    for (const auto& [value, count] : counts) {
        out.emplace_back(value, Rational(count, n));
    }
    return out;
}

DifferenceMatrix difference_matrix(const EventValueList& values) {
    const std::size_t n = values.size();
    if (n < 2) throw NumericError("difference_matrix: need N >= 2");
    std::vector<double> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<double>(values.values[i]);
    DifferenceMatrix q{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            q.q[i * n + k] = e[i] - e[k];
        }
    }
    return q;
}

double distinctiveness(const DifferenceMatrix& q, std::size_t i, std::size_t j) {
    const std::size_t n = q.n;
    if (i == j || i >= n || j >= n) throw NumericError("distinctiveness: need distinct valid i, j");
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double diff = q.at(i, k) - q.at(j, k);
        acc += diff * diff;
    }
    return acc / static_cast<double>(n);
}

double variety(const DifferenceMatrix& q, const VarietyConfig& cfg) {
    const std::size_t n = q.n;
    if (cfg.scale_a <= 0.0) throw ConfigError("variety: A must be > 0");
    if (n < 3) throw NumericError("variety: need N >= 3 (no common view index exists)");
    // sum_{i != j} I_ij = ((N-2)/N) * sum over ordered pairs of q_ij^2
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = q.at(i, j);
            sq += d * d;
        }
    }
    const double nn = static_cast<double>(n);
    return cfg.scale_a / (nn * nn) * ((nn - 2.0) / nn) * sq;
}

double mean_momentum(const DifferenceMatrix& q, std::size_t j) {
    const std::size_t n = q.n;
    if (j >= n) throw NumericError("mean_momentum: invalid index");
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != j) acc += q.at(j, k);
    }
    return acc / static_cast<double>(n - 1);
}

double differences_energy(const DifferenceMatrix& q) {
    const std::size_t n = q.n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            acc += q.at(j, k) * q.at(j, k);
        }
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace dht
