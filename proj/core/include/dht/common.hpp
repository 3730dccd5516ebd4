#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dht {

// Exact arithmetic used by the p-adic layer. Conversion to IEEE doubles
// happens only in the views/density layers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy; the numeric value doubles as the CLI exit code.
enum class ErrorKind : int { config = 2, ingestion = 3, numeric = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};
struct IngestionError : Error {
    explicit IngestionError(const std::string& w) : Error(ErrorKind::ingestion, w) {}
};
struct NumericError : Error {
    explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

// Uniform cell grid on [lo, hi): cell b covers [lo + b*h, lo + (b+1)*h),
// values live at cell centers.
struct GridGeometry {
    double lo = -1.0;
    double hi = 1.0;
    int bins = 64;

    double h() const { return (hi - lo) / bins; }
    double center(int b) const { return lo + (b + 0.5) * h(); }
    bool operator==(const GridGeometry&) const = default;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: draw i of stream `seed` is splitmix64(seed + i).
// Stateless apart from the counter, so runs are reproducible from the seed
// alone and independent draws can be indexed directly.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return splitmix64(seed_ + counter_++); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace dht
