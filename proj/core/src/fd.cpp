#include "dht/fd.hpp"

namespace dht {

// Stencils are written as combinations of neighbor differences so constant
// fields are annihilated exactly in floating point.

std::vector<double> fd_gradient(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 3) throw NumericError("fd_gradient: need at least 3 cells");
    std::vector<double> g(n);
    // (-3 f0 + 4 f1 - f2)/2h
    g[0] = (3.0 * (f[1] - f[0]) - (f[2] - f[1])) / (2.0 * h);
    for (std::size_t b = 1; b + 1 < n; ++b) {
        g[b] = (f[b + 1] - f[b - 1]) / (2.0 * h);
    }
    // (3 f_{n-1} - 4 f_{n-2} + f_{n-3})/2h
    g[n - 1] = (3.0 * (f[n - 1] - f[n - 2]) - (f[n - 2] - f[n - 3])) / (2.0 * h);
    return g;
}

std::vector<double> fd_second_derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 4) throw NumericError("fd_second_derivative: need at least 4 cells");
    std::vector<double> g(n);
    const double h2 = h * h;
    // (2 f0 - 5 f1 + 4 f2 - f3)/h^2
    g[0] = (2.0 * (f[0] - f[1]) - 3.0 * (f[1] - f[2]) + (f[2] - f[3])) / h2;
    for (std::size_t b = 1; b + 1 < n; ++b) {
        g[b] = ((f[b + 1] - f[b]) - (f[b] - f[b - 1])) / h2;
    }
    g[n - 1] =
        (2.0 * (f[n - 1] - f[n - 2]) - 3.0 * (f[n - 2] - f[n - 3]) + (f[n - 3] - f[n - 4])) / h2;
    return g;
}

}  // namespace dht
