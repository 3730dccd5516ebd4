#pragma once

#include <string>
#include <vector>

#include "dht/density.hpp"

namespace dht {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;  // one line per check
};

// Expansion-constant checks, ultrametric law sweeps, oracle equivalences,
// analytic quantum-potential cases, manufactured-solution residual
// convergence, geodesic conservation, and a determinism round trip.
// Fixed internal seeds keep repeated runs byte-identical.
VerifyReport run_verification();

// Max deviation of a quantum-potential field from the Gaussian closed form
// Q^2/(4 sigma^4) - 1/(2 sigma^2) over interior cells (used by the Gaussian
// check; exposed so fault-injection tests can feed a corrupted field).
double gaussian_uq_max_interior_error(const std::vector<double>& uq, const GridGeometry& geom,
                                      double sigma, int skip_boundary = 3);

}  // namespace dht
