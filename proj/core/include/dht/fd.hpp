#pragma once

#include <cstddef>
#include <vector>

#include "dht/common.hpp"

namespace dht {

// Second-order finite differences on a uniform grid: central stencils on
// interior cells, one-sided second-order stencils at the two boundaries.
// These are the shared stencils of the density and quantum layers.

std::vector<double> fd_gradient(const std::vector<double>& f, double h);
std::vector<double> fd_second_derivative(const std::vector<double>& f, double h);

}  // namespace dht
