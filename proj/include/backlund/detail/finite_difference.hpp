#pragma once

#include <cstddef>
#include <vector>

namespace backlund::detail {

/// Second-order finite-difference derivative of uniformly sampled data:
/// central stencils for orders 1-2, the 4-point central stencil for order 3,
/// one-sided variants of the same order near the ends.
///
/// order must be 1, 2 or 3; f.size() must be >= 5.
std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order);

/// Number of samples at each end whose stencils are one-sided for the given
/// derivative order (half-width of the central stencil).
inline std::size_t fd_boundary_width(int order) { return order == 3 ? 2 : 1; }

}  // namespace backlund::detail
