#pragma once

#include <span>
#include <vector>

namespace cospec {

inline constexpr int kMaxCumulantOrder = 8;

/// Block-size lists of every non-crossing partition of {1..n}, n <= 8.
std::vector<std::vector<int>> non_crossing_partitions(int n);

/// Solves m_j = sum_{pi in NC(j)} prod_{B in pi} kappa_{|B|} for kappa_1..kappa_n.
/// moments[0] holds m_1. Throws BoundedInputError when n > 8.
std::vector<double> free_cumulants_from_moments(std::span<const double> moments);

/// Inverse map: kappa_1..kappa_n -> m_1..m_n.
std::vector<double> moments_from_free_cumulants(std::span<const double> cumulants);

} // namespace cospec
