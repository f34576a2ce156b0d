#pragma once

#include "cospec/forest.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// I_f(z) = sum_m i_m(f) z^m, where i_m counts independent vertex sets of
/// size m. Computed per component by a rooted include/exclude tree DP, each
/// component rooted at its lowest-indexed vertex, and multiplied together.
IntPolynomial independence_polynomial(const Forest& forest);

/// Q_f(z) = sum_m i_m(f) (1 - z)^{|V| - m} z^m. Q_f(1/p) is the probability
/// that no edge of f has both endpoints divisible by the prime p.
IntPolynomial q_polynomial(const Forest& forest);

/// Q for the complete graph K_k: (1 - z)^{k-1} (1 + (k - 1) z).
IntPolynomial q_complete_graph(int k);

/// Expands sum_m coefficients[m] (1 - z)^{vertexCount - m} z^m.
IntPolynomial q_from_independence(const IntPolynomial& independence, int vertexCount);

} // namespace cospec
