#pragma once

#include <cstdint>
#include <string>

#include "cospec/forest.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/primes.hpp"

namespace cospec {

/// Truncated Euler product prod_{p <= primeBound} q(1/p) with a rigorous
/// bound on the neglected factors: the infinite product lies in
/// [value * exp(-tailBound), value * exp(tailBound)].
struct EulerProduct {
    double value = 1.0;
    double tailBound = 0.0;
    std::int64_t primeBound = 0;
    IntPolynomial polynomial;

    double lower() const;
    double upper() const;
};

/// Requires q(0) = 1 and a vanishing linear coefficient. With
/// M = 2 sum_{j>=2} |q_j| every neglected factor satisfies |log q(1/p)| <= M / p^2,
/// and sum_{p > P} p^-2 < 1/(P-1); the reported tail is 2M/(P-1).
///
/// Throws std::invalid_argument on a polynomial without that shape and
/// NonpositiveFactorError when some q(1/p) <= 0.
EulerProduct euler_product(const IntPolynomial& q, const PrimeTable& primes);

/// Exact counts can exceed 2^64 (n^4 at n = 10^5).
__extension__ typedef unsigned __int128 ExactCount;

std::string to_string(ExactCount value);

inline constexpr std::int64_t kMaxNestedLoopN = 100'000;
inline constexpr int kMaxCountVertices = 4;

/// Number of tuples in [n]^V with gcd 1 across every edge of `forest`.
/// A lone edge on two vertices may use n up to kMaxTotientN (2 sum phi - 1);
/// otherwise |V| <= 4 and n <= 10^5. Stars use Moebius inversion, the
/// remaining trees a direct gcd-checked loop. Throws BoundedInputError
/// outside those limits.
ExactCount coprime_tuple_count(const Forest& forest, std::int64_t n);

} // namespace cospec
