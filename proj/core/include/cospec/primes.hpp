#pragma once

#include <cstdint>
#include <vector>

namespace cospec {

inline constexpr std::int64_t kMaxPrimeBound = 100'000'000;
inline constexpr std::int64_t kDefaultPrimeBound = 1'000'000;
inline constexpr std::int64_t kMaxTotientN = 100'000'000;

/// All primes <= bound, ascending. Immutable once built.
class PrimeTable {
public:
    PrimeTable(std::int64_t bound, std::vector<std::uint32_t> primes)
        : bound_(bound), primes_(std::move(primes)) {}

    std::int64_t bound() const { return bound_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

private:
    std::int64_t bound_;
    std::vector<std::uint32_t> primes_;
};

/// Odd-only sieve of Eratosthenes. Throws BoundedInputError unless
/// 2 <= bound <= maxBound.
PrimeTable sieve_primes(std::int64_t bound, std::int64_t maxBound = kMaxPrimeBound);

/// sum_{j=1}^{n} phi(j), via a segmented totient sieve (memory O(sqrt n)).
/// Throws BoundedInputError unless 0 <= n <= kMaxTotientN.
std::uint64_t totient_sum(std::int64_t n);

/// Moebius function mu(0..n); entry 0 is unused and set to 0.
std::vector<std::int8_t> mobius_table(std::int64_t n);

} // namespace cospec
