#include "cospec/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

PrimeTable sieve_primes(std::int64_t bound, std::int64_t maxBound) {
    if (bound < 2 || bound > maxBound) {
        throw BoundedInputError("prime bound " + std::to_string(bound) + " outside [2, " +
                                std::to_string(maxBound) + "]");
    }
    // composite[i] describes the odd number 2i + 1.
    const auto half = static_cast<std::size_t>((bound - 1) / 2 + 1);
    std::vector<std::uint8_t> composite(half, 0);
    composite[0] = 1;
    for (std::int64_t p = 3; p * p <= bound; p += 2) {
        if (composite[static_cast<std::size_t>(p / 2)]) continue;
        for (std::int64_t m = p * p; m <= bound; m += 2 * p) composite[static_cast<std::size_t>(m / 2)] = 1;
    }
    std::vector<std::uint32_t> primes{2};
    for (std::size_t i = 1; i < half; ++i) {
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
    }
    return PrimeTable(bound, std::move(primes));
}

std::uint64_t totient_sum(std::int64_t n) {
    if (n < 0 || n > kMaxTotientN) {
        throw BoundedInputError("totient_sum: n = " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxTotientN) + "]");
    }
    if (n == 0) return 0;
    const std::int64_t root = isqrt(n);
    const auto small = root >= 2 ? sieve_primes(root).primes() : std::vector<std::uint32_t>{};

    constexpr std::int64_t kBlock = 1 << 18;
    std::vector<std::uint64_t> phi(kBlock);
    std::vector<std::uint64_t> rest(kBlock);
    std::uint64_t total = 0;
    for (std::int64_t lo = 1; lo <= n; lo += kBlock) {
        const std::int64_t hi = std::min(n + 1, lo + kBlock);
        const auto len = static_cast<std::size_t>(hi - lo);
        for (std::size_t i = 0; i < len; ++i) phi[i] = rest[i] = static_cast<std::uint64_t>(lo) + i;
        for (std::uint32_t p : small) {
            const std::int64_t first = (lo + p - 1) / p * p;
            for (std::int64_t m = first; m < hi; m += p) {
                auto i = static_cast<std::size_t>(m - lo);
                phi[i] -= phi[i] / p;
                do {
                    rest[i] /= p;
                } while (rest[i] % p == 0);
            }
        }
        // What is left above 1 is a single prime factor larger than sqrt(n).
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[i] > 1) phi[i] -= phi[i] / rest[i];
            total += phi[i];
        }
    }
    return total;
}

std::vector<std::int8_t> mobius_table(std::int64_t n) {
    const auto size = static_cast<std::size_t>(std::max<std::int64_t>(n, 0) + 1);
    std::vector<std::int8_t> mu(size, 1);
    std::vector<std::uint8_t> composite(size, 0);
    mu[0] = 0;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t m = p; m <= n; m += p) {
            composite[static_cast<std::size_t>(m)] = m != p;
            mu[static_cast<std::size_t>(m)] = static_cast<std::int8_t>(-mu[static_cast<std::size_t>(m)]);
        }
        for (std::int64_t sq = p * p, m = sq; m <= n; m += sq) mu[static_cast<std::size_t>(m)] = 0;
    }
    return mu;
}

} // namespace cospec
