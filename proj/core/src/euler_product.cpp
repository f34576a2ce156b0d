#include "cospec/euler_product.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

// Beyond this degree factors are accumulated as a sum of log1p terms.
constexpr int kLogSpaceDegree = 6;

} // namespace

double EulerProduct::lower() const { return value * std::exp(-tailBound); }
double EulerProduct::upper() const { return value * std::exp(tailBound); }

EulerProduct euler_product(const IntPolynomial& q, const PrimeTable& primes) {
    if (q[0] != 1 || q[1] != 0) {
        throw std::invalid_argument("euler_product needs q(0) = 1 and no linear term, got " + q.str());
    }

    double absSum = 0.0;
    for (int j = 2; j <= q.degree(); ++j) absSum += std::fabs(static_cast<double>(q[j]));
    const double weight = 2.0 * absSum;
    const auto bound = static_cast<double>(primes.bound());

    // Every neglected prime is > P, so |q(1/p) - 1| <= (M/2) p^-2 < (M/2) P^-2,
    // which must stay <= 1/2 for the log estimate to hold.
    if (0.5 * weight / (bound * bound) > 0.5) {
        throw BoundedInputError("prime bound " + std::to_string(primes.bound()) +
                                " too small for a rigorous tail bound on " + q.str());
    }

    EulerProduct out;
    out.polynomial = q;
    out.primeBound = primes.bound();
    out.tailBound = 2.0 * weight / (bound - 1.0);

    const bool logSpace = q.degree() > kLogSpaceDegree;
    double product = 1.0;
    double logSum = 0.0;
    for (std::uint32_t p : primes.primes()) {
        const double x = 1.0 / static_cast<double>(p);
        // q(x) - 1 = x^2 * (q_2 + q_3 x + ...), evaluated without the constant.
        double excess = 0.0;
        for (int j = q.degree(); j >= 2; --j) excess = excess * x + static_cast<double>(q[j]);
        excess *= x * x;
        const double factor = 1.0 + excess;
        if (!(factor > 0.0)) {
            throw NonpositiveFactorError("q(1/" + std::to_string(p) + ") <= 0 for " + q.str());
        }
        if (logSpace) {
            logSum += std::log1p(excess);
        } else {
            product *= factor;
        }
    }
    out.value = logSpace ? std::exp(logSum) : product;
    return out;
}

std::string to_string(ExactCount value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return digits;
}

} // namespace cospec
