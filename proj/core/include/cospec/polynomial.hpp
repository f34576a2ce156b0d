#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cospec {

/// Univariate polynomial with exact 64-bit integer coefficients, constant term
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients. Arithmetic throws std::overflow_error instead of wrapping.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> coefficients);
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);

    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    /// The monomial z^degree.
    static IntPolynomial monomial(int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    std::int64_t operator[](int power) const;
    const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    IntPolynomial pow(int exponent) const;

    /// Horner evaluation in double precision.
    double operator()(double z) const;

    /// e.g. "1 - 2z^2 + z^3".
    std::string str() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();

    std::vector<std::int64_t> coefficients_;
};

} // namespace cospec
