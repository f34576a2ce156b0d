#include "cospec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial coefficient overflow");
    return r;
}

} // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : coefficients_(coefficients) {
    trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::int64_t IntPolynomial::operator[](int power) const {
    if (power < 0 || power > degree()) return 0;
    return coefficients_[static_cast<std::size_t>(power)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), 0);
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] = checked_add(coefficients_[i], rhs.coefficients_[i]);
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), 0);
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        if (rhs.coefficients_[i] == INT64_MIN) throw std::overflow_error("IntPolynomial coefficient overflow");
        coefficients_[i] = checked_add(coefficients_[i], -rhs.coefficients_[i]);
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (coefficients_.empty() || rhs.coefficients_.empty()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<std::int64_t> out(coefficients_.size() + rhs.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(coefficients_[i], rhs.coefficients_[j]));
        }
    }
    coefficients_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

double IntPolynomial::operator()(double z) const {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * z + static_cast<double>(*it);
    }
    return acc;
}

std::string IntPolynomial::str() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        auto c = coefficients_[i];
        if (c == 0) continue;
        auto magnitude = c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1 || i == 0) out += std::to_string(magnitude);
        if (i >= 1) out += "z";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace cospec
