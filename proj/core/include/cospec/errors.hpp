#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

/// Input outside the configured working range (k cap, prime bound cap, n limits).
class BoundedInputError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotAForestError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An Euler factor q(1/p) came out <= 0; the polynomial cannot be a forest Q.
class NonpositiveFactorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal cross-check failed (e.g. a probability left [0, 1]).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cospec
