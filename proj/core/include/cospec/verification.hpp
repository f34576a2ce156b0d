#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cospec/catalan.hpp"
#include "cospec/primes.hpp"

namespace cospec {

/// Literal inclusion-exclusion over all 2^{2k} subsets of circuit positions,
/// 1 + sum_{S nonempty} (-1)^{|S|} A_{H_{w;S}}, with no collapsing or caching.
/// Cost grows as 4^k; meant for k <= 4.
double direct_invisible_word_term(const CatalanWord& word, const PrimeTable& primes);

struct CheckResult {
    std::string name;
    double delta = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    std::int64_t primeBound = kDefaultPrimeBound;
    /// Replaces the cached single-edge constant with a wrong value before the
    /// checks run; every check that reads the cache must then fail.
    bool corruptCache = false;
};

/// Small-instance oracle suite: census against Catalan / tree counts,
/// collapsed versus literal inclusion-exclusion, finite-n coprime counts
/// versus Euler products, cached versus uncached moments, and closed forms.
VerifyReport run_verification(const VerifyOptions& options = {});

} // namespace cospec
