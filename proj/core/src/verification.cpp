#include "cospec/verification.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cospec/euler_product.hpp"
#include "cospec/free_cumulants.hpp"
#include "cospec/graph_polynomials.hpp"
#include "cospec/moments.hpp"
#include "cospec/tree_shape.hpp"

namespace cospec {
namespace {

constexpr double kSixOverPiSquared = 6.0 / (std::numbers::pi * std::numbers::pi);
constexpr double kExactTolerance = 1e-12;
// Unlabeled trees on k+1 vertices, k = 1..7.
constexpr std::array<std::int64_t, 7> kTreeCounts{1, 1, 2, 3, 6, 11, 23};

CheckResult make_check(std::string name, double delta, double tolerance, std::string detail = {}) {
    return CheckResult{std::move(name), delta, tolerance, delta <= tolerance, std::move(detail)};
}

// Q_G by enumerating vertex subsets of an arbitrary small graph.
IntPolynomial brute_force_q(int vertexCount, const std::vector<Edge>& edges) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(vertexCount) + 1, 0);
    for (std::uint32_t subset = 0; subset < (1u << vertexCount); ++subset) {
        bool independent = std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return (subset >> e.first & 1u) && (subset >> e.second & 1u);
        });
        if (independent) ++counts[static_cast<std::size_t>(std::popcount(subset))];
    }
    return q_from_independence(IntPolynomial(std::move(counts)), vertexCount);
}

std::vector<Edge> complete_edges(int k) {
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return edges;
}

CheckResult census_check() {
    double mismatches = 0;
    std::ostringstream detail;
    for (int k = 1; k <= static_cast<int>(kTreeCounts.size()); ++k) {
        const auto words = static_cast<std::int64_t>(enumerate_catalan_words(k).size());
        const auto census = shape_census(k);
        std::int64_t total = 0;
        for (const auto& [shape, count] : census) total += count;
        const auto shapes = static_cast<std::int64_t>(census.size());
        if (words != catalan_number(k) || total != words || shapes != kTreeCounts[static_cast<std::size_t>(k - 1)]) {
            ++mismatches;
            detail << "k=" << k << " words=" << words << " shapes=" << shapes << "; ";
        }
    }
    return make_check("census: Catalan word counts and unlabeled tree counts, k=1..7", mismatches, 0.0,
                      detail.str());
}

CheckResult complete_graph_check() {
    double mismatches = 0;
    for (int k = 1; k <= 7; ++k) {
        if (q_complete_graph(k) != brute_force_q(k, complete_edges(k))) ++mismatches;
    }
    return make_check("closed-form Q of K_k equals subset enumeration, k=1..7", mismatches, 0.0);
}

CheckResult collapse_check(AValueCache& cache, const PrimeTable& primes) {
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        for (const auto& word : enumerate_catalan_words(k)) {
            const double collapsed = invisible_word_term(word, cache).value;
            worst = std::max(worst, std::fabs(collapsed - direct_invisible_word_term(word, primes)));
        }
    }
    return make_check("edge-subset inclusion-exclusion equals position-subset sum, k<=3", worst, kExactTolerance);
}

CheckResult cache_check(AValueCache& cache, const PrimeTable& primes) {
    const int kMax = 4;
    const auto cached = invisible_moments(kMax, cache);
    const auto direct = invisible_moments(kMax, primes);
    double worst = 0.0;
    for (int k = 1; k <= kMax; ++k) worst = std::max(worst, std::fabs(cached.at(k).value - direct.at(k).value));
    return make_check("cached and uncached invisible moments agree, k<=4", worst, kExactTolerance);
}

std::vector<CheckResult> second_moment_checks(AValueCache& cache) {
    const auto visible = visible_moments(1, cache).at(1);
    const auto invisible = invisible_moments(1, cache).at(1);
    std::vector<CheckResult> out;
    out.push_back(make_check("m2 visible equals 6/pi^2 within tail bound", std::fabs(visible.value - kSixOverPiSquared),
                             visible.tailBound));
    out.push_back(make_check("m2 visible + m2 invisible = 1", std::fabs(visible.value + invisible.value - 1.0), 1e-10));
    return out;
}

CheckResult euler_vs_count_check(const std::string& label, const Forest& forest, std::int64_t n,
                                 AValueCache& cache) {
    const auto a = cache.get(forest);
    const double ratio = static_cast<double>(coprime_tuple_count(forest, n)) /
                         std::pow(static_cast<double>(n), forest.vertexCount());
    const double rate = std::pow(std::log(static_cast<double>(n)), forest.vertexCount() - 1) / static_cast<double>(n);
    const double tolerance = 5.0 * (rate + a.tailBound);
    std::ostringstream detail;
    detail << "count ratio " << ratio << " vs A " << a.value;
    return make_check("finite-n coprime count vs Euler product: " + label + ", n=" + std::to_string(n),
                      std::fabs(ratio - a.value), tolerance, detail.str());
}

CheckResult semicircle_cumulant_check() {
    std::vector<double> moments(8, 0.0);
    for (int k = 1; k <= 4; ++k) moments[static_cast<std::size_t>(2 * k - 1)] = static_cast<double>(catalan_number(k));
    const auto kappa = free_cumulants_from_moments(moments);
    double worst = 0.0;
    for (std::size_t j = 0; j < kappa.size(); ++j) worst = std::max(worst, std::fabs(kappa[j] - (j == 1 ? 1.0 : 0.0)));
    return make_check("semicircle moments have free cumulants (0,1,0,...)", worst, kExactTolerance);
}

} // namespace

double direct_invisible_word_term(const CatalanWord& word, const PrimeTable& primes) {
    const auto tree = word_to_tree(word);
    const auto length = static_cast<unsigned>(word.length());
    double total = 0.0;
    std::vector<int> positions;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << length); ++subset) {
        positions.clear();
        for (unsigned i = 0; i < length; ++i) {
            if (subset >> i & 1u) positions.push_back(static_cast<int>(i));
        }
        const double a = coprimality_constant(subgraph_for_positions(tree, positions), primes).value;
        total += (positions.size() % 2 ? -1.0 : 1.0) * a;
    }
    return total;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
    const auto primes = sieve_primes(options.primeBound);
    AValueCache cache(primes);
    const Forest edge(2, {{0, 1}});
    if (options.corruptCache) {
        auto wrong = coprimality_constant(edge, primes);
        wrong.value *= 1.01;
        cache.inject(forest_shape_code(edge), wrong);
    }

    VerifyReport report;
    report.checks.push_back(census_check());
    report.checks.push_back(complete_graph_check());
    report.checks.push_back(semicircle_cumulant_check());
    for (auto& c : second_moment_checks(cache)) report.checks.push_back(std::move(c));
    report.checks.push_back(collapse_check(cache, primes));
    report.checks.push_back(cache_check(cache, primes));
    report.checks.push_back(euler_vs_count_check("single edge", edge, 100'000, cache));
    report.checks.push_back(euler_vs_count_check("3-path", Forest(3, {{0, 1}, {1, 2}}), 10'000, cache));
    report.checks.push_back(euler_vs_count_check("4-star", Forest(4, {{0, 1}, {0, 2}, {0, 3}}), 2'000, cache));
    report.checks.push_back(euler_vs_count_check("two disjoint edges", Forest(4, {{0, 1}, {2, 3}}), 10'000, cache));
    report.checks.push_back(euler_vs_count_check("4-path", Forest(4, {{0, 1}, {1, 2}, {2, 3}}), 300, cache));
    return report;
}

} // namespace cospec
