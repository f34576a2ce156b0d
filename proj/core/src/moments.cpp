#include "cospec/moments.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cospec/errors.hpp"
#include "cospec/graph_polynomials.hpp"
#include "cospec/tree_shape.hpp"

namespace cospec {
namespace {

constexpr double kRangeSlack = 1e-9;

void check_kmax(int kMax, int maxK) {
    if (kMax < 1 || kMax > maxK) {
        throw BoundedInputError("kMax = " + std::to_string(kMax) + " outside [1, " + std::to_string(maxK) + "]");
    }
}

// First-order propagation of a relative log-tail onto an absolute error.
double absolute_tail(const EulerProduct& a) { return std::fabs(a.value) * std::expm1(a.tailBound); }

template <class Lookup>
TermValue signed_subset_sum(const CatalanWord& word, Lookup&& lookup) {
    const auto tree = word_to_tree(word);
    const auto k = static_cast<unsigned>(word.k());
    TermValue term;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const auto a = lookup(subgraph_for_edges(tree, mask));
        term.value += (std::popcount(mask) % 2 ? -1.0 : 1.0) * a.value;
        term.tailBound += absolute_tail(a);
    }
    if (term.value < -term.tailBound - kRangeSlack || term.value > 1.0 + term.tailBound + kRangeSlack) {
        throw ConsistencyError("invisible term for " + word.str() + " = " + std::to_string(term.value) +
                               " lies outside [0, 1]");
    }
    return term;
}

template <class WordTerm>
MomentTable sum_over_words(int kMax, int maxK, WordTerm&& wordTerm) {
    check_kmax(kMax, maxK);
    MomentTable table{Ensemble::invisible, {}, true};
    for (int k = 1; k <= kMax; ++k) {
        MomentValue m{k, 0.0, 0.0};
        for (const auto& word : enumerate_catalan_words(k, maxK)) {
            const auto t = wordTerm(word);
            m.value += t.value;
            m.tailBound += t.tailBound;
        }
        table.evenMoments.push_back(m);
    }
    return table;
}

} // namespace

std::string_view ensemble_label(Ensemble ensemble) {
    switch (ensemble) {
    case Ensemble::wigner:
        return "W";
    case Ensemble::visible:
        return "VW";
    case Ensemble::invisible:
        return "IVW";
    }
    return "?";
}

const MomentValue& MomentTable::at(int k) const {
    for (const auto& m : evenMoments) {
        if (m.k == k) return m;
    }
    throw std::out_of_range("moment for k = " + std::to_string(k) + " not in table");
}

EulerProduct coprimality_constant(const Forest& forest, const PrimeTable& primes) {
    return euler_product(q_polynomial(forest.withoutIsolatedVertices()), primes);
}

EulerProduct AValueCache::get(const Forest& forest) { return get(forest_shape_code(forest), forest); }

EulerProduct AValueCache::get(const std::string& shapeCode, const Forest& forest) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(shapeCode); it != entries_.end()) return it->second;
    }
    auto computed = coprimality_constant(forest, *primes_);
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(shapeCode, std::move(computed)).first->second;
}

void AValueCache::inject(const std::string& shapeCode, EulerProduct value) {
    std::lock_guard lock(mutex_);
    entries_.insert_or_assign(shapeCode, std::move(value));
}

std::size_t AValueCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

Forest subgraph_for_positions(const LabeledTree& tree, std::span<const int> positions) {
    std::uint32_t mask = 0;
    for (int i : positions) {
        if (i < 0 || i >= static_cast<int>(tree.positionToEdge.size())) {
            throw std::out_of_range("circuit position " + std::to_string(i) + " out of range");
        }
        mask |= 1u << tree.positionToEdge[static_cast<std::size_t>(i)];
    }
    return subgraph_for_edges(tree, mask);
}

Forest subgraph_for_positions(const CatalanWord& word, std::span<const int> positions) {
    return subgraph_for_positions(word_to_tree(word), positions);
}

Forest subgraph_for_edges(const LabeledTree& tree, std::uint32_t edgeMask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
        if (edgeMask >> e & 1u) edges.push_back(tree.edges[e]);
    }
    return Forest(tree.vertexCount, std::move(edges));
}

std::vector<SubgraphTerm> invisible_word_expansion(const CatalanWord& word) {
    const auto tree = word_to_tree(word);
    const auto k = static_cast<unsigned>(word.k());
    std::map<std::pair<std::string, int>, std::int64_t> grouped;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const int sign = std::popcount(mask) % 2 ? -1 : 1;
        ++grouped[{forest_shape_code(subgraph_for_edges(tree, mask)), sign}];
    }
    std::vector<SubgraphTerm> terms;
    for (const auto& [key, count] : grouped) terms.push_back({key.first, key.second, count});
    return terms;
}

MomentTable semicircle_moments(int kMax) {
    if (kMax < 1) throw BoundedInputError("kMax must be >= 1");
    MomentTable table{Ensemble::wigner, {}, true};
    for (int k = 1; k <= kMax; ++k) {
        table.evenMoments.push_back({k, static_cast<double>(catalan_number(k)), 0.0});
    }
    return table;
}

MomentTable visible_moments(int kMax, AValueCache& cache, int maxK) {
    check_kmax(kMax, maxK);
    MomentTable table{Ensemble::visible, {}, true};
    for (int k = 1; k <= kMax; ++k) {
        MomentValue m{k, 0.0, 0.0};
        // One representative labeled tree per shape is enough to evaluate A_T.
        std::map<TreeShape, std::pair<std::int64_t, Forest>> byShape;
        for (const auto& word : enumerate_catalan_words(k, maxK)) {
            auto forest = word_to_tree(word).forest();
            auto [it, inserted] = byShape.try_emplace(canonical_shape(forest), 0, forest);
            ++it->second.first;
        }
        for (const auto& [shape, entry] : byShape) {
            const auto a = cache.get(shape.canonicalCode, entry.second);
            const auto count = static_cast<double>(entry.first);
            m.value += count * a.value;
            m.tailBound += count * absolute_tail(a);
        }
        table.evenMoments.push_back(m);
    }
    return table;
}

MomentTable visible_moments(int kMax, const PrimeTable& primes, int maxK) {
    AValueCache cache(primes);
    return visible_moments(kMax, cache, maxK);
}

TermValue invisible_word_term(const CatalanWord& word, AValueCache& cache) {
    return signed_subset_sum(word, [&](const Forest& h) { return cache.get(h); });
}

TermValue invisible_word_term(const CatalanWord& word, const PrimeTable& primes) {
    return signed_subset_sum(word, [&](const Forest& h) { return coprimality_constant(h, primes); });
}

MomentTable invisible_moments(int kMax, AValueCache& cache, int maxK) {
    return sum_over_words(kMax, maxK, [&](const CatalanWord& w) { return invisible_word_term(w, cache); });
}

MomentTable invisible_moments(int kMax, const PrimeTable& primes, int maxK) {
    return sum_over_words(kMax, maxK, [&](const CatalanWord& w) { return invisible_word_term(w, primes); });
}

} // namespace cospec
