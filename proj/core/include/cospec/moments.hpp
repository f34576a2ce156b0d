#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cospec/catalan.hpp"
#include "cospec/euler_product.hpp"
#include "cospec/forest.hpp"

namespace cospec {

enum class Ensemble { wigner, visible, invisible };

/// "W", "VW", "IVW".
std::string_view ensemble_label(Ensemble ensemble);

struct MomentValue {
    int k = 0;
    double value = 0.0;
    double tailBound = 0.0;
};

/// Limit moments m_{2k} for k = 1..kMax. Odd moments are identically zero.
struct MomentTable {
    Ensemble ensemble = Ensemble::wigner;
    std::vector<MomentValue> evenMoments;
    bool oddMomentsZero = true;

    /// m_{2k}; throws std::out_of_range if k was not computed.
    const MomentValue& at(int k) const;
};

struct TermValue {
    double value = 0.0;
    double tailBound = 0.0;
};

/// A_H = prod_p Q_H(1/p) for a forest H (isolated vertices are ignored).
EulerProduct coprimality_constant(const Forest& forest, const PrimeTable& primes);

/// Memo of A_H keyed by the canonical shape of H with isolated vertices
/// dropped. Thread-safe get-or-compute; concurrent misses may compute the
/// same entry twice but the first stored value wins.
class AValueCache {
public:
    explicit AValueCache(const PrimeTable& primes) : primes_(&primes) {}

    EulerProduct get(const Forest& forest);
    EulerProduct get(const std::string& shapeCode, const Forest& forest);

    /// Overwrites an entry; used by verification to check that a corrupted
    /// cache is detected.
    void inject(const std::string& shapeCode, EulerProduct value);

    std::size_t size() const;
    const PrimeTable& primes() const { return *primes_; }

private:
    const PrimeTable* primes_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, EulerProduct> entries_;
};

/// One signed, grouped term of the invisible inclusion-exclusion for a word.
struct SubgraphTerm {
    std::string shapeCode;
    int sign = 1;
    std::int64_t multiplicity = 1;
};

/// H_{w; positions}: the sub-forest of G(w) on all k+1 vertices whose edges
/// are the edges walked at the given circuit positions.
Forest subgraph_for_positions(const LabeledTree& tree, std::span<const int> positions);
Forest subgraph_for_positions(const CatalanWord& word, std::span<const int> positions);

/// Sub-forest of G(w) with edge e present iff bit e of `edgeMask` is set.
Forest subgraph_for_edges(const LabeledTree& tree, std::uint32_t edgeMask);

/// sum_{E' subset of E(G(w))} (-1)^{|E'|} H(E'), grouped by shape and sign.
std::vector<SubgraphTerm> invisible_word_expansion(const CatalanWord& word);

MomentTable semicircle_moments(int kMax);

/// m_{2k}^{VW} = sum_T n(T) A_T over unlabeled trees T on k+1 vertices.
MomentTable visible_moments(int kMax, AValueCache& cache, int maxK = kDefaultMaxK);
MomentTable visible_moments(int kMax, const PrimeTable& primes, int maxK = kDefaultMaxK);

/// p(w) = sum_{E' subset of E(G(w))} (-1)^{|E'|} A_{H(E')}. Each edge of G(w)
/// is walked at exactly two circuit positions, and the nonempty position
/// subsets of a pair carry signs summing to -1, which collapses the 2^{2k}
/// position-subset sum onto 2^k edge subsets.
/// Throws ConsistencyError if the result leaves [0, 1] beyond its tail bound.
TermValue invisible_word_term(const CatalanWord& word, AValueCache& cache);
/// Uncached variant: every A_H is recomputed from scratch.
TermValue invisible_word_term(const CatalanWord& word, const PrimeTable& primes);

/// m_{2k}^{IVW} = sum over Catalan words of p(w).
MomentTable invisible_moments(int kMax, AValueCache& cache, int maxK = kDefaultMaxK);
MomentTable invisible_moments(int kMax, const PrimeTable& primes, int maxK = kDefaultMaxK);

} // namespace cospec
