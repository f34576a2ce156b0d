#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/forest.hpp"

namespace cospec {

inline constexpr int kDefaultMaxK = 10;

/// Pair-matched word of length 2k that reduces to the empty word by
/// repeatedly deleting adjacent double letters. Letters are ids 0..k-1 whose
/// first occurrences appear in increasing order.
class CatalanWord {
public:
    /// Throws std::invalid_argument unless `letters` satisfies all invariants.
    explicit CatalanWord(std::vector<std::uint8_t> letters);

    /// Parses a plain letter string such as "abccba".
    static CatalanWord parse(std::string_view text);

    int k() const { return static_cast<int>(letters_.size() / 2); }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<std::uint8_t>& letters() const { return letters_; }
    std::uint8_t operator[](int position) const { return letters_[static_cast<std::size_t>(position)]; }

    /// Position of the other occurrence of the letter at `position`.
    int partner(int position) const;

    std::string str() const;

    auto operator<=>(const CatalanWord&) const = default;

private:
    std::vector<std::uint8_t> letters_;
};

/// Identification tree G(w) of a Catalan word.
///
/// Circuit vertex i (0 <= i < 2k, with 2k identified with 0) is mapped to a
/// tree vertex; tree vertices are numbered by first appearance along the
/// circuit, so circuit vertex 0 is tree vertex 0. Edge e is the edge walked
/// by the two circuit steps carrying letter e.
struct LabeledTree {
    int vertexCount = 0;
    std::vector<Edge> edges;
    /// Step i walks circuit vertex i -> i+1 along edge positionToEdge[i].
    std::vector<int> positionToEdge;
    /// Tree vertex of every circuit vertex.
    std::vector<int> circuitToVertex;
    /// Smallest circuit vertex collapsed onto each tree vertex.
    std::vector<int> firstCircuitVertex;

    Forest forest() const { return Forest(vertexCount, edges); }
};

/// Canonical code of an unlabeled tree (center-rooted AHU parenthesis string).
struct TreeShape {
    std::string canonicalCode;
    int vertexCount = 0;

    auto operator<=>(const TreeShape&) const = default;
};

/// All Catalan words of length 2k in lexicographic order.
/// Throws BoundedInputError when k is outside [1, maxK].
std::vector<CatalanWord> enumerate_catalan_words(int k, int maxK = kDefaultMaxK);

LabeledTree word_to_tree(const CatalanWord& word);

/// Throws NotAForestError when `tree` is not a connected tree.
TreeShape canonical_shape(const LabeledTree& tree);
TreeShape canonical_shape(const Forest& tree);

/// Number of Catalan words of length 2k per unlabeled shape of G(w).
std::map<TreeShape, std::int64_t> shape_census(int k, int maxK = kDefaultMaxK);

/// k-th Catalan number, exact for k <= 33.
std::int64_t catalan_number(int k);

} // namespace cospec
