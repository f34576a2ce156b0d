#include "cospec/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cospec/errors.hpp"
#include "cospec/tree_shape.hpp"

namespace cospec {
namespace {

constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

void check_k(int k, int maxK) {
    if (k < 1 || k > maxK) {
        throw BoundedInputError("k = " + std::to_string(k) + " outside [1, " + std::to_string(maxK) + "]");
    }
}

// Dyck-path recursion; closing the innermost open letter sorts before opening
// a new one, so words come out in lexicographic order.
void extend(int k, std::vector<std::uint8_t>& prefix, std::vector<std::uint8_t>& open, int nextLetter,
            std::vector<CatalanWord>& out) {
    if (static_cast<int>(prefix.size()) == 2 * k) {
        out.emplace_back(prefix);
        return;
    }
    if (!open.empty()) {
        auto letter = open.back();
        open.pop_back();
        prefix.push_back(letter);
        extend(k, prefix, open, nextLetter, out);
        prefix.pop_back();
        open.push_back(letter);
    }
    if (nextLetter < k) {
        auto letter = static_cast<std::uint8_t>(nextLetter);
        open.push_back(letter);
        prefix.push_back(letter);
        extend(k, prefix, open, nextLetter + 1, out);
        prefix.pop_back();
        open.pop_back();
    }
}

} // namespace

CatalanWord::CatalanWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() % 2 != 0) {
        throw std::invalid_argument("Catalan word must have positive even length");
    }
    std::vector<int> seen(letters_.size() / 2, 0);
    int nextFirst = 0;
    std::vector<std::uint8_t> stack;
    for (auto letter : letters_) {
        if (letter >= seen.size()) throw std::invalid_argument("letter id exceeds half-length");
        if (seen[letter] == 0) {
            if (letter != nextFirst) throw std::invalid_argument("first occurrences out of alphabetical order");
            ++nextFirst;
        }
        if (++seen[letter] > 2) throw std::invalid_argument("letter occurs more than twice");
        if (!stack.empty() && stack.back() == letter) {
            stack.pop_back();
        } else {
            stack.push_back(letter);
        }
    }
    if (!stack.empty()) throw std::invalid_argument("word does not reduce to the empty word");
}

CatalanWord CatalanWord::parse(std::string_view text) {
    std::vector<std::uint8_t> letters;
    letters.reserve(text.size());
    for (char c : text) {
        auto pos = kAlphabet.find(c);
        if (pos == std::string_view::npos) throw std::invalid_argument(std::string("bad letter '") + c + "'");
        letters.push_back(static_cast<std::uint8_t>(pos));
    }
    return CatalanWord(std::move(letters));
}

int CatalanWord::partner(int position) const {
    auto letter = letters_[static_cast<std::size_t>(position)];
    for (int i = 0; i < length(); ++i) {
        if (i != position && letters_[static_cast<std::size_t>(i)] == letter) return i;
    }
    throw ConsistencyError("unmatched letter");
}

std::string CatalanWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto letter : letters_) {
        if (letter >= kAlphabet.size()) throw std::out_of_range("letter id has no printable form");
        out += kAlphabet[letter];
    }
    return out;
}

std::vector<CatalanWord> enumerate_catalan_words(int k, int maxK) {
    check_k(k, maxK);
    std::vector<CatalanWord> out;
    out.reserve(static_cast<std::size_t>(catalan_number(k)));
    std::vector<std::uint8_t> prefix;
    std::vector<std::uint8_t> open;
    extend(k, prefix, open, 0, out);
    return out;
}

LabeledTree word_to_tree(const CatalanWord& word) {
    const int len = word.length();
    const int k = word.k();

    // Union-find over circuit vertices 0..2k-1 (vertex 2k is vertex 0).
    std::vector<int> parent(static_cast<std::size_t>(len));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // (C2): steps i < j with equal letters walk the same edge in opposite
    // directions, so pi(i) = pi(j+1) and pi(i+1) = pi(j).
    for (int i = 0; i < len; ++i) {
        int j = word.partner(i);
        if (j < i) continue;
        unite(i, (j + 1) % len);
        unite((i + 1) % len, j);
    }

    LabeledTree tree;
    tree.circuitToVertex.assign(static_cast<std::size_t>(len), -1);
    std::vector<int> classToVertex(static_cast<std::size_t>(len), -1);
    for (int c = 0; c < len; ++c) {
        int root = find(c);
        if (classToVertex[root] < 0) {
            classToVertex[root] = tree.vertexCount++;
            tree.firstCircuitVertex.push_back(c);
        }
        tree.circuitToVertex[c] = classToVertex[root];
    }

    tree.edges.assign(static_cast<std::size_t>(k), Edge{-1, -1});
    tree.positionToEdge.resize(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        int e = word[i];
        int u = tree.circuitToVertex[i];
        int v = tree.circuitToVertex[(i + 1) % len];
        tree.edges[e] = {std::min(u, v), std::max(u, v)};
        tree.positionToEdge[i] = e;
    }

    if (tree.vertexCount != k + 1 || !is_forest(tree.vertexCount, tree.edges)) {
        throw ConsistencyError("G(" + word.str() + ") is not a tree on k+1 vertices");
    }
    return tree;
}

TreeShape canonical_shape(const Forest& tree) {
    if (tree.vertexCount() < 1 || static_cast<int>(tree.edgeCount()) != tree.vertexCount() - 1) {
        throw NotAForestError("canonical_shape expects a connected tree");
    }
    std::vector<int> all(static_cast<std::size_t>(tree.vertexCount()));
    std::iota(all.begin(), all.end(), 0);
    return TreeShape{unrooted_tree_code(tree.adjacency(), all), tree.vertexCount()};
}

TreeShape canonical_shape(const LabeledTree& tree) {
    return canonical_shape(tree.forest());
}

std::map<TreeShape, std::int64_t> shape_census(int k, int maxK) {
    std::map<TreeShape, std::int64_t> census;
    for (const auto& word : enumerate_catalan_words(k, maxK)) {
        ++census[canonical_shape(word_to_tree(word))];
    }
    return census;
}

std::int64_t catalan_number(int k) {
    if (k < 0 || k > 33) throw BoundedInputError("catalan_number: k outside [0, 33]");
    std::int64_t c = 1;
    for (int i = 0; i < k; ++i) {
        // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

} // namespace cospec
