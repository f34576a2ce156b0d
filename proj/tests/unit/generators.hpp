#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cospec/catalan.hpp"
#include "cospec/forest.hpp"
#include "cospec/polynomial.hpp"

namespace cospec::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random Dyck path, letters assigned by stack matching.
inline CatalanWord random_catalan_word(Rng& rng, int k) {
    std::vector<std::uint8_t> letters;
    std::vector<std::uint8_t> stack;
    std::uint8_t next = 0;
    int opens = 0;
    while (static_cast<int>(letters.size()) < 2 * k) {
        const bool canOpen = opens < k;
        const bool canClose = !stack.empty();
        if (canOpen && (!canClose || uniform_int(rng, 0, 1) == 0)) {
            stack.push_back(next);
            letters.push_back(next++);
            ++opens;
        } else {
            letters.push_back(stack.back());
            stack.pop_back();
        }
    }
    return CatalanWord(std::move(letters));
}

// Random recursive tree with shuffled labels.
inline Forest random_tree(Rng& rng, int vertices) {
    std::vector<int> label(static_cast<std::size_t>(vertices));
    for (int v = 0; v < vertices; ++v) label[static_cast<std::size_t>(v)] = v;
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<Edge> edges;
    for (int v = 1; v < vertices; ++v) {
        edges.emplace_back(label[static_cast<std::size_t>(uniform_int(rng, 0, v - 1))], label[static_cast<std::size_t>(v)]);
    }
    return Forest(vertices, std::move(edges));
}

// Random tree with each edge dropped with probability 1/3.
inline Forest random_forest(Rng& rng, int vertices) {
    const auto tree = random_tree(rng, vertices);
    std::vector<Edge> kept;
    for (const auto& e : tree.edges()) {
        if (uniform_int(rng, 0, 2) != 0) kept.push_back(e);
    }
    return Forest(vertices, std::move(kept));
}

inline Forest relabel(const Forest& forest, const std::vector<int>& permutation) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : forest.edges()) {
        edges.emplace_back(permutation[static_cast<std::size_t>(u)], permutation[static_cast<std::size_t>(v)]);
    }
    return Forest(forest.vertexCount(), std::move(edges));
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline IntPolynomial random_polynomial(Rng& rng, int maxDegree, int maxCoefficient) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(uniform_int(rng, 0, maxDegree) + 1));
    for (auto& x : c) x = uniform_int(rng, -maxCoefficient, maxCoefficient);
    return IntPolynomial(std::move(c));
}

// Brute-force independence polynomial by subset enumeration.
inline IntPolynomial brute_independence(int vertices, const std::vector<Edge>& edges) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(vertices) + 1, 0);
    for (std::uint32_t s = 0; s < (1u << vertices); ++s) {
        bool independent = true;
        for (const auto& [u, v] : edges) {
            if ((s >> u & 1u) && (s >> v & 1u)) independent = false;
        }
        if (independent) ++counts[static_cast<std::size_t>(__builtin_popcount(s))];
    }
    return IntPolynomial(std::move(counts));
}

} // namespace cospec::testing
