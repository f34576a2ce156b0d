#include <algorithm>
#include <numeric>
#include <string>

#include "cospec/errors.hpp"
#include "cospec/euler_product.hpp"

namespace cospec {
namespace {

// coprimeCount[x] = #{ y in [n] : gcd(x, y) = 1 } = sum_{d | x} mu(d) floor(n/d).
std::vector<std::int64_t> coprime_counts(std::int64_t n) {
    const auto mu = mobius_table(n);
    std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t d = 1; d <= n; ++d) {
        if (mu[static_cast<std::size_t>(d)] == 0) continue;
        const std::int64_t term = mu[static_cast<std::size_t>(d)] * (n / d);
        for (std::int64_t x = d; x <= n; x += d) count[static_cast<std::size_t>(x)] += term;
    }
    return count;
}

ExactCount star_count(std::int64_t n, std::size_t leaves) {
    const auto cop = coprime_counts(n);
    ExactCount total = 0;
    for (std::int64_t x = 1; x <= n; ++x) {
        ExactCount term = 1;
        for (std::size_t i = 0; i < leaves; ++i) term *= static_cast<ExactCount>(cop[static_cast<std::size_t>(x)]);
        total += term;
    }
    return total;
}

// Rooted tree DP with a direct gcd test for every (parent value, child value)
// pair: ways[v][x] counts assignments below v given v carries x.
ExactCount tree_loop_count(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& vertices,
                           std::int64_t n) {
    const int root = vertices.front();
    std::vector<int> parent(adjacency.size(), -2);
    std::vector<int> order;
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adjacency[v]) {
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }

    const auto width = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<ExactCount>> ways(adjacency.size());
    for (int v : vertices) ways[v].assign(width, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (v == root) continue;
        auto& up = ways[parent[v]];
        const auto& down = ways[v];
        for (std::int64_t x = 1; x <= n; ++x) {
            ExactCount sum = 0;
            for (std::int64_t y = 1; y <= n; ++y) {
                if (std::gcd(x, y) == 1) sum += down[static_cast<std::size_t>(y)];
            }
            up[static_cast<std::size_t>(x)] *= sum;
        }
    }
    ExactCount total = 0;
    for (std::int64_t x = 1; x <= n; ++x) total += ways[root][static_cast<std::size_t>(x)];
    return total;
}

} // namespace

ExactCount coprime_tuple_count(const Forest& forest, std::int64_t n) {
    if (n < 0) throw BoundedInputError("coprime_tuple_count: negative n");
    const bool loneEdge = forest.vertexCount() == 2 && forest.edgeCount() == 1;
    if (loneEdge) {
        if (n > kMaxTotientN) {
            throw BoundedInputError("coprime_tuple_count: n = " + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxTotientN) + " for a single edge");
        }
    } else if (forest.vertexCount() > kMaxCountVertices || n > kMaxNestedLoopN) {
        throw BoundedInputError("coprime_tuple_count: limited to <= 4 vertices and n <= 100000");
    }
    if (n == 0) return forest.vertexCount() == 0 ? 1 : 0;

    const auto adjacency = forest.adjacency();
    ExactCount total = 1;
    for (const auto& component : forest.components()) {
        const auto size = component.size();
        if (size == 1) {
            total *= static_cast<ExactCount>(n);
        } else if (size == 2) {
            total *= static_cast<ExactCount>(2 * totient_sum(n) - 1);
        } else {
            auto hub = std::find_if(component.begin(), component.end(),
                                    [&](int v) { return adjacency[v].size() == size - 1; });
            total *= hub != component.end() ? star_count(n, size - 1) : tree_loop_count(adjacency, component, n);
        }
    }
    return total;
}

} // namespace cospec
