#include "cospec/graph_polynomials.hpp"

#include <stdexcept>
#include <utility>

namespace cospec {
namespace {

// excluded[v] / included[v] count independent sets of the subtree below v
// that avoid / contain v. Iterative post-order keeps long paths off the stack.
IntPolynomial component_independence(const std::vector<std::vector<int>>& adjacency, int root) {
    const auto n = adjacency.size();
    std::vector<int> parent(n, -1);
    std::vector<int> order;
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adjacency[v]) {
            if (parent[w] == -1) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }

    const IntPolynomial z = IntPolynomial::monomial(1);
    std::vector<IntPolynomial> excluded(n, IntPolynomial{1});
    std::vector<IntPolynomial> included(n, z);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v == root) continue;
        int p = parent[v];
        excluded[p] *= excluded[v] + included[v];
        included[p] *= excluded[v];
    }
    return excluded[root] + included[root];
}

} // namespace

IntPolynomial independence_polynomial(const Forest& forest) {
    auto adjacency = forest.adjacency();
    IntPolynomial result{1};
    for (const auto& component : forest.components()) {
        result *= component_independence(adjacency, component.front());
    }
    return result;
}

IntPolynomial q_from_independence(const IntPolynomial& independence, int vertexCount) {
    if (independence.degree() > vertexCount) {
        throw std::invalid_argument("independence polynomial degree exceeds vertex count");
    }
    const IntPolynomial oneMinusZ{1, -1};
    IntPolynomial result;
    for (int m = 0; m <= independence.degree(); ++m) {
        if (independence[m] == 0) continue;
        result += IntPolynomial::constant(independence[m]) * oneMinusZ.pow(vertexCount - m) *
                  IntPolynomial::monomial(m);
    }
    return result;
}

IntPolynomial q_polynomial(const Forest& forest) {
    return q_from_independence(independence_polynomial(forest), forest.vertexCount());
}

IntPolynomial q_complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    return IntPolynomial{1, -1}.pow(k - 1) * IntPolynomial{1, k - 1};
}

} // namespace cospec
