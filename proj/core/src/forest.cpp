#include "cospec/forest.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

Edge normalized(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

} // namespace

bool is_forest(int vertexCount, const std::vector<Edge>& edges) {
    if (vertexCount < 0) return false;
    DisjointSets sets(vertexCount);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertexCount || v >= vertexCount || u == v) return false;
        if (!sets.unite(u, v)) return false;
    }
    return true;
}

bool is_complete_graph(int vertexCount, const std::vector<Edge>& edges) {
    if (vertexCount < 1) return false;
    std::set<Edge> seen;
    for (auto e : edges) {
        e = normalized(e);
        if (e.first < 0 || e.second >= vertexCount || e.first == e.second) return false;
        if (!seen.insert(e).second) return false;
    }
    auto n = static_cast<std::size_t>(vertexCount);
    return seen.size() == n * (n - 1) / 2;
}

Forest::Forest(int vertexCount, std::vector<Edge> edges) : vertexCount_(vertexCount), edges_(std::move(edges)) {
    for (auto& e : edges_) e = normalized(e);
    if (!is_forest(vertexCount_, edges_)) {
        throw NotAForestError("edge list on " + std::to_string(vertexCount_) +
                              " vertices is not a simple acyclic graph");
    }
}

std::vector<std::vector<int>> Forest::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertexCount_));
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<std::vector<int>> Forest::components() const {
    DisjointSets sets(vertexCount_);
    for (auto [u, v] : edges_) sets.unite(u, v);
    std::vector<std::vector<int>> byRoot(static_cast<std::size_t>(vertexCount_));
    for (int v = 0; v < vertexCount_; ++v) byRoot[sets.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : byRoot) {
        if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
}

Forest Forest::disjointUnion(const Forest& other) const {
    std::vector<Edge> edges = edges_;
    for (auto [u, v] : other.edges_) edges.emplace_back(u + vertexCount_, v + vertexCount_);
    return Forest(vertexCount_ + other.vertexCount_, std::move(edges));
}

Forest Forest::withoutIsolatedVertices() const {
    std::vector<int> relabel(static_cast<std::size_t>(vertexCount_), -1);
    for (auto [u, v] : edges_) relabel[u] = relabel[v] = 0;
    int next = 0;
    for (auto& r : relabel) {
        if (r == 0) r = next++;
    }
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (auto [u, v] : edges_) edges.emplace_back(relabel[u], relabel[v]);
    return Forest(next, std::move(edges));
}

} // namespace cospec
