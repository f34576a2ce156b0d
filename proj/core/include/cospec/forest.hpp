#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Edge = std::pair<int, int>;

/// Simple undirected acyclic graph. Edges are stored with `first < second`.
/// Construction rejects self-loops, repeated edges and cycles.
class Forest {
public:
    Forest() = default;
    Forest(int vertexCount, std::vector<Edge> edges);

    static Forest edgeless(int vertexCount) { return Forest(vertexCount, {}); }

    int vertexCount() const { return vertexCount_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edgeCount() const { return edges_.size(); }

    std::vector<std::vector<int>> adjacency() const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    std::vector<std::vector<int>> components() const;

    /// Disjoint union; vertices of `other` are shifted by vertexCount().
    Forest disjointUnion(const Forest& other) const;

    /// Same edge set with every isolated vertex removed and the survivors
    /// renumbered in increasing order.
    Forest withoutIsolatedVertices() const;

    bool operator==(const Forest&) const = default;

private:
    int vertexCount_ = 0;
    std::vector<Edge> edges_;
};

/// True when the edge list (which may contain cycles) is acyclic and simple.
bool is_forest(int vertexCount, const std::vector<Edge>& edges);

/// True when every pair of distinct vertices is joined exactly once.
bool is_complete_graph(int vertexCount, const std::vector<Edge>& edges);

} // namespace cospec
