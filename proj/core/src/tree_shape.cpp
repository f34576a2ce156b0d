#include "cospec/tree_shape.hpp"

#include <algorithm>
#include <unordered_map>

namespace cospec {
namespace {

std::string encode_below(const std::vector<std::vector<int>>& adjacency, int vertex, int parent) {
    std::vector<std::string> children;
    for (int next : adjacency[vertex]) {
        if (next != parent) children.push_back(encode_below(adjacency, next, vertex));
    }
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    code += ')';
    return code;
}

} // namespace

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<int>& vertices) {
    if (vertices.size() <= 2) return vertices;

    std::unordered_map<int, int> degree;
    std::vector<int> layer;
    for (int v : vertices) {
        degree[v] = static_cast<int>(adjacency[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    auto remaining = vertices.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<int> nextLayer;
        for (int leaf : layer) {
            for (int w : adjacency[leaf]) {
                if (--degree[w] == 1) nextLayer.push_back(w);
            }
        }
        layer = std::move(nextLayer);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_tree_code(const std::vector<std::vector<int>>& adjacency, int root) {
    return encode_below(adjacency, root, -1);
}

std::string unrooted_tree_code(const std::vector<std::vector<int>>& adjacency,
                               const std::vector<int>& vertices) {
    std::string best;
    for (int center : tree_centers(adjacency, vertices)) {
        auto code = rooted_tree_code(adjacency, center);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::string forest_shape_code(const Forest& forest) {
    auto adjacency = forest.adjacency();
    std::vector<std::string> codes;
    for (const auto& component : forest.components()) {
        if (component.size() < 2) continue;
        codes.push_back(unrooted_tree_code(adjacency, component));
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) out += '|';
        out += codes[i];
    }
    return out;
}

} // namespace cospec
