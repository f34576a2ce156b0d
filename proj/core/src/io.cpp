#include "cospec/io.hpp"

#include <charconv>
#include <stdexcept>

namespace cospec {

GraphInput parse_graph(const nlohmann::json& document) {
    if (!document.is_object() || !document.contains("vertices") || !document.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    }
    GraphInput graph;
    if (!document["vertices"].is_number_integer() || document["vertices"].get<int>() < 0) {
        throw std::invalid_argument("\"vertices\" must be a non-negative integer");
    }
    graph.vertices = document["vertices"].get<int>();
    if (!document["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const auto& e : document["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("each edge must be a pair of integers");
        }
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= graph.vertices || v >= graph.vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        graph.edges.emplace_back(u, v);
    }
    return graph;
}

nlohmann::json to_json(const Forest& forest) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : forest.edges()) edges.push_back({u, v});
    return {{"vertices", forest.vertexCount()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const LabeledTree& tree) { return to_json(tree.forest()); }

nlohmann::json to_json(const IntPolynomial& polynomial) {
    nlohmann::json out = nlohmann::json::array();
    for (auto c : polynomial.coefficients()) out.push_back(c);
    return out;
}

IntPolynomial polynomial_from_json(const nlohmann::json& document) {
    if (!document.is_array()) throw std::invalid_argument("polynomial JSON must be an integer array");
    std::vector<std::int64_t> coefficients;
    for (const auto& c : document) {
        if (!c.is_number_integer()) throw std::invalid_argument("polynomial coefficients must be integers");
        coefficients.push_back(c.get<std::int64_t>());
    }
    return IntPolynomial(std::move(coefficients));
}

nlohmann::json to_json(const EulerProduct& product) {
    return {{"value", product.value}, {"tail_bound", product.tailBound}, {"prime_bound", product.primeBound}};
}

nlohmann::json to_json(const MomentTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& m : table.evenMoments) {
        rows.push_back({{"k", m.k}, {"moment", m.value}, {"tail_bound", m.tailBound}});
    }
    return {{"ensemble", ensemble_label(table.ensemble)},
            {"odd_moments_zero", table.oddMomentsZero},
            {"even_moments", std::move(rows)}};
}

std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buffer, end);
}

} // namespace cospec
