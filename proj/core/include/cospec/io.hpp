#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cospec/catalan.hpp"
#include "cospec/euler_product.hpp"
#include "cospec/forest.hpp"
#include "cospec/moments.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// A graph read from {"vertices": m, "edges": [[u, v], ...]}. May contain
/// cycles; convert with Forest's constructor when a forest is required.
struct GraphInput {
    int vertices = 0;
    std::vector<Edge> edges;
};

/// Throws std::invalid_argument on malformed documents or out-of-range ids.
GraphInput parse_graph(const nlohmann::json& document);

nlohmann::json to_json(const Forest& forest);
nlohmann::json to_json(const LabeledTree& tree);
/// Integer array, constant term first.
nlohmann::json to_json(const IntPolynomial& polynomial);
IntPolynomial polynomial_from_json(const nlohmann::json& document);
/// {"value", "tail_bound", "prime_bound"}.
nlohmann::json to_json(const EulerProduct& product);
nlohmann::json to_json(const MomentTable& table);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

} // namespace cospec
