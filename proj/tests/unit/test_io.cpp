#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cospec/io.hpp"

using namespace cospec;
using nlohmann::json;

TEST_CASE("graph documents") {
    const auto g = parse_graph(json::parse(R"({"vertices": 3, "edges": [[0, 1], [2, 1]]})"));
    CHECK(g.vertices == 3);
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {2, 1}});
    CHECK_THROWS_AS(parse_graph(json::parse(R"({"edges": []})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(json::parse(R"({"vertices": 2, "edges": [[0, 2]]})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(json::parse(R"({"vertices": 2, "edges": [[0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(json::parse(R"({"vertices": -1, "edges": []})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST_CASE("round trips") {
    const Forest f(4, {{0, 1}, {1, 3}});
    const auto j = to_json(f);
    const auto g = parse_graph(j);
    CHECK(Forest(g.vertices, g.edges) == f);
    const IntPolynomial q{1, 0, -3, 2};
    CHECK(to_json(q) == json::parse("[1, 0, -3, 2]"));
    CHECK(polynomial_from_json(to_json(q)) == q);
    CHECK_THROWS(polynomial_from_json(json::parse("[1, 0.5]")));
}

TEST_CASE("euler product and moment tables") {
    EulerProduct e;
    e.value = 0.5;
    e.tailBound = 1e-6;
    e.primeBound = 1000;
    const auto j = to_json(e);
    CHECK(j["value"] == 0.5);
    CHECK(j["tail_bound"] == 1e-6);
    CHECK(j["prime_bound"] == 1000);
    MomentTable t;
    t.ensemble = Ensemble::visible;
    t.evenMoments = {{1, 0.6, 1e-6}};
    const auto tj = to_json(t);
    CHECK(tj["ensemble"] == "VW");
    CHECK(tj.dump().find("0.6") != std::string::npos);
}

TEST_CASE("property: formatted doubles round-trip exactly") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> exponent(-300, 300);
    for (int trial = 0; trial < 2000; ++trial) {
        const double x = std::pow(10.0, exponent(rng)) * (trial % 2 ? -1 : 1);
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
}
