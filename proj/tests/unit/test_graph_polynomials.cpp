#include <doctest.h>

#include "cospec/graph_polynomials.hpp"
#include "cospec/polynomial.hpp"
#include "generators.hpp"

using namespace cospec;
using cospec::testing::Rng;

namespace {

const Forest kEdge(2, {{0, 1}});
const Forest kPath3(3, {{0, 1}, {1, 2}});
const Forest kStar4(4, {{0, 1}, {0, 2}, {0, 3}});
const Forest kPath4(4, {{0, 1}, {1, 2}, {2, 3}});

// Q from its definition, with the subset enumeration done by brute force.
IntPolynomial brute_q(int vertices, const std::vector<Edge>& edges) {
    return q_from_independence(cospec::testing::brute_independence(vertices, edges), vertices);
}

std::vector<Edge> complete_edges(int k) {
    std::vector<Edge> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return e;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial a{1, -1};
    CHECK(a.pow(3) == IntPolynomial{1, -3, 3, -1});
    CHECK((a * IntPolynomial{1, 1}) == IntPolynomial{1, 0, -1});
    CHECK((a - a).degree() == -1);
    CHECK(IntPolynomial{1, 0, 0}.degree() == 0);
    CHECK(IntPolynomial{1, 0, -2, 1}.str() == "1 - 2z^2 + z^3");
    CHECK(IntPolynomial{0, -1}.str() == "-z");
    CHECK(IntPolynomial().str() == "0");
    CHECK(IntPolynomial{1, 0, -1}(0.5) == doctest::Approx(0.75));
    CHECK(IntPolynomial::monomial(3)[3] == 1);
    CHECK(IntPolynomial{5}[7] == 0);
    CHECK_THROWS_AS(IntPolynomial({std::int64_t{1} << 62}) * IntPolynomial({4}), std::overflow_error);
}

TEST_CASE("property: ring identities on random polynomials") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = cospec::testing::random_polynomial(rng, 6, 20);
        const auto b = cospec::testing::random_polynomial(rng, 6, 20);
        const auto c = cospec::testing::random_polynomial(rng, 6, 20);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        const double z = 0.37;
        CHECK((a * b)(z) == doctest::Approx(a(z) * b(z)).epsilon(1e-9));
    }
}

TEST_CASE("independence polynomial goldens") {
    CHECK(independence_polynomial(kEdge) == IntPolynomial{1, 2});
    CHECK(independence_polynomial(kPath3) == IntPolynomial{1, 3, 1});
    CHECK(independence_polynomial(kStar4) == IntPolynomial{1, 4, 3, 1});
    CHECK(independence_polynomial(kPath4) == IntPolynomial{1, 4, 3});
    CHECK(independence_polynomial(Forest::edgeless(3)) == IntPolynomial{1, 3, 3, 1});
    CHECK(independence_polynomial(Forest()) == IntPolynomial{1});
}

TEST_CASE("Q goldens for the small trees") {
    CHECK(q_polynomial(kEdge) == IntPolynomial{1, 0, -1});
    CHECK(q_polynomial(kPath3) == IntPolynomial{1, -1} * IntPolynomial{1, 1, -1});
    CHECK(q_polynomial(kStar4) == IntPolynomial{1, 0, -3, 3, -1});
    CHECK(q_polynomial(kPath4) == IntPolynomial{1, 0, -3, 2});
    // table form: sum_m i_m (1-z)^{4-m} z^m
    const IntPolynomial one{1}, omz{1, -1}, z{0, 1};
    CHECK(q_polynomial(kStar4) == omz.pow(4) + IntPolynomial{4} * omz.pow(3) * z + IntPolynomial{3} * omz.pow(2) * z.pow(2) + omz * z.pow(3));
    CHECK(q_polynomial(kPath4) == omz.pow(4) + IntPolynomial{4} * omz.pow(3) * z + IntPolynomial{3} * omz.pow(2) * z.pow(2));
    CHECK(q_polynomial(Forest::edgeless(4)) == one);
}

TEST_CASE("complete graph closed form") {
    for (int k = 1; k <= 9; ++k) CHECK(q_complete_graph(k) == brute_q(k, complete_edges(k)));
    CHECK(q_complete_graph(3) == q_polynomial(kPath4));
    CHECK_THROWS_AS(q_complete_graph(0), std::invalid_argument);
}

TEST_CASE("property: tree DP agrees with subset enumeration") {
    Rng rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = cospec::testing::uniform_int(rng, 1, 14);
        const auto f = trial % 2 ? cospec::testing::random_forest(rng, n) : cospec::testing::random_tree(rng, n);
        CHECK(independence_polynomial(f) == cospec::testing::brute_independence(n, f.edges()));
        CHECK(q_polynomial(f) == brute_q(n, f.edges()));
    }
}

TEST_CASE("property: Q invariants") {
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = cospec::testing::uniform_int(rng, 2, 14);
        const auto f = cospec::testing::random_forest(rng, n);
        const auto q = q_polynomial(f);
        CHECK(q[0] == 1);
        CHECK(q[1] == 0);
        CHECK(-q[2] == static_cast<std::int64_t>(f.edgeCount()));
        CHECK(q(1.0) == (f.edgeCount() == 0 ? 1.0 : 0.0));  // i_{|V|} survives at z = 1
        // multiplicative over disjoint unions and blind to isolated vertices
        const auto g = cospec::testing::random_forest(rng, cospec::testing::uniform_int(rng, 1, 6));
        CHECK(q_polynomial(f.disjointUnion(g)) == q * q_polynomial(g));
        CHECK(q_polynomial(f.withoutIsolatedVertices()) == q);
        for (double z : {0.5, 1.0 / 3, 0.2, 0.01}) {
            CHECK(q(z) > 0.0);
            CHECK(q(z) <= 1.0 + 1e-12);
        }
    }
}
