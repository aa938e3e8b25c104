#include <doctest.h>

#include <numeric>
#include <random>

#include "neumaier/construction.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/spectral.hpp"
#include "support/oracles.hpp"

using namespace neumaier;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) g.add_edge(u, w);
    }
    return g;
}

std::vector<mpz_class> expected_sng24_poly() {
    // (x-8)(x-4)(x-2)^5(x+2)^5(x^2+2x-4)^6, multiplied out independently.
    auto poly = oracles::poly_mul(oracles::linear_power(8, 1), oracles::linear_power(4, 1));
    poly = oracles::poly_mul(poly, oracles::linear_power(2, 5));
    poly = oracles::poly_mul(poly, oracles::linear_power(-2, 5));
    std::vector<mpz_class> quad{mpz_class(-4), mpz_class(2), mpz_class(1)};
    for (int i = 0; i < 6; ++i) poly = oracles::poly_mul(poly, quad);
    return poly;
}

} // namespace

TEST_CASE("characteristic polynomials of elementary graphs") {
    Graph edgeless(4);
    auto p = char_poly(edgeless);
    CHECK(p.coeffs == std::vector<mpz_class>{0, 0, 0, 0, 1}); // x^4

    Graph k2(2);
    k2.add_edge(0, 1);
    auto p2 = char_poly(k2);
    CHECK(p2.coeffs == std::vector<mpz_class>{-1, 0, 1}); // x^2 - 1

    auto k3 = complete_graph(3);
    auto p3 = char_poly(k3);
    // (x-2)(x+1)^2 = x^3 - 3x - 2
    CHECK(p3.coeffs == std::vector<mpz_class>{-2, -3, 0, 1});
}

TEST_CASE("coefficient identities over a mixed corpus") {
    std::vector<Graph> corpus{cycle(5), cycle(8), complete_graph(6),
                              named_graph("icosahedron").graph, double_dodecahedron().graph};
    for (const auto& g : corpus) {
        const int v = g.vertex_count();
        auto p = char_poly(g);
        CHECK(p.degree() == v);
        CHECK(p.coeffs[v] == 1);
        CHECK(p.coeffs[v - 1] == 0); // trace
        CHECK(p.coeffs[v - 2] == -mpz_class(static_cast<unsigned long>(g.edge_count())));

        // constant term = (-1)^v det A, with the determinant computed by
        // independent rational elimination
        std::vector<std::vector<mpq_class>> a(v, std::vector<mpq_class>(v, mpq_class(0)));
        for (int u = 0; u < v; ++u) {
            for (int w : g.neighbours(u)) a[u][w] = 1;
        }
        mpq_class det = oracles::rational_determinant(a);
        mpz_class expect = (v % 2 == 0) ? det.get_num() : mpz_class(-det.get_num());
        CHECK(det.get_den() == 1);
        CHECK(p.coeffs[0] == expect);
    }
}

TEST_CASE("the 24-vertex construction has the catalogued polynomial") {
    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    pi.perms.push_back({1, 2, 3, 4, 5, 6});
    auto ctx = make_context(std::move(inputs), std::move(pi));
    auto g = f_pi_construct(ctx).graph;
    CHECK(char_poly(g).coeffs == expected_sng24_poly());
}

TEST_CASE("cospectral checks") {
    auto ico = named_graph("icosahedron").graph;
    std::mt19937 rng(99);
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(cospectral(ico, ico.relabelled(perm)));

    CHECK_FALSE(cospectral(complete_graph(4), cycle(4)));
    CHECK_FALSE(cospectral(complete_graph(4), cycle(5)));
}

TEST_CASE("integer determinant matches rational elimination on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int n : {1, 2, 3, 5, 8}) {
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
            std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    int e = entry(rng);
                    m[i][j] = e;
                    q[i][j] = e;
                }
            }
            auto det = integer_determinant(m);
            auto ref = oracles::rational_determinant(q);
            CHECK(ref.get_den() == 1);
            CHECK(det == ref.get_num());
        }
    }
}

TEST_CASE("spectrum reports") {
    auto k3_report = spectrum_report(complete_graph(3));
    REQUIRE(k3_report.size() == 2);
    CHECK(k3_report[0].exact_integer == 2);
    CHECK(k3_report[0].multiplicity == 1);
    CHECK(k3_report[1].exact_integer == -1);
    CHECK(k3_report[1].multiplicity == 2);

    auto c5_report = spectrum_report(cycle(5));
    REQUIRE(c5_report.size() == 3);
    CHECK(c5_report[0].exact_integer == 2);
    REQUIRE(c5_report[1].exact_quadratic.has_value());
    CHECK(c5_report[1].exact_quadratic->to_string() == "(-1+sqrt(5))/2");
    CHECK(c5_report[1].multiplicity == 2);
    REQUIRE(c5_report[2].exact_quadratic.has_value());
    CHECK(c5_report[2].exact_quadratic->to_string() == "(-1-sqrt(5))/2");

    // multiplicities sum to v; eigenvalue sum vanishes
    for (const auto& g : {named_graph("icosahedron").graph, cycle(7)}) {
        auto report = spectrum_report(g);
        int total = 0;
        double sum = 0;
        for (const auto& e : report) {
            total += e.multiplicity;
            sum += e.approx * e.multiplicity;
        }
        CHECK(total == g.vertex_count());
        CHECK(std::abs(sum) < 1e-8);
    }
}

TEST_CASE("spectrum of the 24-vertex construction matches the catalogue") {
    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    pi.perms.push_back({2, 1, 3, 4, 5, 6});
    auto g = f_pi_construct(make_context(std::move(inputs), std::move(pi))).graph;
    auto report = spectrum_report(g);
    REQUIRE(report.size() == 6);
    CHECK(report[0].exact_integer == 8);
    CHECK(report[0].multiplicity == 1);
    CHECK(report[1].exact_integer == 4);
    CHECK(report[1].multiplicity == 1);
    CHECK(report[2].exact_integer == 2);
    CHECK(report[2].multiplicity == 5);
    REQUIRE(report[3].exact_quadratic.has_value());
    CHECK(report[3].exact_quadratic->to_string() == "-1+sqrt(5)");
    CHECK(report[3].multiplicity == 6);
    CHECK(report[4].exact_integer == -2);
    CHECK(report[4].multiplicity == 5);
    REQUIRE(report[5].exact_quadratic.has_value());
    CHECK(report[5].exact_quadratic->to_string() == "-1-sqrt(5)");
    CHECK(report[5].multiplicity == 6);
}
