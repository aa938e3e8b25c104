#include <doctest.h>

#include <random>

#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/lattice.hpp"

using namespace neumaier;

TEST_CASE("hermite normal form is canonical") {
    IntMat rows{{2, -1}, {1, 3}};
    auto h = hermite_normal_form(rows);
    CHECK(hermite_normal_form(h) == h);
    CHECK(hnf_index(h) == 7);

    // Unimodular row mixing leaves the HNF unchanged.
    std::mt19937 rng(11);
    IntMat mixed = rows;
    for (int rep = 0; rep < 20; ++rep) {
        int i = rep % 2, j = 1 - i;
        long long f = static_cast<long long>(rng() % 5) - 2;
        for (int c = 0; c < 2; ++c) mixed[i][c] += f * mixed[j][c];
        CHECK(hermite_normal_form(mixed) == h);
    }

    // Redundant generating sets reduce to the same basis.
    IntMat redundant{{2, -1}, {1, 3}, {3, 2}, {7, 0}};
    CHECK(hermite_normal_form(redundant) == h);
}

TEST_CASE("hnf membership") {
    auto ideal = triangular_code_ideal();
    CHECK(hnf_contains(ideal.hnf, {2, -1}));
    CHECK(hnf_contains(ideal.hnf, {7, 0}));
    CHECK(hnf_contains(ideal.hnf, {0, 7}));
    CHECK(hnf_contains(ideal.hnf, {3, 2})); // (2-w)(1+w) = 3+2w
    CHECK_FALSE(hnf_contains(ideal.hnf, {1, 0}));
    CHECK_FALSE(hnf_contains(ideal.hnf, {1, 1}));
}

TEST_CASE("smith normal form of the catalogue sublattices") {
    auto t1 = triangular_sublattice(1);
    auto s1 = smith_normal_form(t1.hnf);
    CHECK(s1.diag == std::vector<long long>{2, 14});

    auto t2 = triangular_sublattice(2);
    auto s2 = smith_normal_form(t2.hnf);
    CHECK(s2.diag == std::vector<long long>{1, 28});

    CHECK(t1.index == 28);
    CHECK(t2.index == 28);

    auto ideal = triangular_code_ideal();
    CHECK(hnf_contains_lattice(ideal.hnf, t1.hnf));
    CHECK(hnf_contains_lattice(ideal.hnf, t2.hnf));
}

TEST_CASE("quotient by the code ideal itself is complete") {
    auto spec = triangular_grid_spec();
    auto q = lattice_quotient(spec, triangular_code_ideal());
    CHECK(q.graph.vertex_count() == 7);
    CHECK(q.graph.complete());
}

TEST_CASE("quotients reject collapsing sublattices") {
    auto spec = triangular_grid_spec();
    // Index-2 sublattice: 1 and -1 coincide mod T.
    auto tiny = SublatticeBasis::from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(lattice_quotient(spec, tiny), QuotientError);
}

TEST_CASE("root system connection sets") {
    CHECK(root_system_connection_set(3, 2, 1).size() == 6);
    CHECK(root_system_connection_set(3, 2, 2).size() == 12);
    CHECK(root_system_connection_set(4, 4, 1).size() == 6);
    CHECK_THROWS_AS(root_system_connection_set(4, 3, 1), ArgumentError);
}

TEST_CASE("closed-form parameters match stated values") {
    CHECK(gamma_params(3, 2, 1) == GammaParams{6, 2});
    CHECK(gamma_params(4, 2, 1) == GammaParams{12, 4});
    CHECK(gamma_params(3, 2, 2) == GammaParams{12, 4});
    CHECK(gamma_params(5, 2, 1) == GammaParams{20, 6});
    CHECK(gamma_params(6, 2, 1) == GammaParams{30, 8});
    CHECK(gamma_params(4, 2, 2) == GammaParams{24, 8});
    CHECK_THROWS_AS(gamma_params(4, 4, 1), ArgumentError); // needs n >= m+1
}

TEST_CASE("closed-form parameters match brute-force counting") {
    for (int m : {2, 4}) {
        for (int n = m + 1; n <= 6; ++n) {
            CHECK(gamma_params(n, m, 1) == gamma_params_brute_force(zero_sum_lattice_spec(n, m)));
            CHECK(gamma_params(n, m, 2) == gamma_params_brute_force(even_sum_lattice_spec(n, m)));
        }
    }
}

TEST_CASE("generated groups coincide with the weight-2 groups") {
    CHECK(group_identity_check(5, 4, 1));
    CHECK(group_identity_check(5, 4, 2));
    CHECK(group_identity_check(6, 4, 1));
    CHECK(group_identity_check(6, 4, 2));
    CHECK(group_identity_check(3, 2, 1));
}

TEST_CASE("sublattice enumeration counts") {
    CHECK(enumerate_hnf_sublattices(2, 28).size() == 56); // sigma(28)
    CHECK(enumerate_hnf_sublattices(1, 12).size() == 1);
    // rank 3: multiplicative, f(p) = 1 + p + p^2
    CHECK(enumerate_hnf_sublattices(3, 78).size() == 7ul * 13ul * 183ul);
}

TEST_CASE("triangular-grid quotient catalogue entries") {
    auto d1 = triangular_quotient(1);
    auto d2 = triangular_quotient(2);
    auto rc1 = classify_regularity(d1.graph);
    auto rc2 = classify_regularity(d2.graph);
    CHECK(rc1.erg() == ErgParams{28, 6, 2});
    CHECK(rc2.erg() == ErgParams{28, 6, 2});
}

TEST_CASE("enumeration over the triangular grid finds both 28-vertex quotients") {
    auto spec = triangular_grid_spec();
    auto code = triangular_code_ideal();
    auto quotients = enumerate_code_preserving_quotients(spec, code, 28);
    CHECK(quotients.size() == 2);

    bool saw_cyclic = false, saw_product = false;
    for (const auto& q : quotients) {
        auto f = q.quotient.nontrivial_factors();
        if (f == std::vector<long long>{28}) saw_cyclic = true;
        if (f == std::vector<long long>{2, 14}) saw_product = true;
        CHECK(q.partition.a == 4);
    }
    CHECK(saw_cyclic);
    CHECK(saw_product);
}

TEST_CASE("quotients are label-deterministic") {
    auto spec = triangular_grid_spec();
    auto sub = triangular_sublattice(2);
    auto a = lattice_quotient(spec, sub);
    auto b = lattice_quotient(spec, sub);
    CHECK(a.graph == b.graph);
    CHECK(a.factors == b.factors);
}

TEST_CASE("the two triangular-grid descriptions count the same neighbourhoods") {
    // (1, omega) coordinates vs the zero-sum three-vector description
    CHECK(gamma_params_brute_force(triangular_grid_spec()) == GammaParams{6, 2});
    CHECK(gamma_params_brute_force(zero_sum_lattice_spec(3, 2)) == GammaParams{6, 2});
}

TEST_CASE("perfect-code sublattice search on the triangular grid") {
    auto spec = triangular_grid_spec();
    auto code = find_perfect_code_sublattice(spec);
    CHECK(code.index == 7);
    auto q = lattice_quotient(spec, code);
    CHECK(q.graph.complete());
}
