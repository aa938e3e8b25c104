#include <doctest.h>

#include <numeric>
#include <random>

#include "neumaier/canonical.hpp"
#include "neumaier/construction.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/graph6.hpp"
#include "support/oracles.hpp"
#include "support/small_graphs.hpp"

using namespace neumaier;

namespace {

Graph random_graph(int n, double density, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (coin(rng)) g.add_edge(u, w);
        }
    }
    return g;
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(123);
    std::vector<Graph> corpus{named_graph("icosahedron").graph, triangular_quotient(2).graph};
    for (int n : {2, 5, 9, 16}) corpus.push_back(random_graph(n, 0.4, rng));
    for (const auto& g : corpus) {
        auto canon = canonical_form(g).canonical_graph6;
        for (int rep = 0; rep < 25; ++rep) {
            auto perm = random_permutation(g.vertex_count(), rng);
            CHECK(canonical_form(g.relabelled(perm)).canonical_graph6 == canon);
        }
    }
}

TEST_CASE("canonical labelling is a verified witness") {
    std::mt19937 rng(321);
    for (int rep = 0; rep < 20; ++rep) {
        auto g = random_graph(10, 0.5, rng);
        auto cf = canonical_form(g);
        auto canon = graph6_decode(cf.canonical_graph6);
        for (int p = 0; p < 10; ++p) {
            for (int q = p + 1; q < 10; ++q) {
                CHECK(canon.edge(p, q) == g.edge(cf.labelling[p], cf.labelling[q]));
            }
        }
    }
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
    std::mt19937 rng(555);
    for (int n = 2; n <= 8; ++n) {
        int reps = n <= 6 ? 40 : 8;
        for (int rep = 0; rep < reps; ++rep) {
            auto a = random_graph(n, 0.5, rng);
            auto b = random_graph(n, 0.5, rng);
            CHECK(are_isomorphic(a, b) == oracles::isomorphic_brute_force(a, b));
        }
        // relabelled copies must always match
        auto g = random_graph(n, 0.45, rng);
        CHECK(are_isomorphic(g, g.relabelled(random_permutation(n, rng))));
    }
}

TEST_CASE("classify groups repeated graphs into one class") {
    auto ico = named_graph("icosahedron").graph;
    std::vector<Graph> batch{ico, ico, ico};
    auto classes = classify(batch);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].count == 3);
    CHECK(classes[0].member_indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("canonical form is stable across repeated runs") {
    auto ico = named_graph("icosahedron").graph;
    CHECK(canonical_form(ico).canonical_graph6 == canonical_form(ico).canonical_graph6);
}

TEST_CASE("the two 28-vertex constructions are not isomorphic") {
    std::vector<Graph> sngs;
    for (int which : {1, 2}) {
        auto gen = triangular_quotient(which);
        std::vector<ConstructionInput> inputs{{gen.graph, *gen.partition}};
        auto ctx = make_context(std::move(inputs), PermTuple{});
        sngs.push_back(f_pi_construct(ctx).graph);
    }
    CHECK_FALSE(are_isomorphic(sngs[0], sngs[1]));
    CHECK(classify(sngs).size() == 2);
}

TEST_CASE("graph counts by vertex number match the known sequence") {
    auto graphs4 = small_graphs::all_up_to_iso(4);
    CHECK(graphs4.size() == 11);
    auto graphs6 = small_graphs::all_up_to_iso(6);
    CHECK(graphs6.size() == 156);
}
