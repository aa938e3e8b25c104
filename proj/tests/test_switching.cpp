#include <doctest.h>

#include <numeric>
#include <random>

#include "neumaier/construction.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/spectral.hpp"
#include "neumaier/switching.hpp"

using namespace neumaier;

namespace {

ConstructionContext icosahedra_context(std::vector<int> pi2) {
    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    pi.perms.push_back(std::move(pi2));
    return make_context(std::move(inputs), std::move(pi));
}

} // namespace

TEST_CASE("validation rejects malformed partitions") {
    auto ctx = icosahedra_context({1, 2, 3, 4, 5, 6});
    auto g = f_pi_construct(ctx).graph;
    std::vector<int> c1{0, 11};
    CHECK_THROWS_AS(validate_switching_partition(g, c1, c1), ArgumentError);
    CHECK_THROWS_AS(validate_switching_partition(g, c1, std::vector<int>{1}), ArgumentError);
    CHECK_THROWS_AS(validate_switching_partition(g, c1, std::vector<int>{11, 9}), ArgumentError);
    // induced degrees differ: an edge of copy 1 against a non-adjacent pair
    CHECK_THROWS_AS(validate_switching_partition(g, std::vector<int>{0, 1}, std::vector<int>{2, 4}),
                    StructureError);

    // a D-vertex seeing part of C1 without being fully joined
    Graph h(5);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(4, 0);
    CHECK_THROWS_AS(validate_switching_partition(h, std::vector<int>{0, 1}, std::vector<int>{2, 3}),
                    StructureError);
}

TEST_CASE("switch with no fully joined vertex is a no-op") {
    // Singletons of K4: every outside vertex sees both, so nothing moves.
    Graph k4(4);
    for (int u = 0; u < 4; ++u) {
        for (int w = u + 1; w < 4; ++w) k4.add_edge(u, w);
    }
    auto p = validate_switching_partition(k4, std::vector<int>{0}, std::vector<int>{3});
    CHECK(wqh_switch(k4, p) == k4);
}

TEST_CASE("a genuine switch on the 6-cycle produces a cospectral graph") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    auto p = validate_switching_partition(c6, std::vector<int>{0, 2}, std::vector<int>{3, 5});
    auto switched = wqh_switch(c6, p);
    CHECK(switched != c6);
    CHECK(switched.edge_count() == c6.edge_count());
    CHECK(cospectral(c6, switched));
}

TEST_CASE("copy-set {1} switching matches the updated permutation tuple") {
    auto ctx = icosahedra_context({2, 1, 4, 3, 6, 5});
    std::vector<int> I{1};
    auto res = spread_switch(ctx, I, 1, 2);

    // pi' swaps the images of 1 and 2
    CHECK(res.pi_prime.perms[0] == std::vector<int>{1, 2, 4, 3, 6, 5});
    CHECK(cospectral(f_pi_construct(ctx).graph, res.graph));

    // involution: the same switch applied to the new tuple restores pi
    ConstructionContext ctx2 = ctx;
    ctx2.pi = res.pi_prime;
    auto back = spread_switch(ctx2, I, 1, 2);
    CHECK(back.pi_prime == ctx.pi);
    CHECK(back.graph == f_pi_construct(ctx).graph);
}

TEST_CASE("full copy set leaves the graph unchanged") {
    auto ctx = icosahedra_context({3, 1, 2, 6, 5, 4});
    auto original = f_pi_construct(ctx).graph;
    std::vector<int> I{1, 2};
    auto res = spread_switch(ctx, I, 2, 5);
    CHECK(res.pi_prime == ctx.pi);
    CHECK(res.graph == original);
}

TEST_CASE("t = 1 switching is a valid no-op") {
    auto gen = circulant_65();
    std::vector<ConstructionInput> inputs{{gen.graph, *gen.partition}};
    auto ctx = make_context(std::move(inputs), PermTuple{});
    auto original = f_pi_construct(ctx).graph;
    std::vector<int> I{1};
    auto res = spread_switch(ctx, I, 3, 9);
    CHECK(res.graph == original);
    CHECK(res.pi_prime == ctx.pi);
}

TEST_CASE("switching preserves the edge count and the spectrum") {
    std::mt19937 rng(7);
    std::vector<int> pi2{1, 2, 3, 4, 5, 6};
    for (int rep = 0; rep < 3; ++rep) {
        std::shuffle(pi2.begin(), pi2.end(), rng);
        auto ctx = icosahedra_context(pi2);
        auto original = f_pi_construct(ctx).graph;
        std::vector<int> I{1};
        auto res = spread_switch(ctx, I, 2, 6);
        CHECK(res.graph.edge_count() == original.edge_count());
        CHECK(cospectral(original, res.graph));
    }
}

TEST_CASE("three-copy switching with a partial copy set") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    CodePartition singles;
    singles.a = 1;
    singles.codes = {{0}, {1}, {2}};
    std::vector<ConstructionInput> inputs{{k3, singles}, {k3, singles}, {k3, singles}};
    PermTuple pi;
    pi.perms.push_back({2, 3, 1});
    pi.perms.push_back({3, 1, 2});
    auto ctx = make_context(std::move(inputs), std::move(pi));

    std::vector<int> I{1, 3};
    auto res = spread_switch(ctx, I, 1, 3);
    // r = 2 is outside I, so only pi_2 picks up the transposition (1 3)
    CHECK(res.pi_prime.perms[0] == std::vector<int>{1, 3, 2});
    CHECK(res.pi_prime.perms[1] == ctx.pi.perms[1]);
    CHECK(cospectral(f_pi_construct(ctx).graph, res.graph));
}
