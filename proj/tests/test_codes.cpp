#include <doctest.h>

#include "neumaier/codes.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
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

} // namespace

TEST_CASE("perfect code examples") {
    CHECK(is_perfect_code(complete_graph(6), std::vector<int>{2}, 1));
    CHECK(is_perfect_code(cycle(6), std::vector<int>{0, 3}, 1));
    CHECK_FALSE(is_perfect_code(cycle(6), std::vector<int>{0, 2}, 1));

    auto dodeca = named_graph("dodecahedron");
    REQUIRE(dodeca.partition.has_value());
    for (const auto& pair : dodeca.partition->codes) {
        CHECK(is_perfect_code(dodeca.graph, pair, 2));
    }

    CHECK_THROWS_AS(is_perfect_code(cycle(6), std::vector<int>{}, 1), ArgumentError);
    CHECK_THROWS_AS(is_perfect_code(cycle(6), std::vector<int>{0}, 0), ArgumentError);
}

TEST_CASE("ball and counting formulations agree on all small graphs") {
    // Exhaustive over every labelled graph on up to 5 vertices and every
    // non-empty centre set.
    for (int n = 1; n <= 5; ++n) {
        unsigned long graphs = 1ul << (n * (n - 1) / 2);
        for (unsigned long mask = 0; mask < graphs; ++mask) {
            auto g = oracles::graph_from_mask(n, mask);
            for (unsigned long cs = 1; cs < (1ul << n); ++cs) {
                std::vector<int> centres;
                for (int u = 0; u < n; ++u) {
                    if ((cs >> u) & 1) centres.push_back(u);
                }
                CHECK(is_perfect_code(g, centres, 1) ==
                      oracles::perfect_one_code_by_counting(g, centres));
            }
        }
    }
}

TEST_CASE("icosahedron has exactly one partition into six pairs") {
    auto ico = named_graph("icosahedron");
    auto codes = find_perfect_one_codes(ico.graph);
    CHECK(codes.size() == 6); // the six antipodal pairs

    auto partitions = find_code_partitions(ico.graph, 2, 10);
    REQUIRE(partitions.size() == 1);
    CHECK(partitions[0] == *ico.partition);
    verify_code_partition(ico.graph, partitions[0]);
}

TEST_CASE("infeasible code sizes are rejected") {
    CHECK_THROWS_AS(find_code_partitions(cycle(5), 1, 10), InfeasibilityError);
    CHECK_THROWS_AS(find_code_partitions(cycle(6), 2, 0), ArgumentError);
    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    CHECK_THROWS_AS(find_code_partitions(path3, 1, 10), InfeasibilityError);
}

TEST_CASE("65-vertex circulant partitions include the subgroup cosets") {
    auto gen = circulant_65();
    REQUIRE(gen.partition.has_value());
    CHECK(gen.partition->a == 5);
    CHECK(gen.partition->code_count() == 13);
    CHECK(gen.partition->codes.front() == std::vector<int>{0, 13, 26, 39, 52});

    auto partitions = find_code_partitions(gen.graph, 5, 2000);
    bool found = false;
    for (const auto& p : partitions) {
        if (p == *gen.partition) found = true;
    }
    CHECK(found);
}

TEST_CASE("coset partitions") {
    auto gen = circulant_65();
    std::vector<int> orders{65};
    std::vector<std::vector<int>> gens{{13}};
    auto p = coset_partition(orders, gens, gen.graph);
    CHECK(p == *gen.partition);

    // Trivial subgroup in a complete graph: singleton codes.
    auto k4 = complete_graph(4);
    std::vector<int> o4{4};
    std::vector<std::vector<int>> trivial{{0}};
    auto singles = coset_partition(o4, trivial, k4);
    CHECK(singles.a == 1);
    CHECK(singles.code_count() == 4);

    // A subgroup whose cosets are not perfect codes is rejected.
    auto c6 = cycle(6);
    std::vector<int> o6{6};
    std::vector<std::vector<int>> bad{{2}};
    CHECK_THROWS_AS(coset_partition(o6, bad, c6), StructureError);
}

TEST_CASE("delta quotients have seven cosets of size four") {
    for (int which : {1, 2}) {
        auto gen = triangular_quotient(which);
        REQUIRE(gen.partition.has_value());
        CHECK(gen.partition->a == 4);
        CHECK(gen.partition->code_count() == 7);
        verify_code_partition(gen.graph, *gen.partition);
    }
}
