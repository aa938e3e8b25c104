#include <doctest.h>

#include <deque>

#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"

using namespace neumaier;

namespace {

std::vector<int> distance_profile(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::deque<int> q{source};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbours(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    int diameter = *std::max_element(dist.begin(), dist.end());
    std::vector<int> profile(diameter + 1, 0);
    for (int d : dist) profile[d]++;
    return profile;
}

} // namespace

TEST_CASE("icosahedron catalogue entry") {
    auto gen = named_graph("icosahedron");
    auto rc = classify_regularity(gen.graph);
    CHECK(rc.erg() == ErgParams{12, 5, 2});
    REQUIRE(gen.partition.has_value());
    CHECK(gen.partition->a == 2);
    CHECK(gen.partition->code_count() == 6);
}

TEST_CASE("dodecahedron catalogue entry") {
    auto gen = named_graph("dodecahedron");
    CHECK(gen.graph.vertex_count() == 20);
    for (int u = 0; u < 20; ++u) CHECK(gen.graph.degree(u) == 3);
    for (int u = 0; u < 20; ++u) {
        CHECK(distance_profile(gen.graph, u) == std::vector<int>{1, 3, 6, 6, 3, 1});
    }
}

TEST_CASE("unknown generator names are rejected") {
    CHECK_THROWS_AS(named_graph("hypercube"), ArgumentError);
}

TEST_CASE("double dodecahedron") {
    auto gen = double_dodecahedron();
    auto rc = classify_regularity(gen.graph);
    CHECK(rc.erg() == ErgParams{40, 9, 2});
    REQUIRE(gen.partition.has_value());
    CHECK(gen.partition->a == 4);
    CHECK(gen.partition->code_count() == 10);

    // each vertex keeps its 3 shell edges and gains 6 cross edges
    auto dodeca = named_graph("dodecahedron").graph;
    for (int u = 0; u < 20; ++u) {
        int cross = 0;
        for (int w : gen.graph.neighbours(u)) {
            if (w >= 20) ++cross;
        }
        CHECK(cross == 6);
        CHECK(gen.graph.degree(u) == dodeca.degree(u) + 6);
    }
}

TEST_CASE("circulants") {
    std::vector<int> pm1{1, 4};
    auto c5 = circulant(5, pm1);
    auto rc5 = classify_regularity(c5);
    CHECK(rc5.kind == RegularityClass::Kind::strongly_regular);
    CHECK(rc5.v == 5);
    CHECK(rc5.k == 2);

    std::vector<int> k4conn{1, 2, 3};
    auto k4 = circulant(4, k4conn);
    CHECK(k4.complete());

    std::vector<int> asym{1};
    CHECK_THROWS_AS(circulant(5, asym), ArgumentError);
    std::vector<int> zero{5};
    CHECK_THROWS_AS(circulant(5, zero), ArgumentError);
}

TEST_CASE("the 65-vertex circulant") {
    auto conn = power_of_two_connections(65);
    CHECK(conn == std::vector<int>{1, 2, 4, 8, 16, 32, 33, 49, 57, 61, 63, 64});
    auto gen = circulant_65();
    CHECK(classify_regularity(gen.graph).erg() == ErgParams{65, 12, 3});
}

TEST_CASE("registry lists every generator") {
    auto registry = generator_registry();
    CHECK(registry.size() == 7);
    bool has_circulant = false;
    for (const auto& info : registry) {
        if (info.name == "circulant") has_circulant = true;
    }
    CHECK(has_circulant);
}
