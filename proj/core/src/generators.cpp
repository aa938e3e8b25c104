#include "neumaier/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

void assert_edge_regular(const Graph& g, int v, int k, int lambda, const std::string& who) {
    auto rc = classify_regularity(g);
    if (!rc.is_edge_regular() || rc.v != v || rc.k != k || *rc.lambda != lambda)
        throw GeneratorError(who + " is not edge-regular(" + std::to_string(v) + "," +
                             std::to_string(k) + "," + std::to_string(lambda) + "): got " +
                             rc.to_string());
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbours(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Graph icosahedron_graph() {
    // Apex 0, upper 5-ring 1..5, lower 5-ring 6..10, apex 11.
    Graph g(12);
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(0, i);
        g.add_edge(11, i + 5);
        g.add_edge(i, i % 5 + 1);
        g.add_edge(i + 5, i % 5 + 6);
        g.add_edge(i, i + 5);
        g.add_edge(i, i % 5 + 6);
    }
    return g;
}

Graph dodecahedron_graph() {
    // Generalized Petersen graph GP(10, 2): outer 10-ring 0..9, inner
    // vertices 10..19 forming two pentagons by step 2, spokes i ~ 10+i.
    Graph g(20);
    for (int i = 0; i < 10; ++i) {
        g.add_edge(i, (i + 1) % 10);
        g.add_edge(i, 10 + i);
        g.add_edge(10 + i, 10 + (i + 2) % 10);
    }
    return g;
}

// Antipodal pairs {x, xbar} with xbar the unique vertex at the stated
// distance from x.
std::vector<std::vector<int>> antipodal_pairs(const Graph& g, int distance) {
    std::vector<std::vector<int>> pairs;
    std::vector<bool> used(g.vertex_count(), false);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (used[u]) continue;
        auto dist = bfs_distances(g, u);
        int mate = -1;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (dist[w] == distance) {
                if (mate >= 0) throw GeneratorError("antipodal mate is not unique");
                mate = w;
            }
        }
        if (mate < 0) throw GeneratorError("vertex has no antipodal mate");
        used[u] = used[mate] = true;
        pairs.push_back({u, mate});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace

GeneratedGraph named_graph(std::string_view name) {
    if (name == "icosahedron") {
        GeneratedGraph out{icosahedron_graph(), std::nullopt, "icosahedron"};
        assert_edge_regular(out.graph, 12, 5, 2, "icosahedron");
        CodePartition p;
        p.a = 2;
        p.codes = antipodal_pairs(out.graph, 3);
        p.canonicalise();
        verify_code_partition(out.graph, p);
        out.partition = std::move(p);
        return out;
    }
    if (name == "dodecahedron") {
        GeneratedGraph out{dodecahedron_graph(), std::nullopt, "dodecahedron"};
        auto rc = classify_regularity(out.graph);
        if (!rc.is_regular() || rc.k != 3) throw GeneratorError("dodecahedron must be 3-regular");
        auto pairs = antipodal_pairs(out.graph, 5);
        for (const auto& pair : pairs) {
            if (!is_perfect_code(out.graph, pair, 2))
                throw GeneratorError("antipodal pair is not a perfect 2-code");
        }
        CodePartition p;
        p.a = 2;
        p.codes = std::move(pairs);
        out.partition = std::move(p); // radius-2 codes; tagged by the description
        out.description = "dodecahedron (partition lists its ten perfect 2-codes)";
        return out;
    }
    throw ArgumentError("unknown generator name: " + std::string(name));
}

GeneratedGraph double_dodecahedron() {
    Graph dodeca = dodecahedron_graph();
    const int n = dodeca.vertex_count();
    Graph g(2 * n);
    std::vector<std::vector<int>> dist(n);
    for (int u = 0; u < n; ++u) dist[u] = bfs_distances(dodeca, u);
    for (int u = 0; u < n; ++u) {
        for (int w : dodeca.neighbours(u)) {
            if (w > u) {
                g.add_edge(u, w);
                g.add_edge(n + u, n + w);
            }
        }
        // cross edges to the matched copy at distance exactly 2
        for (int w = 0; w < n; ++w) {
            if (dist[u][w] == 2) g.add_edge(u, n + w);
        }
    }
    assert_edge_regular(g, 40, 9, 2, "double dodecahedron");

    CodePartition p;
    p.a = 4;
    for (const auto& pair : antipodal_pairs(dodeca, 5)) {
        p.codes.push_back({pair[0], pair[1], n + pair[0], n + pair[1]});
    }
    p.canonicalise();
    verify_code_partition(g, p);
    return {std::move(g), std::move(p), "double dodecahedron"};
}

Graph circulant(int n, std::span<const int> connections) {
    if (n < 1) throw ArgumentError("circulant order must be positive");
    std::set<int> conn;
    for (int s : connections) {
        int r = ((s % n) + n) % n;
        if (r == 0) throw ArgumentError("connection set contains 0 mod n");
        conn.insert(r);
    }
    if (conn.empty()) throw ArgumentError("connection set is empty");
    for (int s : conn) {
        if (!conn.count((n - s) % n))
            throw ArgumentError("connection set is not symmetric: missing " +
                                std::to_string((n - s) % n));
    }
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int s : conn) {
            int j = (i + s) % n;
            if (j != i) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<int> power_of_two_connections(int n) {
    std::set<int> conn;
    long long p = 1;
    while (true) {
        int r = static_cast<int>(p % n);
        if (r == 0) throw ArgumentError("2 is not invertible mod " + std::to_string(n));
        if (conn.count(r)) break;
        conn.insert(r);
        p = (p * 2) % n;
    }
    std::vector<int> out(conn.begin(), conn.end());
    return out;
}

GeneratedGraph circulant_65() {
    auto conn = power_of_two_connections(65);
    Graph g = circulant(65, conn);
    assert_edge_regular(g, 65, 12, 3, "65-vertex circulant");
    std::vector<int> orders{65};
    std::vector<std::vector<int>> gens{{13}};
    CodePartition p = coset_partition(orders, gens, g);
    return {std::move(g), std::move(p), "circulant on Z65 with the powers of 2"};
}

SublatticeBasis triangular_code_ideal() {
    // The ideal (2 - omega) of norm 7 in (1, omega) coordinates:
    // generated by 2 - omega = (2,-1) and (2 - omega)*omega = (1,3).
    return SublatticeBasis::from_rows({{2, -1}, {1, 3}});
}

SublatticeBasis triangular_sublattice(int which) {
    if (which == 1) {
        // spanned by 2*(-2 + omega) = (-4,2) and 14 = (14,0)
        return SublatticeBasis::from_rows({{-4, 2}, {14, 0}});
    }
    if (which == 2) {
        // spanned by 5 + omega = (5,1) and 28 = (28,0)
        return SublatticeBasis::from_rows({{5, 1}, {28, 0}});
    }
    throw ArgumentError("triangular sublattice index must be 1 or 2");
}

GeneratedGraph triangular_quotient(int which) {
    auto spec = triangular_grid_spec();
    auto ideal = triangular_code_ideal();
    auto sub = triangular_sublattice(which);
    if (!hnf_contains_lattice(ideal.hnf, sub.hnf))
        throw GeneratorError("quotient sublattice is not contained in the code ideal");
    auto q = lattice_quotient(spec, sub);

    auto expected_group = which == 1 ? std::vector<long long>{2, 14} : std::vector<long long>{28};
    if (q.nontrivial_factors() != expected_group)
        throw GeneratorError("quotient group decomposition mismatch");

    assert_edge_regular(q.graph, 28, 6, 2, "triangular-grid quotient");
    CodePartition p = quotient_code_partition(q, ideal);
    if (p.a != 4 || p.code_count() != 7)
        throw GeneratorError("triangular-grid quotient partition has the wrong shape");
    std::string desc = which == 1 ? "triangular-grid quotient by T1 (group Z2+Z14)"
                                  : "triangular-grid quotient by T2 (group Z28)";
    return {std::move(q.graph), std::move(p), desc};
}

std::vector<GeneratorInfo> generator_registry() {
    return {
        {"icosahedron", "", "edge-regular (12,5,2) with six antipodal perfect 1-codes"},
        {"dodecahedron", "", "3-regular, diameter 5, ten antipodal perfect 2-codes"},
        {"double-dodecahedron", "", "edge-regular (40,9,2) with ten perfect 1-codes of size 4"},
        {"circulant", "--n N --connections a,b,... | --log2-powers",
         "Cayley graph of Z_N with a symmetric connection set"},
        {"circulant65", "", "edge-regular (65,12,3) with the thirteen cosets of <13>"},
        {"delta1", "", "triangular-grid quotient, group Z2+Z14, edge-regular (28,6,2)"},
        {"delta2", "", "triangular-grid quotient, group Z28, edge-regular (28,6,2)"},
    };
}

} // namespace neumaier
