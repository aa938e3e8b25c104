#include "neumaier/switching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

std::vector<std::uint64_t> make_mask(int v, std::span<const int> vertices) {
    std::vector<std::uint64_t> mask((v + 63) / 64, 0);
    for (int u : vertices) mask[u / 64] |= std::uint64_t{1} << (u % 64);
    return mask;
}

int count_in_mask(const Graph& g, int u, const std::vector<std::uint64_t>& mask) {
    auto r = g.row(u);
    int c = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) c += std::popcount(r[i] & mask[i]);
    return c;
}

int induced_degree(const Graph& g, int u, const std::vector<std::uint64_t>& mask) {
    return count_in_mask(g, u, mask);
}

} // namespace

SwitchingPartition validate_switching_partition(const Graph& g, std::span<const int> c1,
                                                std::span<const int> c2) {
    const int v = g.vertex_count();
    if (c1.empty() || c2.empty()) throw ArgumentError("C1 and C2 must be non-empty");
    if (c1.size() != c2.size())
        throw ArgumentError("|C1| = " + std::to_string(c1.size()) +
                            " differs from |C2| = " + std::to_string(c2.size()));
    std::vector<int> membership(v, 0);
    for (int u : c1) {
        g.check_vertex(u);
        if (membership[u]) throw ArgumentError("C1 contains a repeated vertex");
        membership[u] = 1;
    }
    for (int u : c2) {
        g.check_vertex(u);
        if (membership[u])
            throw ArgumentError("C1 and C2 are not disjoint at vertex " + std::to_string(u));
        membership[u] = 2;
    }

    auto mask1 = make_mask(v, c1);
    auto mask2 = make_mask(v, c2);

    int deg1 = induced_degree(g, c1[0], mask1);
    for (int u : c1) {
        if (induced_degree(g, u, mask1) != deg1)
            throw StructureError("induced subgraph on C1 is not regular");
    }
    int deg2 = induced_degree(g, c2[0], mask2);
    for (int u : c2) {
        if (induced_degree(g, u, mask2) != deg2)
            throw StructureError("induced subgraph on C2 is not regular");
    }
    if (deg1 != deg2)
        throw StructureError("induced degrees on C1 and C2 differ: " + std::to_string(deg1) +
                             " vs " + std::to_string(deg2));
    int deg12 = -1;
    for (int u : c1) {
        int d = induced_degree(g, u, mask1) + induced_degree(g, u, mask2);
        if (deg12 < 0) deg12 = d;
        if (d != deg12) throw StructureError("induced subgraph on C1 ∪ C2 is not regular");
    }
    for (int u : c2) {
        int d = induced_degree(g, u, mask1) + induced_degree(g, u, mask2);
        if (d != deg12) throw StructureError("induced subgraph on C1 ∪ C2 is not regular");
    }

    SwitchingPartition p;
    p.c1.assign(c1.begin(), c1.end());
    p.c2.assign(c2.begin(), c2.end());
    std::sort(p.c1.begin(), p.c1.end());
    std::sort(p.c2.begin(), p.c2.end());
    const int size = static_cast<int>(c1.size());
    for (int x = 0; x < v; ++x) {
        if (membership[x]) continue;
        p.d.push_back(x);
        int n1 = count_in_mask(g, x, mask1);
        int n2 = count_in_mask(g, x, mask2);
        bool equal_split = n1 == n2;
        bool full_c1 = n1 == size && n2 == 0;
        bool full_c2 = n2 == size && n1 == 0;
        if (!equal_split && !full_c1 && !full_c2)
            throw StructureError("vertex " + std::to_string(x) +
                                 " fails both switching conditions (|N∩C1| = " + std::to_string(n1) +
                                 ", |N∩C2| = " + std::to_string(n2) + ")");
    }
    return p;
}

Graph wqh_switch(const Graph& g, const SwitchingPartition& p) {
    auto validated = validate_switching_partition(g, p.c1, p.c2);
    auto mask1 = make_mask(g.vertex_count(), validated.c1);
    auto mask2 = make_mask(g.vertex_count(), validated.c2);
    const int size = static_cast<int>(validated.c1.size());

    Graph out = g;
    for (int x : validated.d) {
        int n1 = count_in_mask(g, x, mask1);
        int n2 = count_in_mask(g, x, mask2);
        if (n1 == size && n2 == 0) {
            for (int u : validated.c1) out.remove_edge(x, u);
            for (int u : validated.c2) out.add_edge(x, u);
        } else if (n2 == size && n1 == 0) {
            for (int u : validated.c2) out.remove_edge(x, u);
            for (int u : validated.c1) out.add_edge(x, u);
        }
    }
    if (out.edge_count() != g.edge_count())
        throw InternalConsistencyError("switching changed the edge count");
    return out;
}

SpreadSwitchResult spread_switch(const ConstructionContext& ctx, std::span<const int> copies,
                                 int i, int j) {
    const int n = ctx.code_count();
    if (i == j) throw ArgumentError("code indices i and j must be distinct");
    if (i < 1 || i > n || j < 1 || j > n)
        throw ArgumentError("code indices must lie in {1.." + std::to_string(n) + "}");
    std::vector<int> I(copies.begin(), copies.end());
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    if (I.empty() || I.front() != 1)
        throw ArgumentError("the copy set I must contain 1");
    if (I.back() > ctx.t) throw ArgumentError("copy index exceeds t = " + std::to_string(ctx.t));

    auto original = f_pi_construct(ctx);

    // The clique through code i meets copy ell in the code pi_ell(i);
    // C1 collects those parts over the copies in I, and C2 the same
    // with j.
    std::vector<int> c1, c2;
    for (int ell : I) {
        int idx_i = (ell == 1) ? i : ctx.pi.apply(ell, i);
        int idx_j = (ell == 1) ? j : ctx.pi.apply(ell, j);
        auto bi = ctx.block_code(ell, idx_i);
        auto bj = ctx.block_code(ell, idx_j);
        c1.insert(c1.end(), bi.begin(), bi.end());
        c2.insert(c2.end(), bj.begin(), bj.end());
    }

    auto partition = validate_switching_partition(original.graph, c1, c2);
    Graph switched = wqh_switch(original.graph, partition);

    PermTuple pi_prime = ctx.pi;
    for (int r = 2; r <= ctx.t; ++r) {
        if (std::binary_search(I.begin(), I.end(), r)) continue;
        auto& perm = pi_prime.perms[r - 2];
        std::swap(perm[i - 1], perm[j - 1]); // pi_r composed with the transposition (i j)
    }

    ConstructionContext ctx_prime = ctx;
    ctx_prime.pi = pi_prime;
    auto expected = f_pi_construct(ctx_prime);
    if (!(switched == expected.graph))
        throw InternalConsistencyError(
            "switched graph does not equal the construction under the updated tuple");

    return {std::move(switched), std::move(pi_prime), std::move(partition)};
}

} // namespace neumaier
