#include "neumaier/construction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "neumaier/errors.hpp"

namespace neumaier {

std::vector<int> ConstructionContext::block_code(int ell, int index) const {
    const auto& code = inputs[ell - 1].partition.codes[index - 1];
    std::vector<int> out;
    out.reserve(code.size());
    for (int u : code) out.push_back((ell - 1) * v + u);
    return out;
}

ConstructionContext make_context(std::vector<ConstructionInput> inputs, PermTuple pi) {
    if (inputs.empty()) throw ValidationError("at least one input graph is required");

    ConstructionContext ctx;
    for (std::size_t ell = 0; ell < inputs.size(); ++ell) {
        auto rc = classify_regularity(inputs[ell].graph);
        if (!rc.is_edge_regular())
            throw ValidationError("input " + std::to_string(ell + 1) + " is not edge-regular");
        if (ell == 0) {
            ctx.v = rc.v;
            ctx.k = rc.k;
            ctx.lambda = *rc.lambda;
        } else if (rc.v != ctx.v || rc.k != ctx.k || *rc.lambda != ctx.lambda) {
            throw ValidationError("input " + std::to_string(ell + 1) + " has parameters " +
                                  rc.erg().to_string() + ", expected " +
                                  ErgParams{ctx.v, ctx.k, ctx.lambda}.to_string());
        }
        inputs[ell].partition.canonicalise();
        verify_code_partition(inputs[ell].graph, inputs[ell].partition);
        if (ell == 0) {
            ctx.a = inputs[ell].partition.a;
        } else if (inputs[ell].partition.a != ctx.a) {
            throw ValidationError("input partitions have mixed code sizes");
        }
    }

    if (ctx.a <= 0 || (ctx.lambda + 2) % ctx.a != 0)
        throw ValidationError("code size a = " + std::to_string(ctx.a) +
                              " does not divide lambda+2 = " + std::to_string(ctx.lambda + 2));
    ctx.t = (ctx.lambda + 2) / ctx.a;
    if (static_cast<int>(inputs.size()) != ctx.t)
        throw ValidationError("expected t = (lambda+2)/a = " + std::to_string(ctx.t) +
                              " input graphs, got " + std::to_string(inputs.size()));

    const int n = ctx.v / ctx.a;
    if (pi.count() != ctx.t - 1)
        throw ValidationError("expected " + std::to_string(ctx.t - 1) + " permutations, got " +
                              std::to_string(pi.count()));
    for (const auto& perm : pi.perms) {
        if (static_cast<int>(perm.size()) != n)
            throw ValidationError("permutation must act on {1.." + std::to_string(n) + "}");
        std::vector<bool> hit(n + 1, false);
        for (int image : perm) {
            if (image < 1 || image > n || hit[image])
                throw ValidationError("permutation is not a bijection on {1.." + std::to_string(n) +
                                      "}");
            hit[image] = true;
        }
    }

    ctx.inputs = std::move(inputs);
    ctx.pi = std::move(pi);
    return ctx;
}

ConstructionResult f_pi_construct(const ConstructionContext& ctx, bool check_postconditions) {
    const int n = ctx.code_count();
    Graph out(ctx.v * ctx.t);
    for (int ell = 0; ell < ctx.t; ++ell) {
        const Graph& gi = ctx.inputs[ell].graph;
        const int offset = ell * ctx.v;
        for (int u = 0; u < ctx.v; ++u) {
            for (int w : gi.neighbours(u)) {
                if (w > u) out.add_edge(offset + u, offset + w);
            }
        }
    }

    std::vector<std::vector<int>> spread;
    spread.reserve(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> members;
        for (int ell = 1; ell <= ctx.t; ++ell) {
            int index = (ell == 1) ? i : ctx.pi.apply(ell, i);
            auto block = ctx.block_code(ell, index);
            members.insert(members.end(), block.begin(), block.end());
        }
        std::sort(members.begin(), members.end());
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                if (!out.edge(members[x], members[y])) out.add_edge(members[x], members[y]);
            }
        }
        spread.push_back(std::move(members));
    }

    if (check_postconditions) {
        auto rc = classify_regularity(out);
        if (!rc.is_edge_regular() || rc.v != ctx.v * ctx.t || rc.k != ctx.k + ctx.lambda + 1 ||
            *rc.lambda != ctx.lambda)
            throw InternalConsistencyError(
                "construction output is not edge-regular with parameters (" +
                std::to_string(ctx.v * ctx.t) + "," + std::to_string(ctx.k + ctx.lambda + 1) + "," +
                std::to_string(ctx.lambda) + "); got " + rc.to_string());
        std::vector<bool> covered(out.vertex_count(), false);
        for (const auto& clique : spread) {
            if (static_cast<int>(clique.size()) != ctx.lambda + 2)
                throw InternalConsistencyError("spread clique has wrong size");
            auto m = clique_nexus(out, clique);
            if (!m || *m != 1) throw InternalConsistencyError("spread clique is not 1-regular");
            for (int u : clique) covered[u] = true;
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            throw InternalConsistencyError("spread does not partition the output vertex set");
    }
    return {std::move(out), std::move(spread)};
}

StrictnessVerdict strictness_verdict(const ConstructionContext& ctx, const Graph& output) {
    if (output.vertex_count() != ctx.v * ctx.t)
        throw ArgumentError("output graph does not match the context");

    bool inputs_non_complete = std::none_of(ctx.inputs.begin(), ctx.inputs.end(),
                                            [](const ConstructionInput& in) { return in.graph.complete(); });

    if (ctx.t >= 2 && inputs_non_complete) {
        const int n = ctx.code_count();
        StrictnessWitness wit;

        // Pair with exactly two common neighbours: x in copy 1 / code 1,
        // y in copy 2 / any code other than pi_2(1).
        int i1 = 1;
        int blocked = ctx.pi.apply(2, i1);
        int i2 = (blocked == 1) ? 2 : 1;
        if (i2 > n) throw InternalConsistencyError("no admissible second code index");
        int x = ctx.block_code(1, i1).front();
        int y = ctx.block_code(2, i2).front();
        if (output.edge(x, y)) throw InternalConsistencyError("witness pair is adjacent");
        wit.pair_low = {x, y};
        wit.common_low = output.common_neighbour_count(x, y);
        if (wit.common_low != 2)
            throw InternalConsistencyError("cross-copy witness pair has " +
                                           std::to_string(wit.common_low) +
                                           " common neighbours, expected exactly 2");

        // Pair with at least three: two vertices of copy 1 at distance 2
        // in the first input graph.
        const Graph& g1 = ctx.inputs[0].graph;
        bool found = false;
        for (int u = 0; u < ctx.v && !found; ++u) {
            for (int z = u + 1; z < ctx.v && !found; ++z) {
                if (g1.edge(u, z)) continue;
                if (g1.common_neighbour_count(u, z) == 0) continue;
                if (output.edge(u, z))
                    throw InternalConsistencyError("distance-2 pair became adjacent in the output");
                wit.pair_high = {u, z};
                wit.common_high = output.common_neighbour_count(u, z);
                found = true;
            }
        }
        if (!found) throw InternalConsistencyError("no distance-2 pair found in a non-complete input");
        if (wit.common_high < 3)
            throw InternalConsistencyError("same-copy witness pair has " +
                                           std::to_string(wit.common_high) +
                                           " common neighbours, expected at least 3");
        return {true, StrictnessBasis::theorem, wit};
    }

    if (auto wit = mu_variation_witness(output)) return {true, StrictnessBasis::measured, wit};
    return {false, StrictnessBasis::measured, std::nullopt};
}

std::vector<std::pair<Graph, CodePartition>> deconstruct(
    const Graph& g, std::span<const std::vector<int>> spread) {
    const int v = g.vertex_count();
    std::vector<bool> covered(v, false);
    for (const auto& clique : spread) {
        if (clique.empty()) throw StructureError("spread contains an empty clique");
        for (std::size_t x = 0; x < clique.size(); ++x) {
            g.check_vertex(clique[x]);
            if (covered[clique[x]]) throw StructureError("spread cliques overlap");
            covered[clique[x]] = true;
            for (std::size_t y = x + 1; y < clique.size(); ++y) {
                if (!g.edge(clique[x], clique[y]))
                    throw StructureError("spread member is not a clique");
            }
        }
        if (static_cast<int>(clique.size()) < v) {
            auto m = clique_nexus(g, clique);
            if (!m || *m != 1) throw StructureError("spread clique is not 1-regular");
        }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw StructureError("spread does not cover the vertex set");

    Graph stripped = g;
    for (const auto& clique : spread) {
        for (std::size_t x = 0; x < clique.size(); ++x) {
            for (std::size_t y = x + 1; y < clique.size(); ++y) {
                stripped.remove_edge(clique[x], clique[y]);
            }
        }
    }

    // Connected components in ascending order of their minimum vertex.
    std::vector<int> component(v, -1);
    int ncomp = 0;
    for (int s = 0; s < v; ++s) {
        if (component[s] >= 0) continue;
        std::vector<int> stack{s};
        component[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : stripped.neighbours(u)) {
                if (component[w] < 0) {
                    component[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    std::vector<std::vector<int>> members(ncomp);
    for (int u = 0; u < v; ++u) members[component[u]].push_back(u);

    std::vector<std::pair<Graph, CodePartition>> out;
    for (int c = 0; c < ncomp; ++c) {
        const auto& verts = members[c];
        Graph sub = stripped.induced(verts);
        std::vector<int> local(v, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

        CodePartition part;
        for (const auto& clique : spread) {
            std::vector<int> code;
            for (int u : clique) {
                if (component[u] == c) code.push_back(local[u]);
            }
            if (code.empty()) continue;
            std::sort(code.begin(), code.end());
            part.codes.push_back(std::move(code));
        }
        if (part.codes.empty()) throw InternalConsistencyError("component not met by any clique");
        part.a = static_cast<int>(part.codes.front().size());
        for (const auto& code : part.codes) {
            if (static_cast<int>(code.size()) != part.a)
                throw StructureError("induced codes of a component have unequal sizes");
        }
        part.canonicalise();
        verify_code_partition(sub, part);
        out.emplace_back(std::move(sub), std::move(part));
    }
    return out;
}

} // namespace neumaier
