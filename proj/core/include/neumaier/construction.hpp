#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "neumaier/codes.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

/// Tuple of permutations (pi_2, ..., pi_t) of {1..n} in one-line
/// notation, 1-indexed. Empty when t = 1.
struct PermTuple {
    std::vector<std::vector<int>> perms;

    int count() const { return static_cast<int>(perms.size()); }
    /// Image of code index i (1-based) under pi_r, r in {2..t}.
    int apply(int r, int i) const { return perms[r - 2][i - 1]; }
    bool operator==(const PermTuple&) const = default;
};

struct ConstructionInput {
    Graph graph;
    CodePartition partition;
};

/// Validated inputs of the clique-spread construction: t edge-regular
/// graphs sharing parameters (v, k, lambda), each partitioned into
/// perfect 1-codes of size a with a | lambda+2 and t = (lambda+2)/a.
struct ConstructionContext {
    std::vector<ConstructionInput> inputs;
    PermTuple pi;
    int a = 0;
    int t = 0;
    int v = 0;
    int k = 0;
    int lambda = 0;

    int code_count() const { return v / a; }
    /// Global vertex ids of code `index` (1-based) inside copy `ell`
    /// (1-based), in block layout.
    std::vector<int> block_code(int ell, int index) const;
};

/// Validates inputs and permutations; throws ValidationError naming the
/// first violated condition.
ConstructionContext make_context(std::vector<ConstructionInput> inputs, PermTuple pi);

struct ConstructionResult {
    Graph graph;
    std::vector<std::vector<int>> spread;
};

/// The clique-spread construction: disjoint union of the t input copies
/// plus, for each code index i, all edges inside the union of the
/// matched codes across copies. With checks enabled the edge-regular
/// parameters (vt, k+lambda+1, lambda) and the 1-regular spread are
/// verified and any failure raises InternalConsistencyError.
ConstructionResult f_pi_construct(const ConstructionContext& ctx, bool check_postconditions = true);

enum class StrictnessBasis {
    theorem,  // t >= 2, non-complete inputs: cross-copy and distance-2 witness pairs
    measured, // full mu-constancy scan
};

struct StrictnessVerdict {
    bool strict = false;
    StrictnessBasis basis = StrictnessBasis::measured;
    std::optional<StrictnessWitness> witnesses;
};

/// Strictness of a construction output. For t >= 2 with non-complete
/// inputs the verdict is strict and verified by exhibiting a
/// non-adjacent pair with exactly two common neighbours and one with at
/// least three; otherwise the verdict is measured by a full scan.
StrictnessVerdict strictness_verdict(const ConstructionContext& ctx, const Graph& output);

/// Converse of the construction: removes all intra-clique edges of the
/// spread and splits into connected components, each returned with the
/// induced partition into perfect 1-codes.
std::vector<std::pair<Graph, CodePartition>> deconstruct(
    const Graph& g, std::span<const std::vector<int>> spread);

} // namespace neumaier
