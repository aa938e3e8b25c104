#pragma once

#include <span>
#include <vector>

#include "neumaier/construction.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

/// Validated switching partition V = C1 ∪ C2 ∪ D: |C1| = |C2|, the
/// induced subgraphs on C1, C2 and C1 ∪ C2 are regular with equal
/// degrees on C1 and C2, and every x in D either sees C1 and C2 equally
/// often or is fully joined to exactly one of them.
struct SwitchingPartition {
    std::vector<int> c1;
    std::vector<int> c2;
    std::vector<int> d;
};

/// Checks the switching conditions; throws ArgumentError /
/// StructureError naming the first failing vertex or condition.
SwitchingPartition validate_switching_partition(const Graph& g, std::span<const int> c1,
                                                std::span<const int> c2);

/// Spectrum-preserving switch: every x in D fully joined to C1 is
/// re-joined to C2 instead and vice versa; all other adjacencies are
/// kept. The partition is re-validated before switching.
Graph wqh_switch(const Graph& g, const SwitchingPartition& p);

struct SpreadSwitchResult {
    Graph graph;
    PermTuple pi_prime;
    SwitchingPartition partition;
};

/// Construction-compatible switching: for I ⊆ {1..t} with 1 ∈ I and
/// distinct code indices i, j, switches between the I-parts of cliques
/// i and j. The result equals, as a labelled graph, the construction
/// under the updated tuple pi' (pi'_r = pi_r for r in I, pi_r ∘ (i j)
/// otherwise); the equality is asserted.
SpreadSwitchResult spread_switch(const ConstructionContext& ctx, std::span<const int> copies,
                                 int i, int j);

} // namespace neumaier
