#pragma once

#include <span>
#include <string>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

/// Canonical form of a graph: the graph6 string of the canonically
/// relabelled graph plus the certifying labelling
/// (labelling[new] = original vertex). Isomorphic graphs produce
/// identical canonical strings.
struct CanonicalForm {
    std::string canonical_graph6;
    std::vector<int> labelling;
};

/// Deterministic canonical form via iterative colour refinement with
/// individualization backtracking on the first smallest non-singleton
/// colour class; the representative is the lexicographically least
/// graph6 encoding over the explored leaves, with pruning by the
/// automorphisms discovered during the search. The certifying labelling
/// is re-applied and checked before returning.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g1, const Graph& g2);

struct IsoClass {
    std::string canonical_graph6;
    int count = 0;
    std::vector<int> member_indices;
};

/// Groups graphs by canonical form; classes are ordered by canonical
/// string, members by input index.
std::vector<IsoClass> classify(std::span<const Graph> graphs);

} // namespace neumaier
