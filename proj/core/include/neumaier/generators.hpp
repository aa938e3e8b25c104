#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neumaier/codes.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/lattice.hpp"

namespace neumaier {

struct GeneratedGraph {
    Graph graph;
    std::optional<CodePartition> partition;
    std::string description;
};

/// Fixed catalogue graphs. "icosahedron" ships with its partition into
/// six antipodal perfect 1-codes; "dodecahedron" ships its ten
/// antipodal perfect 2-codes (stored as a partition with a = 2, codes
/// of radius 2).
GeneratedGraph named_graph(std::string_view name);

/// Two dodecahedron copies under the natural matching with the cross
/// distance-2 edges added. Edge-regular (40, 9, 2); the partition is
/// the ten quadruples of matched antipodal pairs, each verified as a
/// perfect 1-code.
GeneratedGraph double_dodecahedron();

/// Circulant graph on Z_n: i ~ j iff (i - j) mod n is in the connection
/// set, which must be symmetric under negation.
Graph circulant(int n, std::span<const int> connections);

/// Connection set {2^i mod n} closed under negation, used by the
/// 65-vertex catalogue graph.
std::vector<int> power_of_two_connections(int n);

/// The 65-vertex circulant with its thirteen-coset partition.
GeneratedGraph circulant_65();

/// Triangular-grid quotient Delta_1 (which = 1, group Z2 + Z14) or
/// Delta_2 (which = 2, group Z28), edge-regular (28, 6, 2) with the
/// seven-coset partition into perfect 1-codes of size 4.
GeneratedGraph triangular_quotient(int which);

/// Sublattices of the triangular grid used by the quotients above, in
/// (1, omega) coordinates.
SublatticeBasis triangular_code_ideal();      // index 7
SublatticeBasis triangular_sublattice(int which); // index 28

struct GeneratorInfo {
    std::string name;
    std::string parameters;
    std::string description;
};
std::vector<GeneratorInfo> generator_registry();

} // namespace neumaier
