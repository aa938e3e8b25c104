#pragma once

#include <json.hpp>

#include "neumaier/canonical.hpp"
#include "neumaier/construction.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/lattice.hpp"
#include "neumaier/spectral.hpp"

namespace neumaier {

using json = nlohmann::json;

/// {params: {v,k,lambda,nexus,clique_size}, witness_clique, spread?,
///  strict, witnesses?}
json certificate_to_json(const NeumaierCertificate& cert);
NeumaierCertificate certificate_from_json(const json& j);

/// {a, codes: [[...], ...]} in canonical order.
json partition_to_json(const CodePartition& p);
CodePartition partition_from_json(const json& j);

/// Construction recipe: {inputs: [{graph6, partition}], pi: [[...]]}.
json recipe_to_json(const std::vector<ConstructionInput>& inputs, const PermTuple& pi);
std::pair<std::vector<ConstructionInput>, PermTuple> recipe_from_json(const json& j);

/// [{value, mult, exact?}] sorted by decreasing value.
json spectrum_to_json(const std::vector<SpectrumEntry>& entries);

/// [{canonical_graph6, count, member_indices}]
json iso_classes_to_json(const std::vector<IsoClass>& classes);

/// Integer-matrix serialisations of the lattice machinery.
json sublattice_to_json(const SublatticeBasis& basis);
SublatticeBasis sublattice_from_json(const json& j);
json lattice_spec_to_json(const LatticeSpec& spec);
LatticeSpec lattice_spec_from_json(const json& j);

} // namespace neumaier
