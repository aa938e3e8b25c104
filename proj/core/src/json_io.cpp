#include "neumaier/json_io.hpp"

#include "neumaier/errors.hpp"
#include "neumaier/graph6.hpp"

namespace neumaier {

json certificate_to_json(const NeumaierCertificate& cert) {
    json j;
    j["params"] = {{"v", cert.params.v},
                   {"k", cert.params.k},
                   {"lambda", cert.params.lambda},
                   {"nexus", cert.params.nexus},
                   {"clique_size", cert.params.clique_size}};
    j["witness_clique"] = cert.witness_clique;
    if (cert.spread) j["spread"] = *cert.spread;
    j["strict"] = cert.strict;
    if (cert.witnesses) {
        j["witnesses"] = {{"pair_low", cert.witnesses->pair_low},
                          {"common_low", cert.witnesses->common_low},
                          {"pair_high", cert.witnesses->pair_high},
                          {"common_high", cert.witnesses->common_high}};
    }
    return j;
}

NeumaierCertificate certificate_from_json(const json& j) {
    NeumaierCertificate cert;
    const auto& p = j.at("params");
    cert.params = {p.at("v").get<int>(), p.at("k").get<int>(), p.at("lambda").get<int>(),
                   p.at("nexus").get<int>(), p.at("clique_size").get<int>()};
    cert.witness_clique = j.at("witness_clique").get<std::vector<int>>();
    if (j.contains("spread")) cert.spread = j.at("spread").get<std::vector<std::vector<int>>>();
    cert.strict = j.at("strict").get<bool>();
    if (j.contains("witnesses")) {
        const auto& w = j.at("witnesses");
        StrictnessWitness wit;
        auto low = w.at("pair_low").get<std::vector<int>>();
        auto high = w.at("pair_high").get<std::vector<int>>();
        if (low.size() != 2 || high.size() != 2) throw ArgumentError("witness pairs need two vertices");
        wit.pair_low = {low[0], low[1]};
        wit.pair_high = {high[0], high[1]};
        wit.common_low = w.at("common_low").get<int>();
        wit.common_high = w.at("common_high").get<int>();
        cert.witnesses = wit;
    }
    return cert;
}

json partition_to_json(const CodePartition& p) {
    return json{{"a", p.a}, {"codes", p.codes}};
}

CodePartition partition_from_json(const json& j) {
    CodePartition p;
    p.a = j.at("a").get<int>();
    p.codes = j.at("codes").get<std::vector<std::vector<int>>>();
    p.canonicalise();
    return p;
}

json recipe_to_json(const std::vector<ConstructionInput>& inputs, const PermTuple& pi) {
    json j;
    j["inputs"] = json::array();
    for (const auto& in : inputs) {
        j["inputs"].push_back(
            {{"graph6", graph6_encode(in.graph)}, {"partition", partition_to_json(in.partition)}});
    }
    j["pi"] = pi.perms;
    return j;
}

std::pair<std::vector<ConstructionInput>, PermTuple> recipe_from_json(const json& j) {
    std::vector<ConstructionInput> inputs;
    if (!j.contains("inputs") || !j.at("inputs").is_array() || j.at("inputs").empty())
        throw ArgumentError("recipe needs a non-empty 'inputs' array");
    for (const auto& item : j.at("inputs")) {
        ConstructionInput in{graph6_decode(item.at("graph6").get<std::string>()),
                             partition_from_json(item.at("partition"))};
        inputs.push_back(std::move(in));
    }
    PermTuple pi;
    if (j.contains("pi")) pi.perms = j.at("pi").get<std::vector<std::vector<int>>>();
    return {std::move(inputs), std::move(pi)};
}

json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json item{{"value", e.value}, {"mult", e.multiplicity}};
        if (e.exact_integer) item["exact"] = std::to_string(*e.exact_integer);
        else if (e.exact_quadratic) item["exact"] = e.exact_quadratic->to_string();
        arr.push_back(std::move(item));
    }
    return arr;
}

json iso_classes_to_json(const std::vector<IsoClass>& classes) {
    json arr = json::array();
    for (const auto& c : classes) {
        arr.push_back({{"canonical_graph6", c.canonical_graph6},
                       {"count", c.count},
                       {"member_indices", c.member_indices}});
    }
    return arr;
}

json sublattice_to_json(const SublatticeBasis& basis) {
    return json{{"rows", basis.rows}, {"hnf", basis.hnf}, {"index", basis.index}};
}

SublatticeBasis sublattice_from_json(const json& j) {
    auto basis = SublatticeBasis::from_rows(j.at("rows").get<IntMat>());
    if (j.contains("index") && j.at("index").get<long long>() != basis.index)
        throw ArgumentError("stored sublattice index does not match its basis");
    return basis;
}

json lattice_spec_to_json(const LatticeSpec& spec) {
    return json{{"name", spec.name},
                {"rank", spec.rank},
                {"basis", spec.basis},
                {"connections", spec.connection_ambient}};
}

LatticeSpec lattice_spec_from_json(const json& j) {
    LatticeSpec spec;
    spec.name = j.value("name", "lattice");
    spec.rank = j.at("rank").get<int>();
    spec.basis = j.at("basis").get<IntMat>();
    spec.connection_ambient = j.at("connections").get<std::vector<IntVec>>();
    spec.validate();
    return spec;
}

} // namespace neumaier
