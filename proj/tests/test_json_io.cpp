#include <doctest.h>

#include "neumaier/construction.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/json_io.hpp"

using namespace neumaier;

TEST_CASE("certificate round-trips through JSON") {
    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    pi.perms.push_back({6, 5, 4, 3, 2, 1});
    auto ctx = make_context(std::move(inputs), std::move(pi));
    auto result = f_pi_construct(ctx);
    auto cert = certify_neumaier(result.graph, result.spread.front(), &result.spread);

    auto j = certificate_to_json(cert);
    auto back = certificate_from_json(j);
    CHECK(back.params == cert.params);
    CHECK(back.witness_clique == cert.witness_clique);
    CHECK(back.spread == cert.spread);
    CHECK(back.strict == cert.strict);
    verify_certificate(result.graph, back);
}

TEST_CASE("partition and recipe round-trips") {
    auto gen = circulant_65();
    auto j = partition_to_json(*gen.partition);
    CHECK(partition_from_json(j) == *gen.partition);

    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    pi.perms.push_back({2, 3, 1, 6, 5, 4});
    auto rj = recipe_to_json(inputs, pi);
    auto [inputs2, pi2] = recipe_from_json(rj);
    REQUIRE(inputs2.size() == 2);
    CHECK(inputs2[0].graph == inputs[0].graph);
    CHECK(inputs2[1].partition == inputs[1].partition);
    CHECK(pi2 == pi);

    CHECK_THROWS_AS(recipe_from_json(json::object()), ArgumentError);
}

TEST_CASE("lattice serialisations") {
    auto t1 = triangular_sublattice(1);
    auto back = sublattice_from_json(sublattice_to_json(t1));
    CHECK(back.hnf == t1.hnf);
    CHECK(back.index == 28);

    auto spec = triangular_grid_spec();
    auto spec_back = lattice_spec_from_json(lattice_spec_to_json(spec));
    CHECK(spec_back.rank == 2);
    CHECK(spec_back.connection_ambient == spec.connection_ambient);

    auto j = sublattice_to_json(t1);
    j["index"] = 9;
    CHECK_THROWS_AS(sublattice_from_json(j), ArgumentError);
}
