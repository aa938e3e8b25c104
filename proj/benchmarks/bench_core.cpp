#include <benchmark/benchmark.h>

#include <numeric>

#include "neumaier/canonical.hpp"
#include "neumaier/codes.hpp"
#include "neumaier/construction.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/lattice.hpp"
#include "neumaier/spectral.hpp"

using namespace neumaier;

namespace {

ConstructionContext icosahedra_context() {
    auto ico = named_graph("icosahedron");
    std::vector<ConstructionInput> inputs{{ico.graph, *ico.partition}, {ico.graph, *ico.partition}};
    PermTuple pi;
    std::vector<int> id(6);
    std::iota(id.begin(), id.end(), 1);
    pi.perms.push_back(id);
    return make_context(std::move(inputs), std::move(pi));
}

void BM_ConstructIcosahedraPair(benchmark::State& state) {
    auto ctx = icosahedra_context();
    for (auto _ : state) {
        auto result = f_pi_construct(ctx);
        benchmark::DoNotOptimize(result.graph.edge_count());
    }
}
BENCHMARK(BM_ConstructIcosahedraPair);

void BM_ClassifyRegularity65(benchmark::State& state) {
    auto gen = circulant_65();
    for (auto _ : state) {
        auto rc = classify_regularity(gen.graph);
        benchmark::DoNotOptimize(rc.kind);
    }
}
BENCHMARK(BM_ClassifyRegularity65);

void BM_CanonicalForm24(benchmark::State& state) {
    auto g = f_pi_construct(icosahedra_context()).graph;
    for (auto _ : state) {
        auto cf = canonical_form(g);
        benchmark::DoNotOptimize(cf.canonical_graph6.size());
    }
}
BENCHMARK(BM_CanonicalForm24);

void BM_CharPoly24(benchmark::State& state) {
    auto g = f_pi_construct(icosahedra_context()).graph;
    for (auto _ : state) {
        auto p = char_poly(g);
        benchmark::DoNotOptimize(p.coeffs.back());
    }
}
BENCHMARK(BM_CharPoly24);

void BM_CodePartitionSearchIcosahedron(benchmark::State& state) {
    auto ico = named_graph("icosahedron");
    for (auto _ : state) {
        auto partitions = find_code_partitions(ico.graph, 2, 10);
        benchmark::DoNotOptimize(partitions.size());
    }
}
BENCHMARK(BM_CodePartitionSearchIcosahedron);

void BM_QuotientEnumeration28(benchmark::State& state) {
    auto spec = triangular_grid_spec();
    auto code = triangular_code_ideal();
    for (auto _ : state) {
        auto quotients = enumerate_code_preserving_quotients(spec, code, 28);
        benchmark::DoNotOptimize(quotients.size());
    }
}
BENCHMARK(BM_QuotientEnumeration28);

} // namespace

BENCHMARK_MAIN();
