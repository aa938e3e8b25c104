#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

/// Ordered partition of a graph's vertex set into perfect 1-codes of
/// common size a. Codes are stored sorted ascending and listed in
/// canonical order (sorted by minimum element, which for a partition is
/// the same as lexicographic order).
struct CodePartition {
    int a = 0;
    std::vector<std::vector<int>> codes;

    int code_count() const { return static_cast<int>(codes.size()); }
    void canonicalise();
    bool operator==(const CodePartition&) const = default;
};

/// True iff the radius-e balls centred at the given vertices partition
/// the vertex set (pairwise disjoint and covering).
bool is_perfect_code(const Graph& g, std::span<const int> centres, int radius);

/// Full invariant check of a partition against its graph; throws
/// StructureError naming the first failure.
void verify_code_partition(const Graph& g, const CodePartition& p);

/// All perfect 1-codes of g, as exact covers of the vertex set by
/// closed neighbourhoods, sorted lexicographically.
std::vector<std::vector<int>> find_perfect_one_codes(const Graph& g);

/// Exhaustive two-level exact-cover search for partitions of V into
/// perfect 1-codes of size a. Returns up to `limit` distinct partitions
/// in deterministic canonical order.
std::vector<CodePartition> find_code_partitions(const Graph& g, int a, std::size_t limit);

/// Partition of a Cayley graph over Z_{d1} + ... + Z_{dr} (mixed-radix
/// vertex labels, most significant factor first) into cosets of the
/// subgroup generated by the given element tuples. Each coset is
/// verified as a perfect 1-code.
CodePartition coset_partition(std::span<const int> group_orders,
                              std::span<const std::vector<int>> subgroup_generators,
                              const Graph& g);

} // namespace neumaier
