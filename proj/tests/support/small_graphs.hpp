#pragma once

// Exhaustive generation of small graphs up to isomorphism by vertex
// augmentation with canonical-form deduplication.

#include <map>
#include <string>
#include <vector>

#include "neumaier/canonical.hpp"
#include "neumaier/graph.hpp"

namespace small_graphs {

inline std::vector<neumaier::Graph> all_up_to_iso(int n) {
    std::vector<neumaier::Graph> level{neumaier::Graph(1)};
    for (int v = 2; v <= n; ++v) {
        std::map<std::string, neumaier::Graph> next;
        for (const auto& parent : level) {
            for (unsigned long mask = 0; mask < (1ul << (v - 1)); ++mask) {
                neumaier::Graph g(v);
                for (int u = 0; u < v - 1; ++u) {
                    for (int w = u + 1; w < v - 1; ++w) {
                        if (parent.edge(u, w)) g.add_edge(u, w);
                    }
                    if ((mask >> u) & 1) g.add_edge(u, v - 1);
                }
                auto canon = neumaier::canonical_form(g);
                next.emplace(canon.canonical_graph6, std::move(g));
            }
        }
        level.clear();
        for (auto& [key, g] : next) level.push_back(std::move(g));
    }
    return level;
}

} // namespace small_graphs
