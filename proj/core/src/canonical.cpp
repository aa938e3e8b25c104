#include "neumaier/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>

#include "neumaier/errors.hpp"
#include "neumaier/graph6.hpp"

namespace neumaier {

namespace {

// Ordered partition in nauty style: `order` lists the vertices grouped
// by cell, `cell_start[u]` is the start index of the cell containing u,
// and `cell_len[start]` the cell length. Refinement splits cells by
// neighbour counts against splitter cells until equitable; the split
// discipline depends only on the partition structure, so isomorphic
// graphs refine along mirrored paths.
struct OrderedPartition {
    std::vector<int> order;
    std::vector<int> position;   // position[u] = index of u in `order`
    std::vector<int> cell_start; // per vertex
    std::vector<int> cell_len;   // indexed by start position

    explicit OrderedPartition(int v)
        : order(v), position(v), cell_start(v, 0), cell_len(v, 0) {
        std::iota(order.begin(), order.end(), 0);
        std::iota(position.begin(), position.end(), 0);
        cell_len[0] = v;
    }

    bool discrete() const {
        for (std::size_t s = 0; s < order.size();) {
            if (cell_len[s] != 1) return false;
            ++s;
        }
        return true;
    }
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), v_(g.vertex_count()) {}

    CanonicalForm run() {
        OrderedPartition pi(v_);
        std::deque<int> queue{0};
        refine(pi, queue);
        std::vector<int> prefix;
        search(pi, prefix);

        CanonicalForm out;
        out.canonical_graph6 = best_encoding_;
        out.labelling = best_labelling_;

        // Re-apply and check the certifying labelling.
        Graph relab(v_);
        for (int p = 0; p < v_; ++p) {
            for (int q = p + 1; q < v_; ++q) {
                if (g_.edge(out.labelling[p], out.labelling[q])) relab.add_edge(p, q);
            }
        }
        if (graph6_encode(relab) != out.canonical_graph6)
            throw InternalConsistencyError("canonical labelling failed its own recheck");
        return out;
    }

private:
    void refine(OrderedPartition& pi, std::deque<int>& queue) {
        std::vector<std::uint64_t> mask((v_ + 63) / 64, 0);
        std::vector<int> counts(v_, 0);
        while (!queue.empty()) {
            int splitter_start = queue.front();
            queue.pop_front();
            int splitter_len = pi.cell_len[splitter_start];
            std::fill(mask.begin(), mask.end(), 0);
            for (int i = splitter_start; i < splitter_start + splitter_len; ++i) {
                int u = pi.order[i];
                mask[u / 64] |= std::uint64_t{1} << (u % 64);
            }

            for (int s = 0; s < v_;) {
                int len = pi.cell_len[s];
                if (len == 1) {
                    ++s;
                    continue;
                }
                int first_count = -1;
                bool uniform = true;
                for (int i = s; i < s + len; ++i) {
                    int u = pi.order[i];
                    auto row = g_.row(u);
                    int c = 0;
                    for (std::size_t w = 0; w < mask.size(); ++w)
                        c += std::popcount(row[w] & mask[w]);
                    counts[u] = c;
                    if (first_count < 0) first_count = c;
                    else if (c != first_count) uniform = false;
                }
                if (uniform) {
                    s += len;
                    continue;
                }
                std::stable_sort(pi.order.begin() + s, pi.order.begin() + s + len,
                                 [&](int a, int b) { return counts[a] < counts[b]; });
                int sub_start = s;
                for (int i = s; i < s + len; ++i) {
                    if (i > s && counts[pi.order[i]] != counts[pi.order[i - 1]]) {
                        pi.cell_len[sub_start] = i - sub_start;
                        queue.push_back(sub_start);
                        sub_start = i;
                    }
                }
                pi.cell_len[sub_start] = s + len - sub_start;
                queue.push_back(sub_start);
                for (int i = s; i < s + len; ++i) {
                    pi.position[pi.order[i]] = i;
                    pi.cell_start[pi.order[i]] = 0; // fixed below
                }
                for (int i = s; i < s + len;) {
                    int l = pi.cell_len[i];
                    for (int j = i; j < i + l; ++j) pi.cell_start[pi.order[j]] = i;
                    i += l;
                }
                s += len;
            }
        }
    }

    // First smallest non-singleton cell.
    int target_cell(const OrderedPartition& pi) const {
        int best = -1, best_len = v_ + 1;
        for (int s = 0; s < v_;) {
            int len = pi.cell_len[s];
            if (len > 1 && len < best_len) {
                best = s;
                best_len = len;
            }
            s += len;
        }
        return best;
    }

    void handle_leaf(const OrderedPartition& pi) {
        Graph relab(v_);
        for (int p = 0; p < v_; ++p) {
            for (int q = p + 1; q < v_; ++q) {
                if (g_.edge(pi.order[p], pi.order[q])) relab.add_edge(p, q);
            }
        }
        std::string enc = graph6_encode(relab);

        if (first_labelling_.empty()) {
            first_labelling_ = pi.order;
            first_encoding_ = enc;
        } else if (enc == first_encoding_) {
            // Both labellings send g to the same graph, so their
            // composition is an automorphism of g.
            std::vector<int> inv_first(v_);
            for (int p = 0; p < v_; ++p) inv_first[first_labelling_[p]] = p;
            std::vector<int> sigma(v_);
            for (int u = 0; u < v_; ++u) sigma[u] = pi.order[inv_first[u]];
            bool ok = true;
            for (int u = 0; u < v_ && ok; ++u) {
                for (int w : g_.neighbours(u)) {
                    if (!g_.edge(sigma[u], sigma[w])) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) throw InternalConsistencyError("derived automorphism failed verification");
            automorphisms_.push_back(std::move(sigma));
        }

        if (best_encoding_.empty() || enc < best_encoding_) {
            best_encoding_ = std::move(enc);
            best_labelling_ = pi.order;
        }
    }

    void search(const OrderedPartition& pi, std::vector<int>& prefix) {
        int cell = target_cell(pi);
        if (cell < 0) {
            handle_leaf(pi);
            return;
        }
        int len = pi.cell_len[cell];
        std::vector<int> candidates(pi.order.begin() + cell, pi.order.begin() + cell + len);
        std::sort(candidates.begin(), candidates.end());

        // Orbit pruning: among automorphisms found so far, those fixing
        // the individualized prefix pointwise map sibling branches onto
        // each other.
        std::vector<int> parent(v_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& sigma : automorphisms_) {
            bool fixes = true;
            for (int p : prefix) {
                if (sigma[p] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int u = 0; u < v_; ++u) {
                int a = find(u), b = find(sigma[u]);
                if (a != b) parent[a] = b;
            }
        }

        std::vector<int> explored_roots;
        for (int u : candidates) {
            int root = find(u);
            if (std::find(explored_roots.begin(), explored_roots.end(), root) !=
                explored_roots.end())
                continue;
            explored_roots.push_back(root);

            OrderedPartition child = pi;
            // Individualize u: split its cell into [{u}, rest].
            int s = cell;
            int pos = child.position[u];
            std::swap(child.order[s], child.order[pos]);
            child.position[child.order[pos]] = pos;
            child.position[child.order[s]] = s;
            child.cell_len[s] = 1;
            child.cell_len[s + 1] = len - 1;
            child.cell_start[u] = s;
            for (int i = s + 1; i < s + len; ++i) child.cell_start[child.order[i]] = s + 1;

            std::deque<int> queue{s};
            refine(child, queue);
            prefix.push_back(u);
            search(child, prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int v_;
    std::string best_encoding_;
    std::vector<int> best_labelling_;
    std::string first_encoding_;
    std::vector<int> first_labelling_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.vertex_count() < 1) throw ArgumentError("canonical form needs at least one vertex");
    return CanonicalSearch(g).run();
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1).canonical_graph6 == canonical_form(g2).canonical_graph6;
}

std::vector<IsoClass> classify(std::span<const Graph> graphs) {
    std::map<std::string, IsoClass> by_canon;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto cf = canonical_form(graphs[i]);
        auto& cls = by_canon[cf.canonical_graph6];
        cls.canonical_graph6 = cf.canonical_graph6;
        ++cls.count;
        cls.member_indices.push_back(static_cast<int>(i));
    }
    std::vector<IsoClass> out;
    out.reserve(by_canon.size());
    for (auto& [key, cls] : by_canon) out.push_back(std::move(cls));
    return out;
}

} // namespace neumaier
