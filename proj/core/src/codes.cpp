#include "neumaier/codes.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

// Knuth's dancing-links exact cover. Columns are mandatory items;
// rows are the options. Branching is minimum-remaining-candidates with
// ties broken by lowest column index; the root column can be pinned.
class DancingLinks {
public:
    explicit DancingLinks(int columns) : ncols_(columns) {
        nodes_.reserve(columns + 1);
        // node 0 is the root header
        for (int c = 0; c <= columns; ++c) {
            Node n;
            n.left = (c + ncols_) % (ncols_ + 1);
            n.right = (c + 1) % (ncols_ + 1);
            n.up = c;
            n.down = c;
            n.column = c;
            nodes_.push_back(n);
        }
        sizes_.assign(columns + 1, 0);
    }

    void add_row(int row_id, std::span<const int> cols) {
        int first = -1;
        for (int c : cols) {
            int id = static_cast<int>(nodes_.size());
            Node n;
            n.column = c + 1; // header nodes occupy 1..ncols
            n.row = row_id;
            n.up = nodes_[n.column].up;
            n.down = n.column;
            nodes_[nodes_[n.column].up].down = id;
            nodes_[n.column].up = id;
            ++sizes_[n.column];
            if (first < 0) {
                n.left = id;
                n.right = id;
                first = id;
            } else {
                n.left = nodes_[first].left;
                n.right = first;
                nodes_[nodes_[first].left].right = id;
                nodes_[first].left = id;
            }
            nodes_.push_back(n);
        }
    }

    // Enumerates exact covers in deterministic order; the callback
    // returns false to stop the search.
    void solve(const std::function<bool(const std::vector<int>&)>& on_solution,
               int pinned_root_column = -1) {
        pinned_root_ = pinned_root_column >= 0 ? pinned_root_column + 1 : -1;
        stop_ = false;
        selection_.clear();
        search(0, on_solution);
    }

private:
    struct Node {
        int left = 0, right = 0, up = 0, down = 0;
        int column = 0;
        int row = -1;
    };

    void cover(int c) {
        nodes_[nodes_[c].right].left = nodes_[c].left;
        nodes_[nodes_[c].left].right = nodes_[c].right;
        for (int i = nodes_[c].down; i != c; i = nodes_[i].down) {
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].down].up = nodes_[j].up;
                nodes_[nodes_[j].up].down = nodes_[j].down;
                --sizes_[nodes_[j].column];
            }
        }
    }

    void uncover(int c) {
        for (int i = nodes_[c].up; i != c; i = nodes_[i].up) {
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++sizes_[nodes_[j].column];
                nodes_[nodes_[j].down].up = j;
                nodes_[nodes_[j].up].down = j;
            }
        }
        nodes_[nodes_[c].right].left = c;
        nodes_[nodes_[c].left].right = c;
    }

    int choose_column(int depth) const {
        if (depth == 0 && pinned_root_ > 0) return pinned_root_;
        int best = -1, best_size = -1;
        for (int c = nodes_[0].right; c != 0; c = nodes_[c].right) {
            if (best < 0 || sizes_[c] < best_size) {
                best = c;
                best_size = sizes_[c];
            }
        }
        return best;
    }

    void search(int depth, const std::function<bool(const std::vector<int>&)>& on_solution) {
        if (stop_) return;
        if (nodes_[0].right == 0) {
            auto rows = selection_;
            std::sort(rows.begin(), rows.end());
            if (!on_solution(rows)) stop_ = true;
            return;
        }
        int c = choose_column(depth);
        if (c < 0 || sizes_[c] == 0) return;
        cover(c);
        for (int i = nodes_[c].down; i != c && !stop_; i = nodes_[i].down) {
            selection_.push_back(nodes_[i].row);
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) cover(nodes_[j].column);
            search(depth + 1, on_solution);
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) uncover(nodes_[j].column);
            selection_.pop_back();
        }
        uncover(c);
    }

    int ncols_;
    int pinned_root_ = -1;
    bool stop_ = false;
    std::vector<Node> nodes_;
    std::vector<int> sizes_;
    std::vector<int> selection_;
};

} // namespace

void CodePartition::canonicalise() {
    for (auto& c : codes) std::sort(c.begin(), c.end());
    std::sort(codes.begin(), codes.end());
}

bool is_perfect_code(const Graph& g, std::span<const int> centres, int radius) {
    if (centres.empty()) throw ArgumentError("perfect code must have at least one centre");
    if (radius < 1) throw ArgumentError("code radius must be >= 1");
    const int v = g.vertex_count();
    std::vector<bool> covered(v, false);
    std::vector<int> frontier;
    for (int c : centres) {
        g.check_vertex(c);
        // BFS ball of the given radius around c
        std::vector<int> dist(v, -1);
        dist[c] = 0;
        frontier.assign(1, c);
        if (covered[c]) return false;
        covered[c] = true;
        for (int d = 1; d <= radius; ++d) {
            std::vector<int> next;
            for (int u : frontier) {
                for (int w : g.neighbours(u)) {
                    if (dist[w] < 0) {
                        dist[w] = d;
                        next.push_back(w);
                        if (covered[w]) return false;
                        covered[w] = true;
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

void verify_code_partition(const Graph& g, const CodePartition& p) {
    const int v = g.vertex_count();
    if (p.a < 1) throw StructureError("code size a must be positive");
    if (p.codes.empty()) throw StructureError("partition has no codes");
    if (static_cast<int>(p.codes.size()) * p.a != v)
        throw StructureError("codes do not account for all " + std::to_string(v) + " vertices");
    std::vector<bool> seen(v, false);
    for (const auto& code : p.codes) {
        if (static_cast<int>(code.size()) != p.a)
            throw StructureError("code has size " + std::to_string(code.size()) + ", expected a = " +
                                 std::to_string(p.a));
        for (int u : code) {
            g.check_vertex(u);
            if (seen[u]) throw StructureError("codes are not pairwise disjoint");
            seen[u] = true;
        }
        if (!is_perfect_code(g, code, 1))
            throw StructureError("code containing vertex " + std::to_string(code.front()) +
                                 " is not a perfect 1-code");
    }
}

std::vector<std::vector<int>> find_perfect_one_codes(const Graph& g) {
    const int v = g.vertex_count();
    DancingLinks dlx(v);
    for (int u = 0; u < v; ++u) {
        auto closed = g.neighbours(u);
        closed.push_back(u);
        std::sort(closed.begin(), closed.end());
        dlx.add_row(u, closed);
    }
    std::vector<std::vector<int>> codes;
    dlx.solve([&](const std::vector<int>& rows) {
        codes.push_back(rows); // row ids are the chosen centres
        return true;
    });
    std::sort(codes.begin(), codes.end());
    for (const auto& c : codes) {
        if (!is_perfect_code(g, c, 1))
            throw InternalConsistencyError("exact-cover solution failed the perfect-code recheck");
    }
    return codes;
}

std::vector<CodePartition> find_code_partitions(const Graph& g, int a, std::size_t limit) {
    if (limit == 0) throw ArgumentError("limit must be positive");
    if (a < 1) throw ArgumentError("code size must be positive");
    const int v = g.vertex_count();
    int k = g.degree(0);
    for (int u = 1; u < v; ++u) {
        if (g.degree(u) != k)
            throw InfeasibilityError("graph is not regular; perfect 1-codes of equal size need not exist");
    }
    if (a * (k + 1) != v)
        throw InfeasibilityError("no perfect 1-code of size " + std::to_string(a) +
                                 " exists: a*(k+1) = " + std::to_string(a * (k + 1)) +
                                 " != v = " + std::to_string(v));

    auto codes = find_perfect_one_codes(g);
    std::vector<CodePartition> result;
    if (codes.empty()) return result;

    DancingLinks dlx(v);
    for (std::size_t r = 0; r < codes.size(); ++r) dlx.add_row(static_cast<int>(r), codes[r]);

    // The first branch decides which code covers vertex 0.
    dlx.solve(
        [&](const std::vector<int>& rows) {
            CodePartition p;
            p.a = a;
            for (int r : rows) p.codes.push_back(codes[r]);
            p.canonicalise();
            result.push_back(std::move(p));
            return result.size() < limit;
        },
        /*pinned_root_column=*/0);

    std::sort(result.begin(), result.end(),
              [](const CodePartition& x, const CodePartition& y) { return x.codes < y.codes; });
    for (const auto& p : result) verify_code_partition(g, p);
    return result;
}

CodePartition coset_partition(std::span<const int> group_orders,
                              std::span<const std::vector<int>> subgroup_generators,
                              const Graph& g) {
    if (group_orders.empty()) throw ArgumentError("group decomposition is empty");
    long long order = 1;
    for (int d : group_orders) {
        if (d < 1) throw ArgumentError("group factor orders must be positive");
        order *= d;
    }
    if (order != g.vertex_count())
        throw ArgumentError("group order " + std::to_string(order) +
                            " does not match vertex count " + std::to_string(g.vertex_count()));

    const int r = static_cast<int>(group_orders.size());
    std::vector<long long> strides(r, 1);
    for (int i = r - 2; i >= 0; --i) strides[i] = strides[i + 1] * group_orders[i + 1];

    auto decode = [&](int label) {
        std::vector<int> t(r);
        for (int i = 0; i < r; ++i) {
            t[i] = static_cast<int>(label / strides[i]);
            label = static_cast<int>(label % strides[i]);
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        long long label = 0;
        for (int i = 0; i < r; ++i) label += static_cast<long long>(t[i]) * strides[i];
        return static_cast<int>(label);
    };
    auto add = [&](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> z(r);
        for (int i = 0; i < r; ++i) z[i] = (x[i] + y[i]) % group_orders[i];
        return z;
    };

    // Closure of the generated subgroup.
    std::vector<std::vector<int>> gens;
    for (const auto& gvec : subgroup_generators) {
        if (static_cast<int>(gvec.size()) != r)
            throw ArgumentError("subgroup generator has wrong rank");
        std::vector<int> t(r);
        for (int i = 0; i < r; ++i) t[i] = ((gvec[i] % group_orders[i]) + group_orders[i]) % group_orders[i];
        gens.push_back(t);
    }
    std::vector<bool> in_subgroup(order, false);
    in_subgroup[0] = true;
    std::deque<std::vector<int>> queue{std::vector<int>(r, 0)};
    std::vector<int> subgroup{0};
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (const auto& gen : gens) {
            auto y = add(x, gen);
            int label = encode(y);
            if (!in_subgroup[label]) {
                in_subgroup[label] = true;
                subgroup.push_back(label);
                queue.push_back(y);
            }
        }
    }
    std::sort(subgroup.begin(), subgroup.end());
    if (order % static_cast<long long>(subgroup.size()) != 0)
        throw InternalConsistencyError("subgroup order does not divide group order");

    CodePartition p;
    p.a = static_cast<int>(subgroup.size());
    std::vector<bool> assigned(order, false);
    for (int x = 0; x < order; ++x) {
        if (assigned[x]) continue;
        auto tx = decode(x);
        std::vector<int> coset;
        for (int h : subgroup) {
            int y = encode(add(tx, decode(h)));
            assigned[y] = true;
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        p.codes.push_back(std::move(coset));
    }
    p.canonicalise();

    for (const auto& coset : p.codes) {
        if (!is_perfect_code(g, coset, 1))
            throw StructureError("coset containing vertex " + std::to_string(coset.front()) +
                                 " is not a perfect 1-code");
    }
    verify_code_partition(g, p);
    return p;
}

} // namespace neumaier
