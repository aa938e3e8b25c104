#include "neumaier/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "neumaier/errors.hpp"

namespace neumaier {

Graph::Graph(int v) : v_(v), words_((v + 63) / 64), bits_(static_cast<std::size_t>(v) * words_, 0) {
    if (v < 1) throw ArgumentError("graph needs at least one vertex");
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= v_) {
        throw ArgumentError("vertex " + std::to_string(u) + " out of range [0," +
                            std::to_string(v_) + ")");
    }
}

bool Graph::edge(int u, int w) const {
    check_vertex(u);
    check_vertex(w);
    return (bits_[static_cast<std::size_t>(u) * words_ + w / 64] >> (w % 64)) & 1;
}

void Graph::add_edge(int u, int w) {
    check_vertex(u);
    check_vertex(w);
    if (u == w) throw ArgumentError("loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    bits_[static_cast<std::size_t>(w) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int w) {
    check_vertex(u);
    check_vertex(w);
    bits_[static_cast<std::size_t>(u) * words_ + w / 64] &= ~(std::uint64_t{1} << (w % 64));
    bits_[static_cast<std::size_t>(w) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::span<const std::uint64_t> Graph::row(int u) const {
    check_vertex(u);
    return {bits_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
}

int Graph::degree(int u) const {
    auto r = row(u);
    int d = 0;
    for (auto word : r) d += std::popcount(word);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (int u = 0; u < v_; ++u) total += static_cast<std::size_t>(degree(u));
    return total / 2;
}

bool Graph::complete() const {
    return edge_count() == static_cast<std::size_t>(v_) * (v_ - 1) / 2;
}

std::vector<int> Graph::neighbours(int u) const {
    auto r = row(u);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

int Graph::common_neighbour_count(int u, int w) const {
    auto ru = row(u);
    auto rw = row(w);
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(ru[i] & rw[i]);
    return c;
}

Graph Graph::relabelled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != v_) throw ArgumentError("permutation has wrong length");
    std::vector<bool> seen(v_, false);
    for (int p : perm) {
        check_vertex(p);
        if (seen[p]) throw ArgumentError("relabelling is not a permutation");
        seen[p] = true;
    }
    Graph h(v_);
    for (int u = 0; u < v_; ++u) {
        for (int w : neighbours(u)) {
            if (u < w) h.add_edge(perm[u], perm[w]);
        }
    }
    return h;
}

Graph Graph::induced(std::span<const int> vertices) const {
    if (vertices.empty()) throw ArgumentError("induced subgraph needs at least one vertex");
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

void ErgParams::validate() const {
    if (k < 1) throw ArgumentError("edge-regular graphs are non-empty: k >= 1 required");
    if (lambda > k - 1) throw ArgumentError("lambda <= k-1 required");
    if (lambda < 0) throw ArgumentError("lambda >= 0 required");
    if (v <= k) throw ArgumentError("v > k required");
}

std::string ErgParams::to_string() const {
    std::ostringstream os;
    os << "(" << v << "," << k << "," << lambda << ")";
    return os.str();
}

void NeumaierParams::validate() const {
    erg().validate();
    if (nexus < 1) throw ArgumentError("nexus m >= 1 required");
    if (clique_size < 2 || clique_size > v) throw ArgumentError("clique size s in [2, v] required");
}

std::string NeumaierParams::to_string() const {
    std::ostringstream os;
    os << "(" << v << "," << k << "," << lambda << ";" << nexus << "," << clique_size << ")";
    return os.str();
}

ErgParams RegularityClass::erg() const {
    if (!is_edge_regular()) throw ArgumentError("graph is not edge-regular");
    return {v, k, *lambda};
}

std::string RegularityClass::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::not_regular: os << "not_regular"; break;
        case Kind::regular: os << "regular(k=" << k << ")"; break;
        case Kind::edge_regular:
            os << "edge_regular(" << v << "," << k << "," << *lambda << ")";
            break;
        case Kind::co_edge_regular:
            os << "co_edge_regular(" << v << "," << k << "," << *mu << ")";
            break;
        case Kind::strongly_regular:
            os << "strongly_regular(" << v << "," << k << "," << *lambda << "," << *mu << ")";
            break;
    }
    return os.str();
}

std::vector<int> common_neighbours(const Graph& g, int u, int w) {
    g.check_vertex(u);
    g.check_vertex(w);
    if (u == w) throw ArgumentError("common_neighbours requires distinct vertices");
    auto ru = g.row(u);
    auto rw = g.row(w);
    std::vector<int> out;
    for (int i = 0; i < g.words_per_row(); ++i) {
        std::uint64_t word = ru[i] & rw[i];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(i * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

RegularityClass classify_regularity(const Graph& g) {
    const int v = g.vertex_count();
    RegularityClass rc;
    rc.v = v;

    int k = g.degree(0);
    for (int u = 1; u < v; ++u) {
        if (g.degree(u) != k) return rc; // not_regular
    }
    rc.kind = RegularityClass::Kind::regular;
    rc.k = k;

    // Edge-regularity: non-empty edge set with constant lambda.
    bool edge_ok = k > 0;
    std::optional<int> lambda;
    for (int u = 0; u < v && edge_ok; ++u) {
        for (int w = u + 1; w < v && edge_ok; ++w) {
            if (!g.edge(u, w)) continue;
            int c = g.common_neighbour_count(u, w);
            if (!lambda) lambda = c;
            else if (*lambda != c) edge_ok = false;
        }
    }
    edge_ok = edge_ok && lambda.has_value();

    // Co-edge-regularity: non-complete with constant mu over distinct
    // non-adjacent pairs.
    bool co_ok = !g.complete();
    std::optional<int> mu;
    for (int u = 0; u < v && co_ok; ++u) {
        for (int w = u + 1; w < v && co_ok; ++w) {
            if (g.edge(u, w)) continue;
            int c = g.common_neighbour_count(u, w);
            if (!mu) mu = c;
            else if (*mu != c) co_ok = false;
        }
    }
    co_ok = co_ok && mu.has_value();

    if (edge_ok) {
        rc.kind = RegularityClass::Kind::edge_regular;
        rc.lambda = lambda;
    }
    if (co_ok) {
        rc.kind = edge_ok ? RegularityClass::Kind::strongly_regular
                          : RegularityClass::Kind::co_edge_regular;
        rc.mu = mu;
    }
    return rc;
}

namespace {

void require_clique(const Graph& g, std::span<const int> clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
        g.check_vertex(clique[i]);
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            if (clique[i] == clique[j]) throw StructureError("clique contains a repeated vertex");
            if (!g.edge(clique[i], clique[j]))
                throw StructureError("vertex set is not a clique: " + std::to_string(clique[i]) +
                                     " and " + std::to_string(clique[j]) + " are non-adjacent");
        }
    }
}

std::vector<std::uint64_t> make_mask(int v, std::span<const int> vertices) {
    std::vector<std::uint64_t> mask((v + 63) / 64, 0);
    for (int u : vertices) mask[u / 64] |= std::uint64_t{1} << (u % 64);
    return mask;
}

int count_in_mask(const Graph& g, int u, const std::vector<std::uint64_t>& mask) {
    auto r = g.row(u);
    int c = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) c += std::popcount(r[i] & mask[i]);
    return c;
}

} // namespace

std::optional<int> clique_nexus(const Graph& g, std::span<const int> clique) {
    if (clique.empty()) throw ArgumentError("clique must be non-empty");
    if (static_cast<int>(clique.size()) >= g.vertex_count())
        throw ArgumentError("clique must leave at least one outside vertex");
    require_clique(g, clique);

    auto mask = make_mask(g.vertex_count(), clique);
    std::optional<int> m;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if ((mask[u / 64] >> (u % 64)) & 1) continue;
        int c = count_in_mask(g, u, mask);
        if (!m) m = c;
        else if (*m != c) return std::nullopt;
    }
    if (m && *m > 0) return m;
    return std::nullopt;
}

std::optional<StrictnessWitness> mu_variation_witness(const Graph& g) {
    const int v = g.vertex_count();
    std::optional<std::array<int, 2>> first;
    int first_count = 0;
    for (int u = 0; u < v; ++u) {
        for (int w = u + 1; w < v; ++w) {
            if (g.edge(u, w)) continue;
            int c = g.common_neighbour_count(u, w);
            if (!first) {
                first = {u, w};
                first_count = c;
            } else if (c != first_count) {
                StrictnessWitness wit;
                if (c < first_count) {
                    wit.pair_low = {u, w};
                    wit.common_low = c;
                    wit.pair_high = *first;
                    wit.common_high = first_count;
                } else {
                    wit.pair_low = *first;
                    wit.common_low = first_count;
                    wit.pair_high = {u, w};
                    wit.common_high = c;
                }
                return wit;
            }
        }
    }
    return std::nullopt;
}

namespace {

bool clique_search(const Graph& g, std::vector<int>& current, std::vector<std::uint64_t>& cand,
                   int max_size, std::pair<std::vector<int>, int>& out) {
    if (current.size() >= 2 && static_cast<int>(current.size()) < g.vertex_count()) {
        if (auto m = clique_nexus(g, current)) {
            out = {current, *m};
            return true;
        }
    }
    if (static_cast<int>(current.size()) == max_size) return false;
    int start = current.empty() ? 0 : current.back() + 1;
    for (int u = start; u < g.vertex_count(); ++u) {
        if (!((cand[u / 64] >> (u % 64)) & 1)) continue;
        auto saved = cand;
        auto ru = g.row(u);
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] &= ru[i];
        current.push_back(u);
        if (clique_search(g, current, cand, max_size, out)) return true;
        current.pop_back();
        cand = saved;
    }
    return false;
}

} // namespace

std::optional<std::pair<std::vector<int>, int>> find_regular_clique(const Graph& g, int max_size) {
    if (max_size < 2) return std::nullopt;
    std::vector<std::uint64_t> cand((g.vertex_count() + 63) / 64, ~std::uint64_t{0});
    std::vector<int> current;
    std::pair<std::vector<int>, int> out;
    if (clique_search(g, current, cand, max_size, out)) return out;
    return std::nullopt;
}

NeumaierCertificate certify_neumaier(const Graph& g, std::optional<std::vector<int>> clique,
                                     const std::vector<std::vector<int>>* spread) {
    if (g.complete()) throw CertificationError("graph is complete");
    auto rc = classify_regularity(g);
    if (!rc.is_regular()) throw CertificationError("graph is not regular");
    if (g.empty_edge_set()) throw CertificationError("graph has no edges");
    if (!rc.is_edge_regular())
        throw CertificationError("graph is not edge-regular: lambda is not constant");

    NeumaierCertificate cert;
    if (clique) {
        auto m = clique_nexus(g, *clique);
        if (!m) throw CertificationError("supplied clique is not regular");
        std::sort(clique->begin(), clique->end());
        cert.witness_clique = *clique;
        cert.params = {rc.v, rc.k, *rc.lambda, *m, static_cast<int>(clique->size())};
    } else {
        auto found = find_regular_clique(g, *rc.lambda + 2);
        if (!found)
            throw CertificationError("no regular clique of size <= lambda+2 = " +
                                     std::to_string(*rc.lambda + 2) + " found");
        cert.witness_clique = found->first;
        cert.params = {rc.v, rc.k, *rc.lambda, found->second,
                       static_cast<int>(found->first.size())};
    }
    cert.params.validate();

    if (spread) {
        std::vector<bool> covered(g.vertex_count(), false);
        for (const auto& s : *spread) {
            if (static_cast<int>(s.size()) != cert.params.clique_size)
                throw CertificationError("spread clique has size " + std::to_string(s.size()) +
                                         ", expected s = " + std::to_string(cert.params.clique_size));
            auto m = clique_nexus(g, s);
            if (!m || *m != cert.params.nexus)
                throw CertificationError("spread clique is not " +
                                         std::to_string(cert.params.nexus) + "-regular");
            for (int u : s) {
                if (covered[u]) throw CertificationError("spread cliques are not disjoint");
                covered[u] = true;
            }
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            throw CertificationError("spread does not cover the vertex set");
        auto sorted = *spread;
        for (auto& s : sorted) std::sort(s.begin(), s.end());
        std::sort(sorted.begin(), sorted.end());
        cert.spread = std::move(sorted);
    }

    if (auto wit = mu_variation_witness(g)) {
        cert.strict = true;
        cert.witnesses = wit;
    }
    return cert;
}

void verify_certificate(const Graph& g, const NeumaierCertificate& cert) {
    cert.params.validate();
    auto rc = classify_regularity(g);
    if (!rc.is_edge_regular() || rc.erg() != cert.params.erg())
        throw CertificationError("certificate parameters do not match the graph");
    if (g.complete()) throw CertificationError("graph is complete");
    if (static_cast<int>(cert.witness_clique.size()) != cert.params.clique_size)
        throw CertificationError("witness clique has the wrong size");
    auto m = clique_nexus(g, cert.witness_clique);
    if (!m || *m != cert.params.nexus)
        throw CertificationError("witness clique nexus does not match");
    if (cert.spread) {
        std::vector<bool> covered(g.vertex_count(), false);
        for (const auto& s : *cert.spread) {
            if (static_cast<int>(s.size()) != cert.params.clique_size)
                throw CertificationError("spread clique size mismatch");
            auto sm = clique_nexus(g, s);
            if (!sm || *sm != cert.params.nexus)
                throw CertificationError("spread clique nexus mismatch");
            for (int u : s) {
                if (covered[u]) throw CertificationError("spread overlaps");
                covered[u] = true;
            }
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            throw CertificationError("spread does not cover the vertex set");
    }
    bool measured_strict = mu_variation_witness(g).has_value();
    if (measured_strict != cert.strict)
        throw CertificationError("strictness flag does not match the graph");
    if (cert.strict) {
        if (!cert.witnesses) throw CertificationError("strict certificate lacks witnesses");
        const auto& w = *cert.witnesses;
        if (g.edge(w.pair_low[0], w.pair_low[1]) || g.edge(w.pair_high[0], w.pair_high[1]))
            throw CertificationError("strictness witness pair is adjacent");
        if (g.common_neighbour_count(w.pair_low[0], w.pair_low[1]) != w.common_low ||
            g.common_neighbour_count(w.pair_high[0], w.pair_high[1]) != w.common_high)
            throw CertificationError("strictness witness count mismatch");
        if (w.common_low == w.common_high)
            throw CertificationError("strictness witness counts are equal");
    }
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int v1 = g1.vertex_count();
    const int v2 = g2.vertex_count();
    Graph p(v1 * v2);
    for (int a = 0; a < v1; ++a) {
        for (int b = 0; b < v2; ++b) {
            int x = a * v2 + b;
            for (int d : g2.neighbours(b)) {
                if (d > b) p.add_edge(x, a * v2 + d);
            }
            for (int c : g1.neighbours(a)) {
                if (c > a) p.add_edge(x, c * v2 + b);
            }
        }
    }
    auto r1 = classify_regularity(g1);
    auto r2 = classify_regularity(g2);
    if (r1.is_edge_regular() && r2.is_edge_regular() && *r1.lambda == *r2.lambda) {
        auto rp = classify_regularity(p);
        if (!rp.is_edge_regular() || rp.k != r1.k + r2.k || *rp.lambda != *r1.lambda)
            throw InternalConsistencyError(
                "cartesian product of edge-regular factors with equal lambda "
                "failed the (k1+k2, lambda) check");
    }
    return p;
}

} // namespace neumaier
