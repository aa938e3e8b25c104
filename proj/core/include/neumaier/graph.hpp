#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace neumaier {

/// Finite simple undirected graph on vertices {0..v-1} with dense
/// bit-packed adjacency rows.
///
/// All target graphs are small (v <= ~800), so O(v^2) bits is cheap and
/// every pairwise common-neighbour count becomes a word-parallel
/// intersection. Graphs are treated as immutable once built; the free
/// functions below are pure and safe to call concurrently.
class Graph {
public:
    Graph() = default;
    explicit Graph(int v);

    int vertex_count() const { return v_; }
    std::size_t edge_count() const;
    bool empty_edge_set() const { return edge_count() == 0; }
    bool complete() const;

    bool edge(int u, int w) const;
    void add_edge(int u, int w);
    void remove_edge(int u, int w);

    int degree(int u) const;
    std::vector<int> neighbours(int u) const;
    int common_neighbour_count(int u, int w) const;

    /// Raw adjacency row of u as packed 64-bit words.
    std::span<const std::uint64_t> row(int u) const;
    int words_per_row() const { return words_; }

    /// Copy with vertex u renamed to perm[u]; perm must be a permutation
    /// of {0..v-1}.
    Graph relabelled(std::span<const int> perm) const;

    /// Subgraph induced on the given vertices; result vertex i is
    /// vertices[i].
    Graph induced(std::span<const int> vertices) const;

    bool operator==(const Graph& other) const = default;

    void check_vertex(int u) const;

private:
    int v_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Edge-regular parameter triple (v, k, lambda).
struct ErgParams {
    int v = 0;
    int k = 0;
    int lambda = 0;

    void validate() const; // throws ArgumentError
    bool operator==(const ErgParams&) const = default;
    std::string to_string() const;
};

/// Neumaier parameter tuple (v, k, lambda; m, s): an edge-regular graph
/// containing an m-regular s-clique.
struct NeumaierParams {
    int v = 0;
    int k = 0;
    int lambda = 0;
    int nexus = 0;       // m
    int clique_size = 0; // s

    void validate() const;
    ErgParams erg() const { return {v, k, lambda}; }
    bool operator==(const NeumaierParams&) const = default;
    std::string to_string() const;
};

/// Result of the regularity scan: the strongest of the five labels that
/// holds for the graph.
struct RegularityClass {
    enum class Kind { not_regular, regular, edge_regular, co_edge_regular, strongly_regular };

    Kind kind = Kind::not_regular;
    int v = 0;
    int k = -1;               // valid unless not_regular
    std::optional<int> lambda; // set when edge-regular
    std::optional<int> mu;     // set when co-edge-regular

    bool is_edge_regular() const {
        return kind == Kind::edge_regular || kind == Kind::strongly_regular;
    }
    bool is_co_edge_regular() const {
        return kind == Kind::co_edge_regular || kind == Kind::strongly_regular;
    }
    bool is_regular() const { return kind != Kind::not_regular; }

    ErgParams erg() const; // throws if not edge-regular
    std::string to_string() const;
};

/// Two non-adjacent vertex pairs with different common-neighbour
/// counts; the portable witness that a graph is not co-edge-regular.
struct StrictnessWitness {
    std::array<int, 2> pair_low{};
    std::array<int, 2> pair_high{};
    int common_low = 0;
    int common_high = 0;
};

/// Verified certificate that a graph is a Neumaier graph, together with
/// the strictness verdict. Every field is independently re-checkable
/// against the graph alone (see verify_certificate).
struct NeumaierCertificate {
    NeumaierParams params;
    std::vector<int> witness_clique;
    std::optional<std::vector<std::vector<int>>> spread;
    bool strict = false;
    std::optional<StrictnessWitness> witnesses; // present iff strict
};

/// Common neighbours of two distinct vertices, sorted ascending.
std::vector<int> common_neighbours(const Graph& g, int u, int w);

/// Strongest regularity label holding for g. Total function.
RegularityClass classify_regularity(const Graph& g);

/// Nexus of the clique S: m if every vertex outside S has exactly m > 0
/// neighbours in S, nullopt otherwise. S must be a clique with
/// 1 <= |S| < v.
std::optional<int> clique_nexus(const Graph& g, std::span<const int> clique);

/// Certify g as a Neumaier graph. If no clique is supplied, regular
/// cliques of size 2..lambda+2 are searched in deterministic order.
/// An optional spread is verified and embedded in the certificate.
/// Throws CertificationError with the first violated condition.
NeumaierCertificate certify_neumaier(const Graph& g,
                                     std::optional<std::vector<int>> clique = std::nullopt,
                                     const std::vector<std::vector<int>>* spread = nullptr);

/// Re-check every claim of a certificate against the graph.
/// Throws CertificationError on the first mismatch.
void verify_certificate(const Graph& g, const NeumaierCertificate& cert);

/// Cartesian product; vertex (a, b) of the product is a*v2 + b.
/// When both factors are edge-regular with a common lambda the result
/// is asserted edge-regular with degree k1+k2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// First regular clique of size 2..max_size in lexicographic DFS order,
/// paired with its nexus.
std::optional<std::pair<std::vector<int>, int>> find_regular_clique(const Graph& g, int max_size);

/// Non-constancy witness for mu over non-adjacent pairs, if any.
std::optional<StrictnessWitness> mu_variation_witness(const Graph& g);

} // namespace neumaier
