#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neumaier/codes.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

/// Canonical row-style Hermite normal form of the lattice generated by
/// the given rows: row echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMat hermite_normal_form(IntMat rows);

/// Index of a full-rank sublattice given by a square HNF basis
/// (product of the diagonal).
long long hnf_index(const IntMat& hnf);

/// Membership test of a vector in the lattice spanned by an HNF basis.
bool hnf_contains(const IntMat& hnf, IntVec vec);

/// True iff every row of `sub` lies in the lattice spanned by `hnf`.
bool hnf_contains_lattice(const IntMat& hnf, const IntMat& sub);

/// Smith normal form D = U*B*V of a square nonsingular integer matrix.
/// Only the invariant factors and the right transform V are kept:
/// x -> (x*V) mod diag is the projection Z^r -> Z^r / rowspan(B).
struct SmithResult {
    std::vector<long long> diag; // d1 | d2 | ... | dr, all positive
    IntMat right;                // V
};
SmithResult smith_normal_form(IntMat m);

/// Finite-index sublattice in lattice coordinates, stored with its HNF
/// and index.
struct SublatticeBasis {
    IntMat rows;
    IntMat hnf;
    long long index = 0;

    static SublatticeBasis from_rows(IntMat rows);
};

/// Rank-r lattice embedded in ambient Z^n with a finite symmetric
/// connection set, the common description of the infinite edge-regular
/// graphs quotiented here.
struct LatticeSpec {
    std::string name;
    int rank = 0;
    IntMat basis;                        // rank x n ambient basis rows
    std::vector<IntVec> connection_ambient;

    /// Connection vectors expressed in basis coordinates (exact solve).
    std::vector<IntVec> connection_lattice() const;
    void validate() const;
};

/// All {1,-1,0}-vectors of weight m in dimension n — with zero
/// coordinate sum for family 1, unrestricted for family 2.
std::vector<IntVec> root_system_connection_set(int n, int m, int family);

/// Family-1 spec: the zero-sum sublattice of Z^n with connection set of
/// weight-m vectors. Requires m even, n >= m+1.
LatticeSpec zero_sum_lattice_spec(int n, int m);

/// Family-2 spec: the even-sum sublattice of Z^n.
LatticeSpec even_sum_lattice_spec(int n, int m);

/// Triangular-grid spec in (1, omega) integer coordinates with the six
/// units as connection set.
LatticeSpec triangular_grid_spec();

/// Direct sum of two lattices with the connection set acting in one
/// summand at a time: the lattice graph of the result is the Cartesian
/// product of the factors' lattice graphs.
LatticeSpec product_spec(const LatticeSpec& a, const LatticeSpec& b);

struct GammaParams {
    long long k = 0;
    long long lambda = 0;
    bool operator==(const GammaParams&) const = default;
};

/// Closed-form degree and common-neighbour count of the infinite
/// lattice graphs, in terms of binomial coefficients.
GammaParams gamma_params(int n, int m, int family);

/// Independent count of the same quantities around the origin in a
/// diagonal quotient large enough that no wraparound affects radius-2
/// balls.
GammaParams gamma_params_brute_force(const LatticeSpec& spec);

/// True iff the lattice generated by the weight-m connection set equals
/// the lattice generated by the weight-2 one (compared by HNF).
bool group_identity_check(int n, int m, int family);

/// Finite quotient of a lattice by a full-rank sublattice. Vertices are
/// group elements in mixed-radix order over the Smith invariant factors
/// (most significant first); x ~ y iff x - y is the image of a
/// connection vector.
struct QuotientGraph {
    Graph graph;
    std::vector<long long> factors; // Smith invariant factors, including 1s
    IntMat projection;              // V of the Smith form
    std::vector<long long> strides;

    std::vector<long long> nontrivial_factors() const;
    int label_of(const IntVec& lattice_vector) const;
};

/// Builds the quotient; throws QuotientError if connection vectors
/// collapse (map to zero or coincide).
QuotientGraph lattice_quotient(const LatticeSpec& spec, const SublatticeBasis& sub);

/// Cosets of a code sublattice inside the quotient, verified as a
/// partition into perfect 1-codes.
CodePartition quotient_code_partition(const QuotientGraph& q, const SublatticeBasis& code);

/// All sublattices of Z^rank of the given index, enumerated as HNF
/// matrices in lexicographic order.
std::vector<IntMat> enumerate_hnf_sublattices(int rank, long long index);

/// First index-(k+1) sublattice whose quotient collapses the ball of
/// radius 1 onto the whole group, i.e. whose cosets tile the lattice
/// graph by closed neighbourhoods.
SublatticeBasis find_perfect_code_sublattice(const LatticeSpec& spec);

struct CodePreservingQuotient {
    SublatticeBasis sub;
    QuotientGraph quotient;
    CodePartition partition;
};

/// Enumerates index-target_v sublattices contained in the code lattice,
/// keeps the quotients that are edge-regular with the infinite graph's
/// (k, lambda) and whose descended coset partition verifies, and
/// deduplicates by canonical form. Results follow HNF enumeration
/// order.
std::vector<CodePreservingQuotient> enumerate_code_preserving_quotients(
    const LatticeSpec& spec, const SublatticeBasis& code, long long target_v);

} // namespace neumaier
