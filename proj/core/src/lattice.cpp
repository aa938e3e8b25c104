#include "neumaier/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "neumaier/canonical.hpp"
#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

long long positive_mod(long long x, long long m) { return ((x % m) + m) % m; }

std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

IntMat hermite_normal_form(IntMat mat) {
    if (mat.empty()) return mat;
    const int n = static_cast<int>(mat[0].size());
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != n) throw ArgumentError("ragged matrix");
    }
    const int m = static_cast<int>(mat.size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // Euclidean elimination below position r in this column.
        while (true) {
            int pivot = -1;
            for (int i = r; i < m; ++i) {
                if (mat[i][col] != 0 &&
                    (pivot < 0 || std::abs(mat[i][col]) < std::abs(mat[pivot][col])))
                    pivot = i;
            }
            if (pivot < 0) break;
            std::swap(mat[r], mat[pivot]);
            bool cleared = true;
            for (int i = r + 1; i < m; ++i) {
                if (mat[i][col] == 0) continue;
                long long q = mat[i][col] / mat[r][col];
                for (int j = 0; j < n; ++j) mat[i][j] -= q * mat[r][j];
                if (mat[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (mat[r][col] == 0) continue;
        if (mat[r][col] < 0) {
            for (int j = 0; j < n; ++j) mat[r][j] = -mat[r][j];
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            long long q = mat[i][col] / mat[r][col];
            if (mat[i][col] - q * mat[r][col] < 0) --q;
            if (q != 0) {
                for (int j = 0; j < n; ++j) mat[i][j] -= q * mat[r][j];
            }
        }
        ++r;
    }
    mat.resize(r);
    return mat;
}

long long hnf_index(const IntMat& hnf) {
    if (hnf.empty()) throw ArgumentError("empty HNF basis");
    const int n = static_cast<int>(hnf[0].size());
    if (static_cast<int>(hnf.size()) != n)
        throw ArgumentError("sublattice basis is not full rank");
    long long index = 1;
    for (int i = 0; i < n; ++i) {
        if (hnf[i][i] <= 0) throw ArgumentError("HNF diagonal must be positive");
        index *= hnf[i][i];
    }
    return index;
}

bool hnf_contains(const IntMat& hnf, IntVec vec) {
    if (hnf.empty()) return std::all_of(vec.begin(), vec.end(), [](long long x) { return x == 0; });
    const int n = static_cast<int>(vec.size());
    for (const auto& row : hnf) {
        int p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p == n) continue;
        if (vec[p] % row[p] != 0) return false;
        long long q = vec[p] / row[p];
        for (int j = 0; j < n; ++j) vec[j] -= q * row[j];
    }
    return std::all_of(vec.begin(), vec.end(), [](long long x) { return x == 0; });
}

bool hnf_contains_lattice(const IntMat& hnf, const IntMat& sub) {
    for (const auto& row : sub) {
        if (!hnf_contains(hnf, row)) return false;
    }
    return true;
}

SmithResult smith_normal_form(IntMat d) {
    const int n = static_cast<int>(d.size());
    if (n == 0) throw ArgumentError("empty matrix");
    for (const auto& row : d) {
        if (static_cast<int>(row.size()) != n) throw ArgumentError("matrix is not square");
    }
    IntMat v(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) v[i][i] = 1;

    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < n; ++i) {
            std::swap(d[i][a], d[i][b]);
            std::swap(v[i][a], v[i][b]);
        }
    };
    auto add_col = [&](int dst, int src, long long factor) {
        for (int i = 0; i < n; ++i) {
            d[i][dst] += factor * d[i][src];
            v[i][dst] += factor * v[i][src];
        }
    };

    for (int t = 0; t < n; ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < n; ++i) {
                for (int j = t; j < n; ++j) {
                    if (d[i][j] != 0 &&
                        (bi < 0 || std::abs(d[i][j]) < std::abs(d[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi < 0) throw ArgumentError("matrix is singular; quotient would be infinite");
            std::swap(d[t], d[bi]);
            if (bj != t) swap_cols(t, bj);

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (d[i][t] == 0) continue;
                long long q = d[i][t] / d[t][t];
                for (int j = 0; j < n; ++j) d[i][j] -= q * d[t][j];
                if (d[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                long long q = d[t][j] / d[t][t];
                add_col(j, t, -q);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (int i = t + 1; i < n && divisible; ++i) {
                for (int j = t + 1; j < n && divisible; ++j) {
                    if (d[i][j] % d[t][t] != 0) {
                        for (int col = 0; col < n; ++col) d[t][col] += d[i][col];
                        divisible = false;
                    }
                }
            }
            if (divisible) break;
        }
        if (d[t][t] < 0) {
            for (int j = 0; j < n; ++j) d[t][j] = -d[t][j];
        }
    }

    SmithResult out;
    out.right = std::move(v);
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) out.diag[i] = d[i][i];
    for (int i = 0; i + 1 < n; ++i) {
        if (out.diag[i + 1] % out.diag[i] != 0)
            throw InternalConsistencyError("Smith form lost its divisibility chain");
    }
    return out;
}

SublatticeBasis SublatticeBasis::from_rows(IntMat rows) {
    SublatticeBasis b;
    b.hnf = hermite_normal_form(rows);
    b.index = hnf_index(b.hnf);
    b.rows = std::move(rows);
    return b;
}

namespace {

// Exact solve of x * basis = target over the rationals; returns nullopt
// if inconsistent or non-integral.
std::optional<IntVec> solve_in_basis(const IntMat& basis, const IntVec& target) {
    const int r = static_cast<int>(basis.size());
    const int n = static_cast<int>(basis[0].size());
    // Transposed system: n equations, r unknowns.
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(r + 1));
    for (int e = 0; e < n; ++e) {
        for (int x = 0; x < r; ++x) aug[e][x] = static_cast<long>(basis[x][e]);
        aug[e][r] = static_cast<long>(target[e]);
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < r && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i) {
            if (aug[i][col] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(aug[row], aug[p]);
        for (int i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            mpq_class f = aug[i][col] / aug[row][col];
            for (int j = col; j <= r; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < n; ++i) {
        if (aug[i][r] != 0) return std::nullopt;
    }
    IntVec sol(r, 0);
    for (int i = 0; i < row; ++i) {
        mpq_class value = aug[i][r] / aug[i][pivot_col[i]];
        value.canonicalize();
        if (value.get_den() != 1) return std::nullopt;
        if (!value.get_num().fits_slong_p()) return std::nullopt;
        sol[pivot_col[i]] = value.get_num().get_si();
    }
    return sol;
}

} // namespace

std::vector<IntVec> LatticeSpec::connection_lattice() const {
    std::vector<IntVec> out;
    out.reserve(connection_ambient.size());
    for (const auto& s : connection_ambient) {
        auto sol = solve_in_basis(basis, s);
        if (!sol)
            throw ArgumentError("connection vector " + vec_to_string(s) +
                                " does not lie in the lattice");
        out.push_back(std::move(*sol));
    }
    return out;
}

void LatticeSpec::validate() const {
    if (rank < 1) throw ArgumentError("lattice rank must be positive");
    if (static_cast<int>(basis.size()) != rank) throw ArgumentError("basis row count must equal rank");
    if (connection_ambient.empty()) throw ArgumentError("connection set is empty");
    std::set<IntVec> seen;
    for (const auto& s : connection_ambient) {
        if (std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; }))
            throw ArgumentError("connection set contains the zero vector");
        seen.insert(s);
    }
    if (seen.size() != connection_ambient.size())
        throw ArgumentError("connection set has repeated vectors");
    for (const auto& s : connection_ambient) {
        IntVec neg(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) neg[i] = -s[i];
        if (!seen.count(neg))
            throw ArgumentError("connection set is not closed under negation at " +
                                vec_to_string(s));
    }
    connection_lattice(); // throws if some vector is outside the lattice
}

std::vector<IntVec> root_system_connection_set(int n, int m, int family) {
    if (family != 1 && family != 2) throw ArgumentError("family must be 1 or 2");
    if (m % 2 != 0) throw ArgumentError("weight m must be even");
    if (m < 2 || n < m) throw ArgumentError("need n >= m >= 2");
    std::vector<IntVec> out;
    std::vector<int> positions(m);
    std::iota(positions.begin(), positions.end(), 0);
    while (true) {
        for (int signs = 0; signs < (1 << m); ++signs) {
            IntVec vec(n, 0);
            int sum = 0;
            for (int b = 0; b < m; ++b) {
                int s = (signs >> b) & 1 ? 1 : -1;
                vec[positions[b]] = s;
                sum += s;
            }
            if (family == 1 && sum != 0) continue;
            out.push_back(std::move(vec));
        }
        // next combination
        int i = m - 1;
        while (i >= 0 && positions[i] == n - m + i) --i;
        if (i < 0) break;
        ++positions[i];
        for (int j = i + 1; j < m; ++j) positions[j] = positions[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticeSpec zero_sum_lattice_spec(int n, int m) {
    LatticeSpec spec;
    spec.name = "zero-sum(" + std::to_string(n) + "," + std::to_string(m) + ")";
    spec.rank = n - 1;
    spec.basis.assign(n - 1, IntVec(n, 0));
    for (int i = 0; i < n - 1; ++i) {
        spec.basis[i][i] = 1;
        spec.basis[i][i + 1] = -1;
    }
    spec.connection_ambient = root_system_connection_set(n, m, 1);
    spec.validate();
    return spec;
}

LatticeSpec even_sum_lattice_spec(int n, int m) {
    LatticeSpec spec;
    spec.name = "even-sum(" + std::to_string(n) + "," + std::to_string(m) + ")";
    spec.rank = n;
    spec.basis.assign(n, IntVec(n, 0));
    spec.basis[0][0] = 1;
    spec.basis[0][1] = 1;
    for (int i = 1; i < n; ++i) {
        spec.basis[i][i - 1] = 1;
        spec.basis[i][i] = -1;
    }
    spec.connection_ambient = root_system_connection_set(n, m, 2);
    spec.validate();
    return spec;
}

LatticeSpec triangular_grid_spec() {
    // Coordinates are integer pairs (b, c) standing for b + c*omega; the
    // zero-sum lattice of Z^3 maps onto them by e1-e2 -> (1,0),
    // e2-e3 -> (0,1).
    LatticeSpec spec;
    spec.name = "triangular-grid";
    spec.rank = 2;
    spec.basis = {{1, 0}, {0, 1}};
    spec.connection_ambient = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
    spec.validate();
    return spec;
}

LatticeSpec product_spec(const LatticeSpec& a, const LatticeSpec& b) {
    const int na = a.basis.empty() ? 0 : static_cast<int>(a.basis[0].size());
    const int nb = b.basis.empty() ? 0 : static_cast<int>(b.basis[0].size());
    LatticeSpec spec;
    spec.name = a.name + " x " + b.name;
    spec.rank = a.rank + b.rank;
    for (const auto& row : a.basis) {
        IntVec full(row);
        full.resize(na + nb, 0);
        spec.basis.push_back(std::move(full));
    }
    for (const auto& row : b.basis) {
        IntVec full(na, 0);
        full.insert(full.end(), row.begin(), row.end());
        spec.basis.push_back(std::move(full));
    }
    for (const auto& s : a.connection_ambient) {
        IntVec full(s);
        full.resize(na + nb, 0);
        spec.connection_ambient.push_back(std::move(full));
    }
    for (const auto& s : b.connection_ambient) {
        IntVec full(na, 0);
        full.insert(full.end(), s.begin(), s.end());
        spec.connection_ambient.push_back(std::move(full));
    }
    spec.validate();
    return spec;
}

namespace {

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

} // namespace

GammaParams gamma_params(int n, int m, int family) {
    if (family != 1 && family != 2) throw ArgumentError("family must be 1 or 2");
    if (m % 2 != 0 || m < 2) throw ArgumentError("weight m must be even and >= 2");
    if (n < m + 1) throw ArgumentError("need n >= m+1");
    const long long h = m / 2;
    if (family == 1) {
        long long k = binomial(n, m) * binomial(m, h);
        long long lambda = 0;
        for (long long i = 0; i <= h; ++i) {
            lambda += binomial(h, i) * binomial(h, h - i) * binomial(n - m, h - i) *
                      binomial(n - 3 * h + i, i);
        }
        return {k, lambda};
    }
    long long k = (1LL << m) * binomial(n, m);
    long long lambda = binomial(m, h) * binomial(n - m, h) * (1LL << h);
    return {k, lambda};
}

GammaParams gamma_params_brute_force(const LatticeSpec& spec) {
    auto s = spec.connection_lattice();
    long long maxc = 1;
    for (const auto& vec : s) {
        for (long long x : vec) maxc = std::max(maxc, std::abs(x));
    }
    const long long c = 4 * maxc + 1;

    auto key = [&](const IntVec& vec) {
        long long k = 0;
        for (long long x : vec) k = k * c + positive_mod(x, c);
        return k;
    };
    std::set<long long> residues;
    for (const auto& vec : s) residues.insert(key(vec));
    if (residues.size() != s.size())
        throw InternalConsistencyError("no-wraparound quotient collapsed connection vectors");

    long long k = static_cast<long long>(residues.size());
    std::optional<long long> lambda;
    for (const auto& origin_nbr : s) {
        long long count = 0;
        for (const auto& y : s) {
            IntVec diff(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - origin_nbr[i];
            if (residues.count(key(diff))) ++count;
        }
        if (!lambda) lambda = count;
        else if (*lambda != count)
            throw InternalConsistencyError("infinite lattice graph is not edge-regular");
    }
    return {k, lambda.value_or(0)};
}

bool group_identity_check(int n, int m, int family) {
    auto rows_m = root_system_connection_set(n, m, family);
    auto rows_2 = root_system_connection_set(n, 2, family);
    return hermite_normal_form(IntMat(rows_m.begin(), rows_m.end())) ==
           hermite_normal_form(IntMat(rows_2.begin(), rows_2.end()));
}

std::vector<long long> QuotientGraph::nontrivial_factors() const {
    std::vector<long long> out;
    for (long long d : factors) {
        if (d > 1) out.push_back(d);
    }
    return out;
}

int QuotientGraph::label_of(const IntVec& lattice_vector) const {
    const int r = static_cast<int>(factors.size());
    if (static_cast<int>(lattice_vector.size()) != r)
        throw ArgumentError("vector rank mismatch");
    long long label = 0;
    for (int j = 0; j < r; ++j) {
        long long coord = 0;
        for (int i = 0; i < r; ++i) coord += lattice_vector[i] * projection[i][j];
        label += positive_mod(coord, factors[j]) * strides[j];
    }
    return static_cast<int>(label);
}

QuotientGraph lattice_quotient(const LatticeSpec& spec, const SublatticeBasis& sub) {
    if (static_cast<int>(sub.hnf.size()) != spec.rank)
        throw ArgumentError("sublattice rank does not match the lattice");
    auto snf = smith_normal_form(sub.hnf);
    const int r = spec.rank;

    QuotientGraph q;
    q.factors = snf.diag;
    q.projection = snf.right;
    q.strides.assign(r, 1);
    for (int i = r - 2; i >= 0; --i) q.strides[i] = q.strides[i + 1] * q.factors[i + 1];
    long long order = 1;
    for (long long d : q.factors) order *= d;
    if (order != sub.index)
        throw InternalConsistencyError("Smith factors do not multiply to the sublattice index");

    // Basis rows of the sublattice must project to the identity.
    for (const auto& row : sub.hnf) {
        if (q.label_of(row) != 0)
            throw InternalConsistencyError("sublattice basis row has non-zero image");
    }

    auto connections = spec.connection_lattice();
    std::vector<int> images;
    std::set<int> distinct;
    for (const auto& s : connections) {
        int label = q.label_of(s);
        if (label == 0)
            throw QuotientError("connection vector " + vec_to_string(s) +
                                " collapses to zero in the quotient");
        if (!distinct.insert(label).second)
            throw QuotientError("two connection vectors coincide in the quotient");
        images.push_back(label);
    }

    // Mixed-radix translation by each image builds the Cayley edges.
    Graph g(static_cast<int>(order));
    std::vector<long long> tuple(r);
    for (long long x = 0; x < order; ++x) {
        long long rest = x;
        for (int i = 0; i < r; ++i) {
            tuple[i] = rest / q.strides[i];
            rest %= q.strides[i];
        }
        for (const auto& s : connections) {
            long long y = 0;
            for (int j = 0; j < r; ++j) {
                long long coord = tuple[j];
                for (int i = 0; i < r; ++i) coord += s[i] * q.projection[i][j];
                y += positive_mod(coord, q.factors[j]) * q.strides[j];
            }
            if (y != x) g.add_edge(static_cast<int>(x), static_cast<int>(y));
        }
    }
    q.graph = std::move(g);
    return q;
}

CodePartition quotient_code_partition(const QuotientGraph& q, const SublatticeBasis& code) {
    std::vector<int> orders;
    for (long long d : q.factors) orders.push_back(static_cast<int>(d));
    std::vector<std::vector<int>> gens;
    const int r = static_cast<int>(q.factors.size());
    for (const auto& row : code.hnf) {
        std::vector<int> g(r);
        for (int j = 0; j < r; ++j) {
            long long coord = 0;
            for (int i = 0; i < r; ++i) coord += row[i] * q.projection[i][j];
            g[j] = static_cast<int>(positive_mod(coord, q.factors[j]));
        }
        gens.push_back(std::move(g));
    }
    return coset_partition(orders, gens, q.graph);
}

namespace {

void enumerate_divisor_tuples(long long index, int slots, IntVec& current,
                              std::vector<IntVec>& out) {
    if (slots == 1) {
        current.push_back(index);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (long long d = 1; d <= index; ++d) {
        if (index % d != 0) continue;
        current.push_back(d);
        enumerate_divisor_tuples(index / d, slots - 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<IntMat> enumerate_hnf_sublattices(int rank, long long index) {
    if (rank < 1 || index < 1) throw ArgumentError("rank and index must be positive");
    std::vector<IntVec> diagonals;
    IntVec current;
    enumerate_divisor_tuples(index, rank, current, diagonals);
    std::sort(diagonals.begin(), diagonals.end());

    std::vector<IntMat> out;
    for (const auto& diag : diagonals) {
        // Entries above the diagonal run through [0, d_j) per column.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                if (diag[j] > 1) free_pos.emplace_back(i, j);
            }
        }
        IntVec counter(free_pos.size(), 0);
        while (true) {
            IntMat mat(rank, IntVec(rank, 0));
            for (int i = 0; i < rank; ++i) mat[i][i] = diag[i];
            for (std::size_t p = 0; p < free_pos.size(); ++p) {
                mat[free_pos[p].first][free_pos[p].second] = counter[p];
            }
            out.push_back(std::move(mat));
            int pos = static_cast<int>(free_pos.size()) - 1;
            while (pos >= 0) {
                if (++counter[pos] < diag[free_pos[pos].second]) break;
                counter[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

SublatticeBasis find_perfect_code_sublattice(const LatticeSpec& spec) {
    auto connections = spec.connection_lattice();
    const long long ball = static_cast<long long>(connections.size()) + 1;
    for (auto& cand : enumerate_hnf_sublattices(spec.rank, ball)) {
        auto basis = SublatticeBasis::from_rows(cand);
        try {
            auto q = lattice_quotient(spec, basis);
            if (q.graph.complete()) return basis;
        } catch (const QuotientError&) {
            continue;
        }
    }
    throw InfeasibilityError("no perfect-code sublattice of index " + std::to_string(ball) +
                             " exists for " + spec.name);
}

std::vector<CodePreservingQuotient> enumerate_code_preserving_quotients(
    const LatticeSpec& spec, const SublatticeBasis& code, long long target_v) {
    auto connections = spec.connection_lattice();
    const long long k = static_cast<long long>(connections.size());
    {
        auto check = lattice_quotient(spec, code);
        if (!check.graph.complete())
            throw ArgumentError("code sublattice does not induce a perfect 1-code");
    }
    if (target_v % (k + 1) != 0)
        throw InfeasibilityError("target vertex count " + std::to_string(target_v) +
                                 " is not divisible by the ball size " + std::to_string(k + 1));

    auto inf_params = gamma_params_brute_force(spec);

    std::vector<CodePreservingQuotient> out;
    std::set<std::string> seen_canonical;
    for (auto& cand : enumerate_hnf_sublattices(spec.rank, target_v)) {
        if (!hnf_contains_lattice(code.hnf, cand)) continue;
        auto basis = SublatticeBasis::from_rows(cand);
        QuotientGraph q;
        try {
            q = lattice_quotient(spec, basis);
        } catch (const QuotientError&) {
            continue;
        }
        auto rc = classify_regularity(q.graph);
        if (!rc.is_edge_regular() || rc.k != inf_params.k || *rc.lambda != inf_params.lambda)
            continue;
        CodePartition partition;
        try {
            partition = quotient_code_partition(q, code);
        } catch (const StructureError&) {
            continue;
        }
        auto canon = canonical_form(q.graph).canonical_graph6;
        if (!seen_canonical.insert(canon).second) continue;
        out.push_back({std::move(basis), std::move(q), std::move(partition)});
    }
    return out;
}

} // namespace neumaier
