#include "neumaier/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "neumaier/errors.hpp"

namespace neumaier {

namespace {

// Little-endian coefficient vectors; the zero polynomial is empty.
using Poly = std::vector<mpz_class>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    strip(d);
    return d;
}

mpz_class content(const Poly& p) {
    mpz_class c = 0;
    for (const auto& x : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

Poly primitive_part(Poly p) {
    strip(p);
    if (p.empty()) return p;
    mpz_class c = content(p);
    if (sgn(p.back()) < 0) c = -c;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return p;
}

// Remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
Poly pseudo_remainder(Poly a, const Poly& b) {
    strip(a);
    int db = degree_of(b);
    if (db < 0) throw ArgumentError("pseudo-division by zero polynomial");
    const mpz_class& lb = b.back();
    while (degree_of(a) >= db) {
        int shift = degree_of(a) - db;
        mpz_class lead = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
        strip(a);
    }
    return a;
}

// Gcd over Z via the primitive polynomial remainder sequence; result is
// primitive with positive leading coefficient.
Poly gcd_poly(Poly a, Poly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (degree_of(a) < degree_of(b)) std::swap(a, b);
    while (!b.empty()) {
        Poly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(std::move(a));
}

// Exact quotient a / b; throws on any inexact step.
Poly divide_exact(Poly a, const Poly& b) {
    strip(a);
    int db = degree_of(b);
    if (db < 0) throw ArgumentError("division by zero polynomial");
    Poly q(std::max(0, degree_of(a) - db + 1), mpz_class(0));
    while (degree_of(a) >= db) {
        int shift = degree_of(a) - db;
        mpz_class c;
        mpz_class rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) throw InternalConsistencyError("inexact polynomial division");
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
        strip(a);
    }
    if (!a.empty()) throw InternalConsistencyError("polynomial division left a remainder");
    return q;
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Square-free decomposition (Yun): list of (factor, exponent) with the
// factors primitive, square-free and pairwise coprime. Verified by
// multiplying back.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& input) {
    Poly p = primitive_part(input);
    std::vector<std::pair<Poly, int>> out;
    if (degree_of(p) < 1) return out;

    Poly dp = derivative(p);
    Poly g = gcd_poly(p, dp);
    Poly w = divide_exact(p, g);
    Poly y = divide_exact(dp, g);
    // z = y - w'
    Poly z = y;
    Poly wd = derivative(w);
    z.resize(std::max(z.size(), wd.size()), mpz_class(0));
    for (std::size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
    strip(z);

    int i = 1;
    while (degree_of(w) > 0) {
        Poly gi = gcd_poly(w, z);
        if (degree_of(gi) > 0) out.emplace_back(gi, i);
        w = divide_exact(w, gi);
        y = (degree_of(gi) >= 0) ? divide_exact(z, gi) : z;
        wd = derivative(w);
        z = y;
        z.resize(std::max(z.size(), wd.size()), mpz_class(0));
        for (std::size_t j = 0; j < wd.size(); ++j) z[j] -= wd[j];
        strip(z);
        ++i;
    }

    Poly check{mpz_class(1)};
    for (const auto& [factor, mult] : out) {
        for (int e = 0; e < mult; ++e) check = multiply(check, factor);
    }
    if (check != p) throw InternalConsistencyError("square-free decomposition failed verification");
    return out;
}

mpz_class eval_int(const Poly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Sign of p(num/den) for den > 0, via the den^deg(p)-scaled value.
int sign_at(const Poly& p, const mpz_class& num, const mpz_class& den) {
    if (p.empty()) return 0;
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        if (it + 1 != p.rend()) den_pow *= den;
    }
    return sgn(acc);
}

// Cyclic Jacobi eigenvalue iteration for the (symmetric 0/1) adjacency
// matrix; returns eigenvalues sorted descending.
std::vector<double> jacobi_eigenvalues(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbours(u)) a[u][w] = 1.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        }
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-15) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.rbegin(), eig.rend());
    return eig;
}

std::string format_value(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

long long square_free_split(long long d, long long& square_root_part) {
    // d = square_root_part^2 * result with result square-free
    square_root_part = 1;
    for (long long f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            square_root_part *= f;
        }
    }
    return d;
}

} // namespace

std::string CharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        mpz_class abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || i == 0) os << abs_c.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw ArgumentError("determinant of empty matrix");
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw ArgumentError("matrix is not square");
    }
    int sign = 1;
    mpz_class prev = 1;
    mpz_class t;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    r = i;
                    break;
                }
            }
            if (r < 0) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_mul(t.get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
                mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpz_class det = m[n - 1][n - 1];
    return sign > 0 ? det : mpz_class(-det);
}

CharPoly char_poly(const Graph& g) {
    const int v = g.vertex_count();
    const int npoints = v + 1;

    // Evaluation points 0, 1, -1, 2, -2, ... keep the determinant
    // magnitudes modest.
    std::vector<long> points(npoints);
    for (int i = 0; i < npoints; ++i) {
        int half = (i + 1) / 2;
        points[i] = (i % 2 == 1) ? half : -half;
    }

    std::vector<mpz_class> values(npoints);
    for (int i = 0; i < npoints; ++i) {
        std::vector<std::vector<mpz_class>> m(v, std::vector<mpz_class>(v, mpz_class(0)));
        for (int u = 0; u < v; ++u) {
            m[u][u] = points[i];
            for (int w : g.neighbours(u)) m[u][w] = -1;
        }
        values[i] = integer_determinant(std::move(m));
    }

    // W(x) = prod (x - c_i)
    Poly w{mpz_class(1)};
    for (int i = 0; i < npoints; ++i) {
        Poly next(w.size() + 1, mpz_class(0));
        for (std::size_t j = 0; j < w.size(); ++j) {
            next[j + 1] += w[j];
            next[j] -= w[j] * points[i];
        }
        w = std::move(next);
    }

    std::vector<mpq_class> acc(npoints, mpq_class(0));
    for (int i = 0; i < npoints; ++i) {
        // Q_i = W / (x - c_i) by synthetic division.
        Poly q(npoints, mpz_class(0));
        q[npoints - 1] = w[npoints];
        for (int j = npoints - 1; j >= 1; --j) q[j - 1] = w[j] + points[i] * q[j];
        mpz_class rem = w[0] + points[i] * q[0];
        if (rem != 0) throw InternalConsistencyError("synthetic division remainder non-zero");

        mpz_class denom = 1;
        for (int k = 0; k < npoints; ++k) {
            if (k != i) denom *= mpz_class(points[i] - points[k]);
        }
        mpq_class scale(values[i], denom);
        scale.canonicalize();
        for (int j = 0; j < npoints; ++j) {
            if (q[j] != 0) acc[j] += scale * q[j];
        }
    }

    CharPoly result;
    result.coeffs.resize(npoints);
    for (int j = 0; j < npoints; ++j) {
        mpq_class c = acc[j];
        c.canonicalize();
        if (c.get_den() != 1)
            throw InternalConsistencyError("interpolated coefficient is not an integer");
        result.coeffs[j] = c.get_num();
    }
    if (result.coeffs[v] != 1)
        throw InternalConsistencyError("characteristic polynomial is not monic");
    if (v >= 1 && result.coeffs[v - 1] != 0)
        throw InternalConsistencyError("adjacency trace coefficient is non-zero");
    return result;
}

bool cospectral(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    return char_poly(g1) == char_poly(g2);
}

std::string QuadraticSurd::to_string() const {
    std::ostringstream os;
    bool parens = r != 1;
    if (parens) os << "(";
    if (p != 0) os << p;
    if (p != 0 || sign < 0) os << (sign > 0 ? "+" : "-");
    if (q != 1) os << q << "*";
    os << "sqrt(" << d << ")";
    if (parens) os << ")/" << r;
    return os.str();
}

double QuadraticSurd::approx() const {
    return (static_cast<double>(p) + sign * static_cast<double>(q) * std::sqrt(static_cast<double>(d))) /
           static_cast<double>(r);
}

std::vector<SpectrumEntry> spectrum_report(const Graph& g) {
    const int v = g.vertex_count();
    CharPoly cp = char_poly(g);
    auto factors = square_free_decomposition(cp.coeffs);

    int degree_sum = 0;
    for (const auto& [factor, mult] : factors) degree_sum += degree_of(factor) * mult;
    if (degree_sum != v)
        throw InternalConsistencyError("square-free factor degrees do not sum to v");

    // Numeric anchors: clusters of the Jacobi eigenvalues.
    auto eig = jacobi_eigenvalues(g);
    struct Cluster {
        double value;
        int size;
        bool used;
    };
    std::vector<Cluster> clusters;
    for (double x : eig) {
        if (!clusters.empty() && std::abs(clusters.back().value - x) < 1e-6) {
            auto& c = clusters.back();
            c.value = (c.value * c.size + x) / (c.size + 1);
            ++c.size;
        } else {
            clusters.push_back({x, 1, false});
        }
    }

    auto consume_cluster = [&](double value, int mult) {
        for (auto& c : clusters) {
            if (!c.used && c.size == mult && std::abs(c.value - value) < 1e-5) {
                c.used = true;
                return;
            }
        }
        throw InternalConsistencyError("exact root has no matching numeric eigenvalue cluster");
    };

    std::vector<SpectrumEntry> entries;

    for (const auto& [factor, mult] : factors) {
        Poly rem = factor;

        // Integer roots (monic factors, so all rational roots are integers).
        for (long long c = -v; c <= v && degree_of(rem) > 0; ++c) {
            if (eval_int(rem, mpz_class(static_cast<long>(c))) == 0) {
                Poly lin{mpz_class(static_cast<long>(-c)), mpz_class(1)};
                rem = divide_exact(rem, lin);
                SpectrumEntry e;
                e.approx = static_cast<double>(c);
                e.value = format_value(e.approx);
                e.multiplicity = mult;
                e.exact_integer = c;
                consume_cluster(e.approx, mult);
                entries.push_back(std::move(e));
            }
        }

        if (degree_of(rem) == 2) {
            // Monic x^2 + bx + c with irrational real roots.
            if (rem[2] != 1) throw InternalConsistencyError("non-monic quadratic factor");
            if (!rem[1].fits_slong_p() || !rem[0].fits_slong_p())
                throw InternalConsistencyError("quadratic factor coefficients out of range");
            long long b = rem[1].get_si();
            long long c = rem[0].get_si();
            long long disc = b * b - 4 * c;
            if (disc <= 0)
                throw InternalConsistencyError("adjacency spectrum must be real");
            long long s = 1;
            long long d0 = square_free_split(disc, s);
            long long gcd_all = std::gcd(std::gcd(std::abs(b), s), 2LL);
            for (int sign : {+1, -1}) {
                QuadraticSurd surd;
                surd.p = -b / gcd_all;
                surd.q = s / gcd_all;
                surd.d = d0;
                surd.r = 2 / gcd_all;
                surd.sign = sign;
                SpectrumEntry e;
                e.approx = surd.approx();
                e.value = format_value(e.approx);
                e.multiplicity = mult;
                e.exact_quadratic = surd;
                consume_cluster(e.approx, mult);
                entries.push_back(std::move(e));
            }
        } else if (degree_of(rem) > 0) {
            // Irrational roots of degree >= 3 factors: refine the
            // matching numeric clusters by exact-sign bisection.
            int needed = degree_of(rem);
            for (auto& c : clusters) {
                if (needed == 0) break;
                if (c.used || c.size != mult) continue;
                double lo_d = c.value - 1e-4, hi_d = c.value + 1e-4;
                mpq_class lo(lo_d), hi(hi_d);
                int slo = sign_at(rem, lo.get_num(), lo.get_den());
                int shi = sign_at(rem, hi.get_num(), hi.get_den());
                if (slo == 0 || shi == 0)
                    throw InternalConsistencyError("bisection endpoint is an exact root");
                if (slo == shi) continue; // cluster belongs to another factor
                for (int iter = 0; iter < 80; ++iter) {
                    mpq_class mid = (lo + hi) / 2;
                    int smid = sign_at(rem, mid.get_num(), mid.get_den());
                    if (smid == 0) {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (smid == slo) lo = mid;
                    else hi = mid;
                }
                SpectrumEntry e;
                e.approx = mpq_class((lo + hi) / 2).get_d();
                e.value = format_value(e.approx);
                e.multiplicity = mult;
                c.used = true;
                --needed;
                entries.push_back(std::move(e));
            }
            if (needed != 0)
                throw InternalConsistencyError("could not anchor all roots of a high-degree factor");
        }
    }

    int mult_sum = 0;
    for (const auto& e : entries) mult_sum += e.multiplicity;
    if (mult_sum != v) throw InternalConsistencyError("multiplicities do not sum to v");

    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.approx > b.approx; });
    return entries;
}

} // namespace neumaier
