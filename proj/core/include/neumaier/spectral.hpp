#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

/// Exact monic characteristic polynomial det(xI - A) of the adjacency
/// matrix, with arbitrary-precision integer coefficients.
/// coeffs[i] is the coefficient of x^i; coeffs.size() == v + 1.
struct CharPoly {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly&) const = default;
    std::string to_string() const;
};

/// Exact characteristic polynomial, computed by evaluating the
/// fraction-free integer determinant of (cI - A) at v+1 small integer
/// points and interpolating the unique monic integer polynomial.
CharPoly char_poly(const Graph& g);

/// Exact determinant of a square integer matrix (fraction-free
/// Bareiss elimination).
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m);

/// True iff the two graphs have identical characteristic polynomials.
bool cospectral(const Graph& g1, const Graph& g2);

/// Exact presentation (p + sign*q*sqrt(d)) / r of a quadratic
/// irrationality, normalised so that d is square-free and
/// gcd(p, q, r) = 1 with r in {1, 2}.
struct QuadraticSurd {
    long long p = 0;
    long long q = 0;
    long long d = 0;
    long long r = 1;
    int sign = 1;

    std::string to_string() const;
    double approx() const;
};

struct SpectrumEntry {
    std::string value;  // >= 10 significant digits
    double approx = 0.0;
    int multiplicity = 0;
    std::optional<long long> exact_integer;
    std::optional<QuadraticSurd> exact_quadratic;
};

/// Eigenvalue multiset of the adjacency matrix: numeric approximations
/// anchored by exact-sign bisection on the square-free factors of the
/// characteristic polynomial, multiplicities from the exact square-free
/// decomposition, and symbolic forms for roots of degree-1 and degree-2
/// integer factors. Entries are sorted by decreasing value.
std::vector<SpectrumEntry> spectrum_report(const Graph& g);

} // namespace neumaier
