#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace topo {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

/// Parses "p/q", "p" or "-p/q"; throws TopoError(InputError) on malformed text.
Q parse_rational(const std::string& s);
// n/d in canonical form (mpq_class(n, d) does not reduce).
Q ratio(long n, long d);
std::string to_string(const Q& q);

Vec parse_point(const std::string& csv);

Q dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Q& s);
Q norm2(const Vec& a);
Vec centroid(const std::vector<Vec>& pts);
bool is_zero(const Vec& a);

int sign(const Q& q);

// Solves A x = b exactly; returns false when A is singular.
bool solve(Mat A, Vec b, Vec& x);
int rank(Mat A);
Q determinant(Mat A);

// Orthogonal projection of p onto span(rows); coefficients in `coef`.
// Rows must be linearly independent.
Vec project_onto_span(const std::vector<Vec>& rows, const Vec& p, Vec* coef = nullptr);

}  // namespace topo
