#include "topo/rational.hpp"

#include "topo/errors.hpp"

#include <sstream>

namespace topo {

Q parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw TopoError(ErrorKind::InputError, "empty rational");
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw TopoError(ErrorKind::InputError, "malformed rational '" + raw + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw TopoError(ErrorKind::InputError, "zero denominator in '" + raw + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

Q ratio(long n, long d) {
  if (d == 0) throw TopoError(ErrorKind::InputError, "zero denominator");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vec parse_point(const std::string& csv) {
  Vec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw TopoError(ErrorKind::InputError, "empty point");
  return out;
}

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Q& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Q norm2(const Vec& a) { return dot(a, a); }

Vec centroid(const std::vector<Vec>& pts) {
  Vec c(pts.front().size(), Q(0));
  for (auto& p : pts) c = add(c, p);
  return scale(c, Q(1, static_cast<unsigned long>(pts.size())));
}

bool is_zero(const Vec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

int sign(const Q& q) { return sgn(q); }

bool solve(Mat A, Vec b, Vec& x) {
  size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Q f = A[r][col] / A[col][col];
      for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Q(0));
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return true;
}

int rank(Mat A) {
  if (A.empty()) return 0;
  size_t rows = A.size(), cols = A[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (A[i][c] == 0) continue;
      Q f = A[i][c] / A[r][c];
      for (size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Q determinant(Mat A) {
  size_t n = A.size();
  Q det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (A[r][c] == 0) continue;
      Q f = A[r][c] / A[c][c];
      for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
    }
  }
  return det;
}

Vec project_onto_span(const std::vector<Vec>& rows, const Vec& p, Vec* coef) {
  size_t k = rows.size();
  Vec out(p.size(), Q(0));
  if (k == 0) {
    if (coef) coef->clear();
    return out;
  }
  Mat G(k, Vec(k));
  Vec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) G[i][j] = dot(rows[i], rows[j]);
    rhs[i] = dot(rows[i], p);
  }
  Vec c;
  if (!solve(G, rhs, c)) throw TopoError(ErrorKind::DegenerateInput, "dependent spanning set");
  for (size_t i = 0; i < k; ++i) out = add(out, scale(rows[i], c[i]));
  if (coef) *coef = c;
  return out;
}

}  // namespace topo
