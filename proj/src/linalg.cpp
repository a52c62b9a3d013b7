#include "jaccoord/linalg.hpp"

#include <utility>

#include "jaccoord/errors.hpp"

namespace jaccoord::linalg {

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  Int prev = 1;
  Int tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Int& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int factor = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m[i][j] = (piv·m[i][j] − factor·m[r][j]) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), m[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

PivotSet pivots(const RatMatrix& in) {
  RatMatrix m = in;
  PivotSet ps;
  const std::size_t rows = m.size();
  if (rows == 0) return ps;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < rows; ++i) order[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(order[p], order[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ps.rows.push_back(order[r]);
    ps.cols.push_back(c);
    ++r;
  }
  return ps;
}

RatMatrix solve(RatMatrix a, RatMatrix b) {
  const std::size_t n = a.size();
  const std::size_t w = n == 0 ? 0 : b[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw InternalVerificationFailure("solve: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const Rat inv = 1 / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    for (std::size_t j = 0; j < w; ++j) b[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      for (std::size_t j = 0; j < w; ++j) b[i][j] -= f * b[c][j];
    }
  }
  return b;
}

UniPoly char_poly(RatMatrix h) {
  const std::size_t n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h[i][m - 1]) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const Rat t = h[m][m - 1];
    for (std::size_t k = m + 1; k < n; ++k) {
      if (sgn(h[k][m - 1]) == 0) continue;
      const Rat u = h[k][m - 1] / t;
      for (std::size_t j = 0; j < n; ++j) h[k][j] -= u * h[m][j];
      for (std::size_t r = 0; r < n; ++r) h[r][m] += u * h[r][k];
    }
  }
  // p_k = (t − h_kk)·p_{k−1} − Σ_{i<k} h_ik·(Π_{j=i+1..k} h_{j,j−1})·p_{i−1}
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly(Rat(1));
  const UniPoly t = UniPoly::variable();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - UniPoly(h[k - 1][k - 1])) * p[k - 1];
    Rat prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h[i + 1][i];
      if (sgn(prod) == 0) break;
      p[k] -= p[i].scaled(h[i][k - 1] * prod);
    }
  }
  return p[n];
}

}  // namespace jaccoord::linalg
