#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace oracle {

BiPoly naive_mul(const BiPoly& a, const BiPoly& b) {
  std::map<std::pair<int, int>, Rat> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc[{ma.i + mb.i, ma.j + mb.j}] += ca * cb;
  BiPoly out;
  for (const auto& [e, c] : acc) out += BiPoly::monomial(c, e.first, e.second);
  return out;
}

Rat naive_eval(const BiPoly& p, const Rat& x, const Rat& y) {
  Rat total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (int k = 0; k < m.i; ++k) t *= x;
    for (int k = 0; k < m.j; ++k) t *= y;
    total += t;
  }
  return total;
}

Rat sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rat>> s(static_cast<std::size_t>(size), std::vector<Rat>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);
  Rat det = 1;
  for (int c = 0; c < size; ++c) {
    int p = c;
    while (p < size && sgn(s[p][c]) == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(s[p], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      if (sgn(s[r][c]) == 0) continue;
      const Rat f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

namespace {

long long cross(const Mono& o, const Mono& a, const Mono& b) {
  return static_cast<long long>(a.i - o.i) * (b.j - o.j) - static_cast<long long>(a.j - o.j) * (b.i - o.i);
}

long long dist2(const Mono& a, const Mono& b) {
  const long long di = a.i - b.i, dj = a.j - b.j;
  return di * di + dj * dj;
}

bool on_segment(const Mono& a, const Mono& b, const Mono& q) {
  return cross(a, b, q) == 0 && std::min(a.i, b.i) <= q.i && q.i <= std::max(a.i, b.i) &&
         std::min(a.j, b.j) <= q.j && q.j <= std::max(a.j, b.j);
}

}  // namespace

Counts brute_lattice_counts(const std::vector<Mono>& input) {
  std::vector<Mono> pts{{0, 0}};
  for (const auto& m : input)
    if (std::find(pts.begin(), pts.end(), m) == pts.end()) pts.push_back(m);
  Counts out;
  if (pts.size() == 1) {
    out.boundary = 1;
    return out;
  }
  // Gift wrapping from the lowest-then-leftmost point, keeping the farthest
  // point on collinear ties so only extreme points survive.
  const Mono start = *std::min_element(pts.begin(), pts.end(), [](const Mono& a, const Mono& b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  std::vector<Mono> hull;
  Mono cur = start;
  do {
    hull.push_back(cur);
    Mono cand = pts[0] == cur ? pts[1] : pts[0];
    for (const auto& q : pts) {
      if (q == cur) continue;
      const long long cr = cross(cur, cand, q);
      if (cr < 0 || (cr == 0 && dist2(cur, q) > dist2(cur, cand))) cand = q;
    }
    cur = cand;
  } while (!(cur == start) && hull.size() <= pts.size());

  int min_i = 0, max_i = 0, min_j = 0, max_j = 0;
  for (const auto& m : pts) {
    min_i = std::min(min_i, m.i);
    max_i = std::max(max_i, m.i);
    min_j = std::min(min_j, m.j);
    max_j = std::max(max_j, m.j);
  }

  long long area2 = 0;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Mono& a = hull[k];
    const Mono& b = hull[(k + 1) % hull.size()];
    area2 += static_cast<long long>(a.i) * b.j - static_cast<long long>(b.i) * a.j;
  }
  out.twice_area = std::llabs(area2);
  out.dim = hull.size() >= 3 && out.twice_area > 0 ? 2 : 1;

  for (int i = min_i; i <= max_i; ++i)
    for (int j = min_j; j <= max_j; ++j) {
      const Mono q{i, j};
      bool boundary = false, inside = true;
      for (std::size_t k = 0; k < hull.size(); ++k) {
        const Mono& a = hull[k];
        const Mono& b = hull[(k + 1) % hull.size()];
        if (on_segment(a, b, q)) boundary = true;
        if (cross(a, b, q) < 0) inside = false;
      }
      if (boundary) ++out.boundary;
      else if (inside && out.dim == 2) ++out.interior;
    }
  return out;
}

BiPoly random_poly(Rng& rng, int max_deg, int terms, long long height) {
  BiPoly out;
  for (int t = 0; t < terms; ++t) {
    const int i = static_cast<int>(rng.uniform(0, max_deg));
    const int j = static_cast<int>(rng.uniform(0, max_deg - i));
    out += BiPoly::monomial(rng.rational(height), i, j);
  }
  return out;
}

UniPoly random_uni(Rng& rng, int deg, long long height) {
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = rng.rational(height);
  c[static_cast<std::size_t>(deg)] = rng.nonzero_rational(height);
  return UniPoly(std::move(c));
}

long long superelliptic_branches(int m, int n) { return std::gcd(m, n); }

long long superelliptic_genus(int m, int n) {
  return (static_cast<long long>(m - 1) * (n - 1) - std::gcd(m, n) + 1) / 2;
}

BiPoly random_irreducible(Rng& rng, long long height) {
  const BiPoly x = BiPoly::monomial(1, 1, 0), y = BiPoly::monomial(1, 0, 1);
  switch (rng.uniform(0, 3)) {
    case 0:
      return x.scaled(rng.rational(height)) + y.scaled(rng.nonzero_rational(height)) + BiPoly(rng.rational(height));
    case 1:
      return y - BiPoly::from_uni(random_uni(rng, static_cast<int>(rng.uniform(1, 3)), height), jaccoord::Var::X);
    case 2:
      return x - BiPoly::from_uni(random_uni(rng, static_cast<int>(rng.uniform(1, 3)), height), jaccoord::Var::Y);
    default:
      for (;;) {
        const UniPoly g = random_uni(rng, rng.uniform(0, 1) == 0 ? 1 : 3, height);
        if (gcd(g, g.derivative()).degree() > 0) continue;
        return y * y - BiPoly::from_uni(g, jaccoord::Var::X);
      }
  }
}

Witness random_affine_witness(Rng& rng, int pairs, long long height) {
  Witness w;
  for (int k = 0; k < pairs; ++k) {
    jaccoord::Linear l;
    do {
      l.a = rng.rational(height);
      l.b = rng.rational(height);
      l.c = rng.rational(height);
      l.d = rng.rational(height);
    } while (sgn(l.det()) == 0);
    l.e = rng.rational(height);
    l.f = rng.rational(height);
    w.steps.push_back(l);
    w.steps.push_back(jaccoord::TriangularY{UniPoly(std::vector<Rat>{rng.rational(height), rng.rational(height)})});
  }
  return w;
}

namespace {

// Two irreducibles are associate exactly when one is a rational multiple of
// the other; otherwise they are coprime.
bool associate(const BiPoly& a, const BiPoly& b) {
  const auto& [ma, ca] = *a.terms().begin();
  const auto it = b.terms().find(ma);
  if (it == b.terms().end()) return false;
  return a.scaled(it->second / ca) == b;
}

}  // namespace

Product random_irreducible_product(Rng& rng, int k, long long height) {
  Product out{BiPoly(1L), {}};
  while (static_cast<int>(out.factors.size()) < k) {
    BiPoly g = random_irreducible(rng, height);
    if (g.total_degree() < 1) continue;
    bool fresh = true;
    for (const auto& h : out.factors) fresh = fresh && !associate(g, h);
    if (!fresh) continue;
    out.f = naive_mul(out.f, g);
    out.factors.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
