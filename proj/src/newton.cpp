#include "jaccoord/newton.hpp"

#include <algorithm>
#include <numeric>

#include "jaccoord/errors.hpp"

namespace jaccoord {

std::string obstruction_kind(const Obstruction& o) {
  struct Visitor {
    std::string operator()(const PolygonNotTriangle&) const { return "PolygonNotTriangle"; }
    std::string operator()(const FaceNotBinomialPower&) const { return "FaceNotBinomialPower"; }
    std::string operator()(const FaceExponentsBothExceedOne&) const { return "FaceExponentsBothExceedOne"; }
    std::string operator()(const UnivariateNonlinear&) const { return "UnivariateNonlinear"; }
    std::string operator()(const ConstantPolynomial&) const { return "ConstantPolynomial"; }
  };
  return std::visit(Visitor{}, o);
}

namespace {

long long cross(const Mono& o, const Mono& a, const Mono& b) {
  return static_cast<long long>(a.i - o.i) * (b.j - o.j) - static_cast<long long>(a.j - o.j) * (b.i - o.i);
}

long long lattice_gcd(const Mono& a, const Mono& b) {
  return std::gcd(std::llabs(b.i - a.i), std::llabs(b.j - a.j));
}

}  // namespace

LatticePolygon newton_polygon(const BiPoly& p) {
  std::vector<Mono> pts{{0, 0}};
  for (const auto& [m, c] : p.terms()) pts.push_back(m);
  std::sort(pts.begin(), pts.end(), [](const Mono& a, const Mono& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolygon poly;
  if (pts.size() == 1) {
    poly.vertices = pts;
    return poly;
  }
  // Andrew's monotone chain; strict turns drop collinear points.
  std::vector<Mono> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // The origin is the lexicographic minimum, hence hull[0].
  if (hull.size() == 2 || hull.size() < 3) {
    poly.dim = 1;
    poly.vertices = {pts.front(), pts.back()};
    return poly;
  }
  poly.dim = 2;
  poly.vertices = std::move(hull);
  return poly;
}

std::vector<PolygonEdge> edges(const LatticePolygon& poly) {
  std::vector<PolygonEdge> out;
  if (poly.dim == 0) return out;
  if (poly.dim == 1) {
    out.push_back({poly.vertices[0], poly.vertices[1], lattice_gcd(poly.vertices[0], poly.vertices[1]), 0, 0});
    return out;
  }
  const std::size_t n = poly.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Mono& a = poly.vertices[k];
    const Mono& b = poly.vertices[(k + 1) % n];
    out.push_back({a, b, lattice_gcd(a, b), static_cast<long long>(b.j - a.j),
                   static_cast<long long>(a.i - b.i)});
  }
  return out;
}

LatticeCounts lattice_counts(const LatticePolygon& poly) {
  LatticeCounts lc;
  if (poly.dim == 0) {
    lc.boundary = 1;
    return lc;
  }
  if (poly.dim == 1) {
    lc.boundary = lattice_gcd(poly.vertices[0], poly.vertices[1]) + 1;
    return lc;
  }
  long long area2 = 0;
  const std::size_t n = poly.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Mono& a = poly.vertices[k];
    const Mono& b = poly.vertices[(k + 1) % n];
    area2 += static_cast<long long>(a.i) * b.j - static_cast<long long>(b.i) * a.j;
    lc.boundary += lattice_gcd(a, b);
  }
  lc.twice_area = std::llabs(area2);
  lc.interior = (lc.twice_area - lc.boundary + 2) / 2;
  return lc;
}

UniPoly edge_polynomial(const BiPoly& p, const PolygonEdge& e) {
  const long long len = e.lattice_length;
  if (len == 0) return UniPoly(p.coeff(e.from.i, e.from.j));
  const int di = static_cast<int>((e.to.i - e.from.i) / len);
  const int dj = static_cast<int>((e.to.j - e.from.j) / len);
  std::vector<Rat> c(static_cast<std::size_t>(len) + 1);
  for (long long k = 0; k <= len; ++k)
    c[static_cast<std::size_t>(k)] = p.coeff(e.from.i + static_cast<int>(k) * di, e.from.j + static_cast<int>(k) * dj);
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  if (low == c.size()) return {};
  return UniPoly(std::vector<Rat>(c.begin() + static_cast<long>(low), c.end()));
}

std::variant<TriangleFace, PolygonNotTriangle> triangle_face(const BiPoly& p) {
  const int dx = p.degx(), dy = p.degy();
  if (dx < 1 || dy < 1) throw UsageError("triangle_face requires degx >= 1 and degy >= 1");
  if (sgn(p.coeff(dx, 0)) == 0) return PolygonNotTriangle{{dx, 0}, true};
  if (sgn(p.coeff(0, dy)) == 0) return PolygonNotTriangle{{0, dy}, true};
  const long long bound = static_cast<long long>(dx) * dy;
  BiPoly::Terms edge;
  for (const auto& [m, c] : p.terms()) {
    const long long w = static_cast<long long>(dy) * m.i + static_cast<long long>(dx) * m.j;
    if (w > bound) return PolygonNotTriangle{m, false};
    if (w == bound) edge.emplace(m, c);
  }
  return TriangleFace{dx, dy, BiPoly(std::move(edge))};
}

namespace {

Int binomial(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace

std::variant<FaceForm, FaceNotBinomialPower> face_binomial_power(const TriangleFace& face) {
  const int m = std::gcd(face.dx, face.dy);
  const int p = face.dx / m, q = face.dy / m;
  const Rat C = face.edge.coeff(0, face.dy);
  const Rat next = face.edge.coeff(p, q * (m - 1));
  if (sgn(next) == 0) {
    // a = 0 is excluded, and every interior coefficient of a binomial power
    // with a != 0 is nonzero: report the first one that vanishes.
    for (int k = 1; k < m; ++k)
      if (sgn(face.edge.coeff(p * (m - k), q * k)) == 0) return FaceNotBinomialPower{k};
  }
  const Rat a = -next / (C * m);
  for (int k = 0; k <= m; ++k) {
    const Rat expected = C * Rat(binomial(m, k)) * pow(Rat(-a), static_cast<unsigned long>(m - k));
    if (face.edge.coeff(p * (m - k), q * k) != expected) return FaceNotBinomialPower{k};
  }
  return FaceForm{C, a, p, q, m};
}

BiPoly FaceForm::expand() const {
  const BiPoly base = BiPoly::monomial(1, 0, q) - BiPoly::monomial(a, p, 0);
  return pow(base, static_cast<unsigned>(m)).scaled(C);
}

}  // namespace jaccoord
