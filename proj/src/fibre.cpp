#include "jaccoord/fibre.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "jaccoord/elimination.hpp"
#include "jaccoord/errors.hpp"
#include "jaccoord/newton.hpp"
#include "jaccoord/random.hpp"

namespace jaccoord {

std::string to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::Degenerate: return "Degenerate";
    case UnknownReason::Reducible: return "Reducible";
    case UnknownReason::SegmentPolygon: return "SegmentPolygon";
    case UnknownReason::ShiftFailed: return "ShiftFailed";
    case UnknownReason::ZeroConstantTerm: return "ZeroConstantTerm";
  }
  return "Unknown";
}

namespace {

using elim::RPoly;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

using SparseColumn = std::map<Mono, Rat, MonoLess>;

// c·x^di·y^dj·f accumulated into col.
void add_shifted(SparseColumn& col, const BiPoly& f, const Rat& c, int di, int dj) {
  if (sgn(c) == 0) return;
  for (const auto& [m, v] : f.terms()) col[Mono{m.i + di, m.j + dj}] += c * v;
}

BiPoly strip_monomial_content(const BiPoly& f) {
  const Mono low = f.min_exponents();
  if (low.i == 0 && low.j == 0) return f;
  BiPoly::Terms t;
  for (const auto& [m, c] : f.terms()) t.emplace(Mono{m.i - low.i, m.j - low.j}, c);
  return BiPoly(std::move(t));
}

BiPoly scaled_to_integers(const BiPoly& f) {
  Int lcm = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  return f.scaled(Rat(lcm));
}

UniPoly umod(const UniPoly& a, const UniPoly& m) { return divmod(a, m).second; }

// True if the monic-in-y polynomial g over Q[x]/(m) has a root (x0, y0) with
// m(x0) = 0 and x0·y0 != 0.
bool has_torus_root(UniPoly m, RPoly g) {
  if (sgn(m.coeff(0)) == 0) m = exact_div(m, UniPoly::variable());
  struct Item {
    UniPoly m;
    RPoly g;
  };
  std::vector<Item> work{{m, std::move(g)}};
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    if (it.m.degree() < 1) continue;
    std::size_t low = 0;
    while (low < it.g.size() && umod(it.g[low], it.m).is_zero()) ++low;
    if (static_cast<int>(it.g.size() - low) - 1 < 1) continue;
    const UniPoly d = gcd(umod(it.g[low], it.m), it.m);
    if (d.degree() == 0) return true;
    RPoly rest(it.g.begin() + static_cast<std::ptrdiff_t>(low), it.g.end());
    work.push_back({d, rest});
    work.push_back({exact_div(it.m, d).monic(), std::move(rest)});
  }
  return false;
}

std::string edge_label(const PolygonEdge& e) {
  return "(" + std::to_string(e.from.i) + "," + std::to_string(e.from.j) + ")-(" + std::to_string(e.to.i) + "," +
         std::to_string(e.to.j) + ")";
}

struct GenusOutcome {
  Count genus;
  bool nondegenerate = false;
};

GenusOutcome genus_impl(const BiPoly& f, std::uint64_t seed, std::optional<long long> known_count) {
  if (f.is_constant()) throw ConstantInput("genus");
  BiPoly used = f;
  if (sgn(f.constant_term()) == 0) {
    Rng rng(seed);
    bool any_shift = false, found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      const Rat u = rng.rational(8), v = rng.rational(8);
      if (sgn(f.eval(u, v)) == 0) continue;
      any_shift = true;
      BiPoly g = substitute(f, BiPoly::x() + BiPoly(u), BiPoly::y() + BiPoly(v));
      if (nondegenerate(g).ok) {
        used = std::move(g);
        found = true;
      }
    }
    if (!found) {
      return {Unknown{any_shift ? UnknownReason::Degenerate : UnknownReason::ShiftFailed}, nondegenerate(f).ok};
    }
  } else if (!nondegenerate(f).ok) {
    return {Unknown{UnknownReason::Degenerate}, false};
  }
  const long long count = known_count ? *known_count : absolute_factor_count(used);
  if (count != 1) return {Unknown{UnknownReason::Reducible}, true};
  const LatticePolygon poly = newton_polygon(used);
  if (poly.dim < 2) return {Unknown{UnknownReason::SegmentPolygon}, true};
  return {lattice_counts(poly).interior, true};
}

Count branches_impl(const BiPoly& f, std::optional<bool> known_nondegenerate) {
  if (f.is_constant()) throw ConstantInput("branches_at_infinity");
  if (sgn(f.constant_term()) == 0) return Unknown{UnknownReason::ZeroConstantTerm};
  const bool nd = known_nondegenerate ? *known_nondegenerate : nondegenerate(f).ok;
  if (!nd) return Unknown{UnknownReason::Degenerate};
  const LatticePolygon poly = newton_polygon(f);
  const auto es = edges(poly);
  if (poly.dim == 1) {
    const Mono far = poly.vertices.back();
    const long long beta = (far.i >= 1 && far.j >= 1) ? 2 : 1;
    return beta * squarefree_part(edge_polynomial(f, es.front())).degree();
  }
  long long total = 0;
  for (const auto& e : es)
    if (e.normal_x > 0 || e.normal_y > 0) total += e.lattice_length;
  return total;
}

}  // namespace

RuppertSystem ruppert_system(const BiPoly& f) {
  const int m = f.degx(), n = f.degy();
  const BiPoly fx = f.dx(), fy = f.dy();
  std::vector<SparseColumn> lcols, kcols;
  // g_{ij}: f·∂y(x^i y^j) − x^i y^j·f_y; shift ∂y(x^i y^j).
  for (int i = 0; i <= m - 1; ++i)
    for (int j = 0; j <= n; ++j) {
      SparseColumn l, k;
      if (j > 0) {
        add_shifted(l, f, Rat(j), i, j - 1);
        k[Mono{i, j - 1}] += Rat(j);
      }
      add_shifted(l, fy, Rat(-1), i, j);
      lcols.push_back(std::move(l));
      kcols.push_back(std::move(k));
    }
  // h_{ij}: −f·∂x(x^i y^j) + x^i y^j·f_x; shift −∂x(x^i y^j).
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n - 1; ++j) {
      SparseColumn l, k;
      if (i > 0) {
        add_shifted(l, f, Rat(-i), i - 1, j);
        k[Mono{i - 1, j}] += Rat(-i);
      }
      add_shifted(l, fx, Rat(1), i, j);
      lcols.push_back(std::move(l));
      kcols.push_back(std::move(k));
    }

  std::map<Mono, std::size_t, MonoLess> row_of;
  for (const auto* cols : {&lcols, &kcols})
    for (const auto& col : *cols)
      for (const auto& [mono, v] : col)
        if (sgn(v) != 0) row_of.emplace(mono, 0);
  std::size_t next = 0;
  for (auto& [mono, idx] : row_of) idx = next++;

  RuppertSystem sys;
  sys.unknowns = lcols.size();
  sys.matrix.assign(row_of.size(), std::vector<Rat>(lcols.size()));
  sys.shift.assign(row_of.size(), std::vector<Rat>(lcols.size()));
  for (std::size_t c = 0; c < lcols.size(); ++c) {
    for (const auto& [mono, v] : lcols[c])
      if (sgn(v) != 0) sys.matrix[row_of.at(mono)][c] = v;
    for (const auto& [mono, v] : kcols[c])
      if (sgn(v) != 0) sys.shift[row_of.at(mono)][c] = v;
  }
  return sys;
}

long long absolute_factor_count(const BiPoly& f) {
  if (f.is_constant()) throw ConstantInput("absolute_factor_count");
  if (!elim::is_squarefree(f)) throw NotSquarefree("absolute_factor_count");
  const RuppertSystem sys = ruppert_system(scaled_to_integers(f));
  linalg::IntMatrix z(sys.matrix.size());
  for (std::size_t r = 0; r < sys.matrix.size(); ++r) {
    z[r].reserve(sys.unknowns);
    for (const auto& v : sys.matrix[r]) z[r].push_back(v.get_num());
  }
  return static_cast<long long>(sys.unknowns) - static_cast<long long>(linalg::rank(std::move(z)));
}

NondegeneracyResult nondegenerate(const BiPoly& f) {
  if (f.is_constant()) throw ConstantInput("nondegenerate");
  for (const auto& e : edges(newton_polygon(f))) {
    UniPoly ep = edge_polynomial(f, e);
    // Only the vertex at the origin can carry a zero coefficient; divide out
    // the power of t so that ep(0) != 0.
    while (!ep.is_zero() && sgn(ep.coeff(0)) == 0) ep = divmod(ep, UniPoly::monomial(1, 1)).first;
    if (!ep.is_zero() && !is_squarefree(ep))
      return {false, "edge " + edge_label(e) + " has repeated factor: " + ep.to_string('t')};
  }

  const BiPoly h = strip_monomial_content(f);
  if (h.is_constant()) return {};
  const BiPoly hx = h.dx(), hy = h.dy();
  const BiPoly common = elim::gcd(h, elim::gcd(hx, hy));
  if (!common.is_constant()) return {false, "singular curve component " + common.to_string()};
  if (h.degx() == 0 || h.degy() == 0) return {};

  UniPoly pi;
  for (int alpha = 0; alpha <= h.degy(); ++alpha) {
    pi = gcd(pi, elim::resultant(h, hx + hy.scaled(Rat(alpha)), Var::Y));
    if (pi.degree() == 0) return {};
  }
  if (pi.is_zero()) throw InternalVerificationFailure("nondegenerate: resultant gcd vanished");
  pi = squarefree_part(pi);

  const auto branches = elim::split_gcd(
      pi, {elim::to_rpoly(h, Var::Y), elim::to_rpoly(hx, Var::Y), elim::to_rpoly(hy, Var::Y)});
  for (const auto& br : branches) {
    if (elim::degree(br.gcd) < 1) continue;
    if (has_torus_root(br.modulus, br.gcd))
      return {false, "singular point in the torus above a root of " + br.modulus.to_string('x')};
  }
  return {};
}

Count genus(const BiPoly& f, std::uint64_t seed) { return genus_impl(f, seed, std::nullopt).genus; }

Count branches_at_infinity(const BiPoly& f) { return branches_impl(f, std::nullopt); }

FibreReport fibre_report(const BiPoly& p, const Rat& c, std::uint64_t seed) {
  if (p.is_constant()) throw ConstantInput("fibre_report");
  const BiPoly f = p - BiPoly(c);
  FibreReport r;
  r.c = c;
  r.multiplicity_reduced = elim::is_squarefree(f);
  const BiPoly g = r.multiplicity_reduced ? f : elim::squarefree_part(f);
  r.abs_factor_count = absolute_factor_count(g);
  GenusOutcome go = genus_impl(g, seed, r.abs_factor_count);
  r.genus = go.genus;
  r.nondegenerate = go.nondegenerate;
  if (r.abs_factor_count != 1) {
    r.branches_at_infinity = Unknown{UnknownReason::Reducible};
  } else if (sgn(g.constant_term()) == 0) {
    r.branches_at_infinity = Unknown{UnknownReason::ZeroConstantTerm};
  } else {
    r.branches_at_infinity = branches_impl(g, r.nondegenerate);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Special values.

namespace {

BiPoly shear(const BiPoly& p, const Rat& lambda) {
  if (sgn(lambda) == 0) return p;
  return substitute(p, BiPoly::x() + BiPoly::y().scaled(lambda), BiPoly::y());
}

// Leading coefficient in y is a nonzero constant.
bool y_monic_up_to_scalar(const BiPoly& p) { return !p.is_zero() && p.degy() == p.total_degree(); }

// Polynomial in x with coefficients in Q[c] from values at c = 0..degc.
template <class F>
RPoly interpolate_in_c(F&& at, int degc) {
  std::vector<Rat> cs;
  std::vector<UniPoly> vals;
  std::size_t width = 0;
  for (int k = 0; k <= degc; ++k) {
    cs.emplace_back(k);
    vals.push_back(at(Rat(k)));
    width = std::max(width, vals.back().coeffs().size());
  }
  RPoly out(width);
  for (std::size_t e = 0; e < width; ++e) {
    std::vector<Rat> ys;
    for (const auto& v : vals) ys.push_back(v.coeff(static_cast<int>(e)));
    out[e] = interpolate(cs, ys);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

UniPoly critical_value_polynomial(const BiPoly& p_in) {
  BiPoly p, g, a, b;
  bool sheared = false;
  for (int k = 0; k < 64 && !sheared; ++k) {
    const Rat lambda = (k % 2 == 1) ? Rat((k + 1) / 2) : Rat(-(k / 2));
    p = shear(p_in, lambda);
    const BiPoly px = p.dx(), py = p.dy();
    g = elim::gcd(px, py);
    a = elim::exact_div(px, g);
    b = elim::exact_div(py, g);
    sheared = y_monic_up_to_scalar(p) && y_monic_up_to_scalar(g) && y_monic_up_to_scalar(a);
  }
  if (!sheared) throw InternalVerificationFailure("special values: no admissible shear found");

  auto fibre_resultant = [&](const BiPoly& q) {
    return [&p, &q](const Rat& c) { return elim::resultant(p - BiPoly(c), q, Var::Y); };
  };

  UniPoly values(Rat(1));
  if (!g.is_constant()) {
    const RPoly r = interpolate_in_c(fibre_resultant(g), g.degy());
    const UniPoly cont = elim::content(r);
    if (!cont.is_zero()) values *= cont;
  }
  if (!a.is_constant()) {
    const UniPoly r = elim::resultant(a, b, Var::Y);
    if (!r.is_constant()) {
      // Isolated critical points lie over the roots of r; over each branch
      // modulus the y-coordinates are the roots of a monic gcd.
      const auto branches =
          elim::split_gcd(squarefree_part(r), {elim::to_rpoly(a, Var::Y), elim::to_rpoly(b, Var::Y)});
      for (const auto& br : branches) {
        if (elim::degree(br.gcd) < 1) continue;
        const BiPoly gk = elim::from_rpoly(br.gcd, Var::Y);
        const RPoly d = interpolate_in_c(fibre_resultant(gk), gk.degy());
        RPoly mk;
        for (const auto& coef : br.modulus.coeffs()) mk.emplace_back(coef);
        values *= elim::resultant(mk, d);
      }
    }
  }
  return values;
}

std::optional<UniPoly> ruppert_value_polynomial(const BiPoly& p) {
  const RuppertSystem sys = ruppert_system(p);
  if (sys.matrix.empty()) return UniPoly(Rat(1));
  auto at = [&](const Rat& c) {
    linalg::RatMatrix m = sys.matrix;
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t k = 0; k < m[r].size(); ++k)
        if (sgn(sys.shift[r][k]) != 0) m[r][k] -= c * sys.shift[r][k];
    return m;
  };
  Rat c0;
  linalg::PivotSet best;
  bool first = true;
  for (const Rat& c : {Rat(1, 2), Rat(-3, 7), Rat(5, 3)}) {
    linalg::PivotSet pv = linalg::pivots(at(c));
    if (first || pv.rows.size() > best.rows.size()) {
      best = std::move(pv);
      c0 = c;
      first = false;
    }
  }
  const std::size_t n = best.rows.size();
  if (n == 0) return UniPoly(Rat(1));
  if (n > kRuppertDeterminantLimit) return std::nullopt;

  const linalg::RatMatrix m0 = at(c0);
  linalg::RatMatrix a0(n, std::vector<Rat>(n)), ks(n, std::vector<Rat>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      a0[r][k] = m0[best.rows[r]][best.cols[k]];
      ks[r][k] = sys.shift[best.rows[r]][best.cols[k]];
    }
  // det(A0 − u·K) = det(A0)·Σ e_k u^(n−k), e_k the coefficients of charpoly(A0⁻¹K).
  const UniPoly chi = linalg::char_poly(linalg::solve(std::move(a0), std::move(ks)));
  std::vector<Rat> in_u(n + 1);
  for (std::size_t k = 0; k <= n; ++k) in_u[n - k] = chi.coeff(static_cast<int>(k));
  return UniPoly(std::move(in_u)).compose(UniPoly(std::vector<Rat>{-c0, Rat(1)}));
}

// Removes the rational roots; returns the remaining squarefree cofactor.
UniPoly split_rational(const UniPoly& u, std::vector<Rat>& roots) {
  if (u.degree() < 1) return UniPoly(Rat(1));
  UniPoly rest = squarefree_part(u);
  for (const Rat& r : rational_roots(rest)) {
    roots.push_back(r);
    rest = exact_div(rest, UniPoly(std::vector<Rat>{-r, Rat(1)}));
  }
  return rest.monic();
}

}  // namespace

SpecialValues special_value_candidates(const BiPoly& p) {
  if (p.is_constant()) throw ConstantInput("special_value_candidates");
  SpecialValues out;
  std::vector<Rat> roots;
  const UniPoly crit_rest = split_rational(critical_value_polynomial(p), roots);
  if (crit_rest.degree() >= 1) out.irrational_witnesses.push_back({crit_rest, "critical"});

  if (auto rupp = ruppert_value_polynomial(p)) {
    UniPoly rest = split_rational(*rupp, roots);
    if (crit_rest.degree() >= 1 && rest.degree() >= 1) rest = exact_div(rest, gcd(rest, crit_rest));
    if (rest.degree() >= 1) out.irrational_witnesses.push_back({rest.monic(), "ruppert"});
  } else {
    out.ruppert_component = false;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.rational_candidates = std::move(roots);
  return out;
}

}  // namespace jaccoord
