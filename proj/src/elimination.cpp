#include "jaccoord/elimination.hpp"

#include <utility>

#include "jaccoord/errors.hpp"

namespace jaccoord::elim {

namespace {

void trim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly lc(const RPoly& p) { return p.empty() ? UniPoly() : p.back(); }

RPoly scale(const RPoly& p, const UniPoly& s) {
  RPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k] * s;
  trim(out);
  return out;
}

RPoly div_coeffs(const RPoly& p, const UniPoly& s) {
  RPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = jaccoord::exact_div(p[k], s);
  return out;
}

UniPoly upow(const UniPoly& u, int e) { return jaccoord::pow(u, static_cast<unsigned>(e)); }

UniPoly mod(const UniPoly& a, const UniPoly& m) { return divmod(a, m).second; }

RPoly reduce(const RPoly& p, const UniPoly& m) {
  RPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = mod(p[k], m);
  trim(out);
  return out;
}

}  // namespace

RPoly to_rpoly(const BiPoly& p, Var main) { return p.columns(main); }

BiPoly from_rpoly(const RPoly& p, Var main) { return BiPoly::from_columns(p, main); }

int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const RPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = jaccoord::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RPoly primitive_part(const RPoly& p) {
  if (p.empty()) return {};
  return div_coeffs(p, content(p));
}

RPoly pseudo_remainder(const RPoly& a, const RPoly& b) {
  if (b.empty()) throw ZeroPolynomial("pseudo_remainder");
  RPoly r = a;
  trim(r);
  const int db = degree(b);
  int e = degree(r) - db + 1;
  if (e <= 0) return r;
  const UniPoly lb = lc(b);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const UniPoly lr = lc(r);
    for (auto& c : r) c = c * lb;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + shift)] -= lr * b[static_cast<std::size_t>(k)];
    trim(r);
    --e;
  }
  if (e > 0) r = scale(r, upow(lb, e));
  return r;
}

UniPoly resultant(const RPoly& a_in, const RPoly& b_in) {
  RPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return {};
  if (degree(a) == 0) return upow(lc(a), degree(b));
  if (degree(b) == 0) return upow(lc(b), degree(a));

  const UniPoly ca = content(a), cb = content(b);
  a = div_coeffs(a, ca);
  b = div_coeffs(b, cb);
  UniPoly g(Rat(1)), h(Rat(1));
  int s = 1;
  const UniPoly t = upow(ca, degree(b)) * upow(cb, degree(a));
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
  }
  for (;;) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    RPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    b = div_coeffs(r, g * upow(h, delta));
    g = lc(a);
    if (delta >= 1) h = jaccoord::exact_div(upow(g, delta), upow(h, delta - 1));
    if (degree(b) > 0) continue;
    const int da = degree(a);
    h = jaccoord::exact_div(upow(lc(b), da), upow(h, da - 1));
    return (t * h).scaled(Rat(s));
  }
}

UniPoly resultant(const BiPoly& a, const BiPoly& b, Var v) {
  return resultant(to_rpoly(a, v), to_rpoly(b, v));
}

namespace {

BiPoly normalize(const BiPoly& p) {
  if (p.is_zero()) return p;
  // Lexicographic leader: highest y power, then highest x power.
  Mono lead{-1, -1};
  for (const auto& [m, c] : p.terms())
    if (m.j > lead.j || (m.j == lead.j && m.i > lead.i)) lead = m;
  return p.scaled(1 / p.coeff(lead.i, lead.j));
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  RPoly pa = to_rpoly(a, Var::Y), pb = to_rpoly(b, Var::Y);
  const UniPoly c = jaccoord::gcd(content(pa), content(pb));
  pa = primitive_part(pa);
  pb = primitive_part(pb);
  if (degree(pa) < degree(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    RPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  pa = primitive_part(pa);
  return normalize(from_rpoly(pa, Var::Y) * BiPoly::from_uni(c, Var::X));
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("exact_div");
  RPoly r = to_rpoly(a, Var::Y);
  const RPoly d = to_rpoly(b, Var::Y);
  const int dd = degree(d);
  RPoly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
  while (!r.empty()) {
    if (degree(r) < dd) throw InternalVerificationFailure("exact_div: divisor does not divide");
    const int shift = degree(r) - dd;
    const UniPoly t = jaccoord::exact_div(lc(r), lc(d));
    q[static_cast<std::size_t>(shift)] += t;
    for (int k = 0; k <= dd; ++k) r[static_cast<std::size_t>(k + shift)] -= t * d[static_cast<std::size_t>(k)];
    if (!r.back().is_zero()) throw InternalVerificationFailure("exact_div: leading term did not cancel");
    trim(r);
  }
  trim(q);
  return from_rpoly(q, Var::Y);
}

BiPoly squarefree_part(const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree_part");
  if (f.is_constant()) return BiPoly(Rat(1));
  const BiPoly g = gcd(f, gcd(f.dx(), f.dy()));
  return normalize(exact_div(f, g));
}

bool is_squarefree(const BiPoly& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  return gcd(f, gcd(f.dx(), f.dy())).is_constant();
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid: track s with s·a ≡ r (mod m).
  UniPoly r0 = m, r1 = mod(a, m);
  UniPoly s0, s1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw InternalVerificationFailure("inverse_mod: not invertible");
  return mod(s0.scaled(1 / r0.leading()), m);
}

namespace {

// Either every coefficient is settled or the modulus was split; in the
// latter case both halves are pushed to `pending` and false is returned.
struct Job {
  UniPoly m;
  RPoly a, b;
};

bool settle_leading(RPoly& p, const UniPoly& m, const Job& job, std::vector<Job>& pending) {
  while (!p.empty()) {
    UniPoly d = jaccoord::gcd(p.back(), m);
    if (d.degree() == 0) return true;
    UniPoly other = jaccoord::exact_div(m, d);
    pending.push_back({d, job.a, job.b});
    pending.push_back({other.monic(), job.a, job.b});
    return false;
  }
  return true;
}

RPoly make_monic(const RPoly& p, const UniPoly& m) {
  if (p.empty()) return p;
  const UniPoly inv = inverse_mod(p.back(), m);
  RPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = mod(p[k] * inv, m);
  return out;
}

RPoly rem_mod(const RPoly& a, const RPoly& b, const UniPoly& m) {
  RPoly r = a;
  const RPoly bm = make_monic(b, m);
  const int db = degree(bm);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const UniPoly t = r.back();
    for (int k = 0; k <= db; ++k) {
      auto& slot = r[static_cast<std::size_t>(k + shift)];
      slot = mod(slot - t * bm[static_cast<std::size_t>(k)], m);
    }
    trim(r);
  }
  return r;
}

std::vector<Branch> gcd_pair(const UniPoly& m0, const RPoly& a0, const RPoly& b0) {
  std::vector<Branch> out;
  std::vector<Job> pending{{m0.monic(), a0, b0}};
  while (!pending.empty()) {
    Job job = std::move(pending.back());
    pending.pop_back();
    if (job.m.degree() <= 0) continue;
    RPoly a = reduce(job.a, job.m), b = reduce(job.b, job.m);
    Job current{job.m, a, b};
    if (!settle_leading(a, job.m, current, pending)) continue;
    if (!settle_leading(b, job.m, current, pending)) continue;
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
      out.push_back({job.m, make_monic(a, job.m)});
      continue;
    }
    if (degree(a) < degree(b)) std::swap(a, b);
    RPoly r = rem_mod(a, b, job.m);
    pending.push_back({job.m, b, r});
  }
  return out;
}

}  // namespace

std::vector<Branch> split_gcd(const UniPoly& m, const std::vector<RPoly>& polys) {
  std::vector<Branch> branches{{m.monic(), polys.empty() ? RPoly{} : polys[0]}};
  for (std::size_t k = 1; k < polys.size(); ++k) {
    std::vector<Branch> next;
    for (const auto& br : branches) {
      auto sub = gcd_pair(br.modulus, br.gcd, polys[k]);
      next.insert(next.end(), sub.begin(), sub.end());
    }
    branches = std::move(next);
  }
  if (polys.size() == 1) {
    std::vector<Branch> next;
    for (const auto& br : branches) {
      auto sub = gcd_pair(br.modulus, br.gcd, RPoly{});
      next.insert(next.end(), sub.begin(), sub.end());
    }
    branches = std::move(next);
  }
  return branches;
}

}  // namespace jaccoord::elim
