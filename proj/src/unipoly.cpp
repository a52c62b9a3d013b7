#include "jaccoord/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "jaccoord/errors.hpp"

namespace jaccoord {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rat& constant) {
  if (!jaccoord::is_zero(constant)) c_.push_back(constant);
}

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  if (jaccoord::is_zero(c)) return {};
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && jaccoord::is_zero(c_.back())) c_.pop_back();
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  return scaled(1 / c_.back());
}

UniPoly UniPoly::scaled(const Rat& s) const {
  if (jaccoord::is_zero(s)) return {};
  UniPoly out = *this;
  for (auto& v : out.c_) v *= s;
  return out;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (jaccoord::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (jaccoord::is_zero(c)) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << jaccoord::to_string(mag);
      continue;
    }
    if (mag != 1) os << jaccoord::to_string(mag) << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UniPoly pow(const UniPoly& u, unsigned e) {
  UniPoly result(Rat(1));
  UniPoly base = u;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("divmod");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat inv = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rat q = rem[static_cast<std::size_t>(k)] * inv;
    if (jaccoord::is_zero(q)) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalVerificationFailure("exact_div: nonzero remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

UniPoly squarefree_part(const UniPoly& u) {
  if (u.is_zero()) throw ZeroPolynomial("squarefree_part");
  if (u.is_constant()) return UniPoly(Rat(1));
  return exact_div(u, gcd(u, u.derivative())).monic();
}

bool is_squarefree(const UniPoly& u) {
  if (u.is_zero()) return false;
  return gcd(u, u.derivative()).is_constant();
}

std::vector<Int> primitive_integer_coeffs(const UniPoly& u) {
  Int lcm_den = 1;
  for (const auto& c : u.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  out.reserve(u.coeffs().size());
  Int g = 0;
  for (const auto& c : u.coeffs()) {
    Int v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g == 0) return out;
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

namespace {

int sign_of(const UniPoly& p, const Rat& t) { return sgn(p.eval(t)); }

int sign_variations(const std::vector<UniPoly>& chain, const Rat& t) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rat floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

// Rational of least denominator in [lo, hi], lo <= hi.
Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Rat fl = floor_rat(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& u) {
  if (u.is_zero()) throw ZeroPolynomial("rational_roots");
  std::vector<Rat> roots;
  UniPoly f = squarefree_part(u);
  if (f.degree() < 1) return roots;
  if (jaccoord::is_zero(f.coeff(0))) {
    roots.emplace_back(0);
    f = exact_div(f, UniPoly::variable());
  }
  if (f.degree() >= 1) {
    std::vector<Int> z = primitive_integer_coeffs(f);
    std::vector<Rat> zc(z.begin(), z.end());
    f = UniPoly(zc);
    const Int lead = abs(z.back());
    Rat bound = 0;
    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
      Rat q = Rat(abs(z[k])) / Rat(lead);
      if (q > bound) bound = q;
    }
    bound += 1;
    const Rat eps = Rat(1) / (lead * lead);

    std::vector<UniPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
      UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;
      chain.push_back(r);
    }

    struct Span { Rat lo, hi; int n; };
    std::vector<Span> work{{-bound, bound, sign_variations(chain, -bound) - sign_variations(chain, bound)}};
    while (!work.empty()) {
      Span s = work.back();
      work.pop_back();
      if (s.n == 0) continue;
      if (s.n > 1) {
        Rat mid = (s.lo + s.hi) / 2;
        int vm = sign_variations(chain, mid);
        work.push_back({mid, s.hi, vm - sign_variations(chain, s.hi)});
        work.push_back({s.lo, mid, sign_variations(chain, s.lo) - vm});
        continue;
      }
      Rat lo = s.lo, hi = s.hi;
      bool found = false;
      while (hi - lo >= eps) {
        Rat mid = (lo + hi) / 2;
        if (sign_of(f, mid) == 0) {
          roots.push_back(mid);
          found = true;
          break;
        }
        if (sign_variations(chain, lo) - sign_variations(chain, mid) == 1) hi = mid;
        else lo = mid;
      }
      if (found) continue;
      if (sign_of(f, hi) == 0) {
        roots.push_back(hi);
        continue;
      }
      Rat cand = simplest_between(lo, hi);
      if (cand > lo && sign_of(f, cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  UniPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * UniPoly(std::vector<Rat>{-xs[k], Rat(1)}) + UniPoly(dd[k]);
  }
  return acc;
}

}  // namespace jaccoord
