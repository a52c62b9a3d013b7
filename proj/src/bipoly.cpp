#include "jaccoord/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "jaccoord/errors.hpp"
#include "jaccoord/kernels.hpp"

namespace jaccoord {

BiPoly::BiPoly(const Rat& constant) {
  if (sgn(constant) != 0) terms_.emplace(Mono{0, 0}, constant);
}

BiPoly::BiPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
  BiPoly p;
  if (sgn(c) != 0) p.terms_.emplace(Mono{i, j}, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& u, Var v) {
  Terms t;
  for (int k = 0; k <= u.degree(); ++k) {
    const Rat& c = u.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    t.emplace(v == Var::X ? Mono{k, 0} : Mono{0, k}, c);
  }
  return BiPoly(std::move(t));
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Mono{i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degx() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i);
  return d;
}

int BiPoly::degy() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.j);
  return d;
}

int BiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.i + terms_.begin()->first.j;
}

Mono BiPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Mono m{terms_.begin()->first.i, terms_.begin()->first.j};
  for (const auto& [e, c] : terms_) {
    m.i = std::min(m.i, e.i);
    m.j = std::min(m.j, e.j);
  }
  return m;
}

Rat BiPoly::eval(const Rat& xv, const Rat& yv) const {
  Rat acc = 0;
  auto cols = columns(Var::Y);
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) acc = acc * yv + it->eval(xv);
  return acc;
}

BiPoly BiPoly::dx() const {
  Terms t;
  for (const auto& [m, c] : terms_)
    if (m.i > 0) t.emplace(Mono{m.i - 1, m.j}, c * m.i);
  return BiPoly(std::move(t));
}

BiPoly BiPoly::dy() const {
  Terms t;
  for (const auto& [m, c] : terms_)
    if (m.j > 0) t.emplace(Mono{m.i, m.j - 1}, c * m.j);
  return BiPoly(std::move(t));
}

BiPoly BiPoly::swapped() const {
  Terms t;
  for (const auto& [m, c] : terms_) t.emplace(Mono{m.j, m.i}, c);
  return BiPoly(std::move(t));
}

BiPoly BiPoly::scaled(const Rat& s) const {
  if (sgn(s) == 0) return {};
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

std::vector<UniPoly> BiPoly::columns(Var main) const {
  const int n = main == Var::Y ? degy() : degx();
  const int w = main == Var::Y ? degx() : degy();
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(n) + 1,
                                    std::vector<Rat>(static_cast<std::size_t>(w) + 1));
  for (const auto& [m, c] : terms_) {
    const int k = main == Var::Y ? m.j : m.i;
    const int e = main == Var::Y ? m.i : m.j;
    raw[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] = c;
  }
  std::vector<UniPoly> cols;
  cols.reserve(raw.size());
  for (auto& r : raw) cols.emplace_back(std::move(r));
  if (terms_.empty()) cols.clear();
  return cols;
}

BiPoly BiPoly::from_columns(const std::vector<UniPoly>& cols, Var main) {
  Terms t;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (int e = 0; e <= cols[k].degree(); ++e) {
      const Rat& c = cols[k].coeffs()[static_cast<std::size_t>(e)];
      if (sgn(c) == 0) continue;
      t.emplace(main == Var::Y ? Mono{e, static_cast<int>(k)} : Mono{static_cast<int>(k), e}, c);
    }
  return BiPoly(std::move(t));
}

UniPoly BiPoly::as_uni(Var v) const {
  std::vector<Rat> c(static_cast<std::size_t>(v == Var::X ? degx() : degy()) + 1);
  for (const auto& [m, coef] : terms_) {
    if ((v == Var::X ? m.j : m.i) != 0)
      throw InternalVerificationFailure("as_uni: polynomial involves the other variable");
    c[static_cast<std::size_t>(v == Var::X ? m.i : m.j)] = coef;
  }
  return UniPoly(std::move(c));
}

void BiPoly::add_term(const Mono& m, const Rat& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  out += b;
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  out -= b;
  return out;
}

BiPoly BiPoly::operator-() const { return scaled(-1); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) { return kernels::mul(a, b); }

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.i == 0 && m.j == 0) {
      os << jaccoord::to_string(mag);
      continue;
    }
    if (mag != 1) os << jaccoord::to_string(mag) << '*';
    if (m.i > 0) {
      os << 'x';
      if (m.i > 1) os << '^' << m.i;
    }
    if (m.j > 0) {
      if (m.i > 0) os << '*';
      os << 'y';
      if (m.j > 1) os << '^' << m.j;
    }
  }
  return os.str();
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(Rat(1));
  BiPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

BiPoly compose_uni(const UniPoly& u, const BiPoly& q) {
  BiPoly acc;
  for (int k = u.degree(); k >= 0; --k) {
    acc = acc * q + BiPoly(u.coeffs()[static_cast<std::size_t>(k)]);
  }
  return acc;
}

BiPoly substitute(const BiPoly& p, const BiPoly& sx, const BiPoly& sy) {
  // Horner in y over the x-columns, each column evaluated at sx by Horner.
  auto cols = p.columns(Var::Y);
  BiPoly acc;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) acc = acc * sy + compose_uni(*it, sx);
  return acc;
}

BiPoly shift_y(const BiPoly& p, const UniPoly& phi) {
  // Horner in y on column arrays: acc <- acc·(y + phi) + c_j.
  auto cols = p.columns(Var::Y);
  if (cols.empty()) return {};
  std::vector<UniPoly> acc;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    std::vector<UniPoly> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      if (!phi.is_zero()) next[k] += acc[k] * phi;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return BiPoly::from_columns(acc, Var::Y);
}

BiPoly shift_x(const BiPoly& p, const UniPoly& psi) {
  return shift_y(p.swapped(), psi).swapped();
}

BiPoly jacobian_det(const BiPoly& p, const BiPoly& q) {
  return p.dx() * q.dy() - p.dy() * q.dx();
}

}  // namespace jaccoord
