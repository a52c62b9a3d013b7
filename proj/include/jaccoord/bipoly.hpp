#pragma once

#include <map>
#include <string>
#include <vector>

#include "jaccoord/rat.hpp"
#include "jaccoord/unipoly.hpp"

namespace jaccoord {

/// Exponent pair of the monomial x^i y^j.
struct Mono {
  int i = 0;
  int j = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// Canonical term order: total degree descending, then x-degree descending.
struct CanonicalOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  }
};

enum class Var { X, Y };

/// Sparse bivariate polynomial over Q. No stored coefficient is zero;
/// the zero polynomial has no terms.
class BiPoly {
 public:
  using Terms = std::map<Mono, Rat, CanonicalOrder>;

  BiPoly() = default;
  BiPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(Rat(constant)) {}  // NOLINT
  explicit BiPoly(Terms terms);

  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly monomial(const Rat& c, int i, int j);
  /// Embeds a univariate polynomial in the chosen variable.
  static BiPoly from_uni(const UniPoly& u, Var v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Rat coeff(int i, int j) const;
  Rat constant_term() const { return coeff(0, 0); }
  int degx() const;
  int degy() const;
  int total_degree() const;
  /// Smallest exponents (i, j) over the support; (0,0) for zero.
  Mono min_exponents() const;

  Rat eval(const Rat& x, const Rat& y) const;
  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly swapped() const;
  BiPoly scaled(const Rat& s) const;
  /// Coefficient of y^k as a polynomial in x (or of x^k as a polynomial in y).
  std::vector<UniPoly> columns(Var main) const;
  static BiPoly from_columns(const std::vector<UniPoly>& cols, Var main);
  /// Univariate view; requires the polynomial to involve only `v`.
  UniPoly as_uni(Var v) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& b);
  BiPoly& operator-=(const BiPoly& b);
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: terms in CanonicalOrder, coefficients as p/q.
  std::string to_string() const;

 private:
  void add_term(const Mono& m, const Rat& c);
  Terms terms_;
};

BiPoly pow(const BiPoly& p, unsigned e);

/// P(sx, sy).
BiPoly substitute(const BiPoly& p, const BiPoly& sx, const BiPoly& sy);
/// P(x, y + phi(x)).
BiPoly shift_y(const BiPoly& p, const UniPoly& phi_of_x);
/// P(x + psi(y), y).
BiPoly shift_x(const BiPoly& p, const UniPoly& psi_of_y);
/// u(q) for a univariate u and bivariate q.
BiPoly compose_uni(const UniPoly& u, const BiPoly& q);

/// ∂P/∂x·∂Q/∂y − ∂P/∂y·∂Q/∂x.
BiPoly jacobian_det(const BiPoly& p, const BiPoly& q);

}  // namespace jaccoord
