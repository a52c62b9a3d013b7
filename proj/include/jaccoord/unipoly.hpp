#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jaccoord/rat.hpp"

namespace jaccoord {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
/// The leading coefficient is nonzero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  UniPoly(long constant) : UniPoly(Rat(constant)) {}  // NOLINT

  static UniPoly monomial(const Rat& c, int degree);
  static UniPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(const Rat& s) const;
  UniPoly compose(const UniPoly& inner) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Canonical text in the given variable, highest degree first.
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly pow(const UniPoly& u, unsigned e);

/// Euclidean division over Q; throws ZeroPolynomial on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throwing InternalVerificationFailure if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// u / gcd(u, u'), monic. Throws ZeroPolynomial for u = 0.
UniPoly squarefree_part(const UniPoly& u);
bool is_squarefree(const UniPoly& u);

/// Scales to a primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const UniPoly& u);

/// All distinct rational roots of u, ascending. u must be nonzero.
std::vector<Rat> rational_roots(const UniPoly& u);

/// Polynomial through the points (xs[k], ys[k]); xs pairwise distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace jaccoord
