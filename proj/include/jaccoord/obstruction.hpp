#pragma once

#include <string>
#include <variant>

#include "jaccoord/bipoly.hpp"

namespace jaccoord {

/// The Newton polygon is not the triangle (0,0), (degx,0), (0,degy): either a
/// pure-power vertex monomial is absent or a support point lies beyond the
/// hypotenuse.
struct PolygonNotTriangle {
  Mono point;
  bool missing_vertex = false;
  friend bool operator==(const PolygonNotTriangle&, const PolygonNotTriangle&) = default;
};

/// The hypotenuse polynomial is not C·(y^q − a·x^p)^m; k is the first index
/// whose coefficient disagrees.
struct FaceNotBinomialPower {
  int k = 0;
  friend bool operator==(const FaceNotBinomialPower&, const FaceNotBinomialPower&) = default;
};

struct FaceExponentsBothExceedOne {
  int p = 0;
  int q = 0;
  friend bool operator==(const FaceExponentsBothExceedOne&, const FaceExponentsBothExceedOne&) = default;
};

struct UnivariateNonlinear {
  Var var = Var::X;
  int degree = 0;
  friend bool operator==(const UnivariateNonlinear&, const UnivariateNonlinear&) = default;
};

struct ConstantPolynomial {
  friend bool operator==(const ConstantPolynomial&, const ConstantPolynomial&) = default;
};

using Obstruction = std::variant<PolygonNotTriangle, FaceNotBinomialPower, FaceExponentsBothExceedOne,
                                 UnivariateNonlinear, ConstantPolynomial>;

/// Stable tag, e.g. "PolygonNotTriangle".
std::string obstruction_kind(const Obstruction& o);

}  // namespace jaccoord
