#pragma once

#include <vector>

#include "jaccoord/bipoly.hpp"
#include "jaccoord/unipoly.hpp"

// Exact elimination over Q[t][s]: bivariate gcd and exact division,
// subresultant resultants, and gcds over Q[t]/(m) that split m on zero
// divisors so conjugate roots are handled without numerics.
namespace jaccoord::elim {

/// Polynomial in a main variable with coefficients in Q[t], ascending degree,
/// trailing (leading) coefficient nonzero.
using RPoly = std::vector<UniPoly>;

RPoly to_rpoly(const BiPoly& p, Var main);
BiPoly from_rpoly(const RPoly& p, Var main);
int degree(const RPoly& p);

/// Monic gcd of the coefficients.
UniPoly content(const RPoly& p);
RPoly primitive_part(const RPoly& p);
/// lc(b)^(deg a - deg b + 1)·a mod b.
RPoly pseudo_remainder(const RPoly& a, const RPoly& b);

/// Resultant over Q[t] by the subresultant algorithm.
UniPoly resultant(const RPoly& a, const RPoly& b);
/// Eliminates `v`; the result is a polynomial in the other variable.
UniPoly resultant(const BiPoly& a, const BiPoly& b, Var v);

/// gcd in Q[x,y], normalized so the lexicographically leading coefficient
/// (highest y power, then highest x power) is 1. gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// a / b; throws InternalVerificationFailure if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
/// f / gcd(f, f_x, f_y). Throws ZeroPolynomial for f = 0.
BiPoly squarefree_part(const BiPoly& f);
bool is_squarefree(const BiPoly& f);

/// A factor m_k of a squarefree modulus together with a gcd g_k that is
/// monic in the main variable over Q[t]/(m_k).
struct Branch {
  UniPoly modulus;
  RPoly gcd;
};

/// gcd of `polys` over Q[t]/(m) for squarefree m, splitting m whenever a
/// leading coefficient is a zero divisor. The branch moduli multiply to m.
std::vector<Branch> split_gcd(const UniPoly& m, const std::vector<RPoly>& polys);

/// Inverse of a modulo m; a must be coprime to m.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

}  // namespace jaccoord::elim
