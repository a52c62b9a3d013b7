#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "jaccoord/bipoly.hpp"
#include "jaccoord/linalg.hpp"
#include "jaccoord/unipoly.hpp"

namespace jaccoord {

enum class UnknownReason { Degenerate, Reducible, SegmentPolygon, ShiftFailed, ZeroConstantTerm };

std::string to_string(UnknownReason r);

struct Unknown {
  UnknownReason reason;
  friend bool operator==(const Unknown&, const Unknown&) = default;
};

/// A lattice-formula invariant or the gate that prevented computing it.
using Count = std::variant<long long, Unknown>;

inline bool known(const Count& c) { return std::holds_alternative<long long>(c); }

struct NondegeneracyResult {
  bool ok = true;
  std::string detail;  // empty when ok
};

/// Linear map (g, h) ↦ f·g_y − g·f_y − f·h_x + h·f_x on the coefficient
/// vectors of g (degx <= m−1, degy <= n) and h (degx <= m, degy <= n−1),
/// m = degx f, n = degy f. `shift` is the map (g, h) ↦ g_y − h_x, so the
/// matrix for f − c is `matrix − c·shift`.
struct RuppertSystem {
  linalg::RatMatrix matrix;
  linalg::RatMatrix shift;
  std::size_t unknowns = 0;
};

RuppertSystem ruppert_system(const BiPoly& f);

/// Number of absolutely irreducible factors of a squarefree f: the nullity
/// of the Ruppert system. Throws ConstantInput / NotSquarefree.
long long absolute_factor_count(const BiPoly& f);

/// Newton-nondegeneracy: every edge polynomial of newton_polygon(f) is
/// squarefree, and f, f_x, f_y have no common zero with x·y ≠ 0.
NondegeneracyResult nondegenerate(const BiPoly& f);

/// Genus of the smooth model of f = 0 as the interior lattice point count,
/// when f (translated if its constant term is zero) is nondegenerate,
/// absolutely irreducible and has a two-dimensional polygon.
Count genus(const BiPoly& f, std::uint64_t seed = 0);

/// Places at infinity of the affine curve f = 0 from the lattice lengths of
/// the polygon edges facing away from the origin.
Count branches_at_infinity(const BiPoly& f);

struct FibreReport {
  Rat c;
  long long abs_factor_count = 0;
  /// P − c is squarefree.
  bool multiplicity_reduced = true;
  /// Nondegeneracy of the polynomial the genus was read from: the translate
  /// when a shift succeeded, otherwise the squarefree fibre polynomial itself.
  bool nondegenerate = false;
  Count genus;
  Count branches_at_infinity;
};

FibreReport fibre_report(const BiPoly& p, const Rat& c, std::uint64_t seed = 0);

struct IrrationalWitness {
  UniPoly minpoly;     // squarefree, no rational roots
  std::string source;  // "critical" or "ruppert"
};

struct SpecialValues {
  std::vector<Rat> rational_candidates;
  std::vector<IrrationalWitness> irrational_witnesses;
  /// False when the Ruppert system was too large for the determinant.
  bool ruppert_component = true;
};

/// Superset heuristic for atypical values of p: critical values by
/// resultant elimination plus rank-drop values of the Ruppert system of p − c.
SpecialValues special_value_candidates(const BiPoly& p);

/// Largest Ruppert submatrix for which special_value_candidates forms the
/// determinant polynomial.
inline constexpr std::size_t kRuppertDeterminantLimit = 160;

}  // namespace jaccoord
