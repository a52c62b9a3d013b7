#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "jaccoord/bipoly.hpp"
#include "jaccoord/newton.hpp"
#include "jaccoord/obstruction.hpp"

namespace jaccoord {

/// (x, y) ↦ (a·x + b·y + e, c·x + d·y + f) with a·d − b·c ≠ 0.
struct Linear {
  Rat a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  static Linear identity() { return {}; }
  static Linear swap() { return {0, 1, 1, 0, 0, 0}; }
  Rat det() const { return a * d - b * c; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// (x, y) ↦ (x, y + phi(x)).
struct TriangularY {
  UniPoly phi;
  friend bool operator==(const TriangularY&, const TriangularY&) = default;
};

/// (x, y) ↦ (x + psi(y), y).
struct TriangularX {
  UniPoly psi;
  friend bool operator==(const TriangularX&, const TriangularX&) = default;
};

using ElementaryAuto = std::variant<Linear, TriangularY, TriangularX>;

/// Steps s1..sk denote the map Φ = s1 ∘ s2 ∘ … ∘ sk, so P∘Φ is obtained by
/// substituting the steps into P in recorded order.
struct Witness {
  std::vector<ElementaryAuto> steps;
  friend bool operator==(const Witness&, const Witness&) = default;
};

std::pair<BiPoly, BiPoly> components(const ElementaryAuto& s);
ElementaryAuto inverse(const ElementaryAuto& s);
/// Constant Jacobian determinant of the step.
Rat jacobian(const ElementaryAuto& s);
/// P∘s.
BiPoly compose_step(const BiPoly& p, const ElementaryAuto& s);

Witness invert(const Witness& w);
/// Component polynomials (X, Y) of Φ.
std::pair<BiPoly, BiPoly> apply_witness(const Witness& w);

struct ReduceStep {
  ElementaryAuto step;
  BiPoly next;
  FaceForm face;
};

/// One reduction: requires degx, degy >= 1 and total degree >= 2.
std::variant<ReduceStep, Obstruction> reduce_step(const BiPoly& p);

struct CheckOptions {
  /// Ceiling on degx + degy of any intermediate polynomial.
  int degree_guard = 512;

  /// Defaults, with the guard overridden by JACCOORD_DEGREE_GUARD if set.
  static CheckOptions from_env();
};

struct Coordinate {
  Witness witness;
  BiPoly complement;
  Rat jac;
};

struct NotCoordinate {
  Obstruction obstruction;
  BiPoly at_stage;
};

struct CoordinateVerdict {
  std::variant<Coordinate, NotCoordinate> outcome;

  bool is_coordinate() const { return std::holds_alternative<Coordinate>(outcome); }
};

/// Decides whether p is a coordinate. A Coordinate verdict carries a witness
/// that has been replayed against p; failure to replay throws
/// InternalVerificationFailure instead of returning a verdict.
CoordinateVerdict check(const BiPoly& p, const CheckOptions& opts = {});

/// Re-runs the gate that produced `o` on `at_stage`; true if it reproduces `o`.
bool recheck(const Obstruction& o, const BiPoly& at_stage);

struct GeneratedCoordinate {
  BiPoly p;
  Witness truth;
};

/// Seeded tame coordinate: the first component of
/// L0 ∘ T1 ∘ L1 ∘ T2 ∘ … ∘ L(k-1) ∘ Tk with k = steps triangular maps of
/// degree <= max_step_deg and coefficients of height <= coeff_bound.
/// truth satisfies p∘truth = x.
GeneratedCoordinate gen_random_coordinate(std::uint64_t seed, int steps, int max_step_deg, int coeff_bound);

}  // namespace jaccoord
