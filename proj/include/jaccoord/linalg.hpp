#pragma once

#include <cstddef>
#include <vector>

#include "jaccoord/rat.hpp"
#include "jaccoord/unipoly.hpp"

namespace jaccoord::linalg {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

/// Rank by fraction-free (Bareiss) elimination; the input is consumed.
std::size_t rank(IntMatrix m);

/// Row and column indices of a maximal nonsingular square submatrix.
struct PivotSet {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
PivotSet pivots(const RatMatrix& m);

/// Solves a·X = b for square nonsingular a.
RatMatrix solve(RatMatrix a, RatMatrix b);

/// Characteristic polynomial det(t·I − m) via Hessenberg reduction.
UniPoly char_poly(RatMatrix m);

}  // namespace jaccoord::linalg
