#pragma once

#include <variant>
#include <vector>

#include "jaccoord/bipoly.hpp"
#include "jaccoord/obstruction.hpp"

namespace jaccoord {

/// Convex hull of support ∪ {(0,0)}: extreme points only, counter-clockwise,
/// starting at the origin.
struct LatticePolygon {
  std::vector<Mono> vertices;
  int dim = 0;
};

struct LatticeCounts {
  long long interior = 0;
  long long boundary = 0;
  long long twice_area = 0;
};

struct PolygonEdge {
  Mono from;
  Mono to;
  /// Number of lattice segments on the edge (gcd of the coordinate deltas).
  long long lattice_length = 0;
  /// Outward normal (not normalized); zero vector for segment polygons.
  long long normal_x = 0;
  long long normal_y = 0;
};

/// The edge polynomial H_E of a triangular Newton polygon with vertices
/// (0,0), (dx,0), (0,dy).
struct TriangleFace {
  int dx = 0;
  int dy = 0;
  BiPoly edge;
};

/// C·(y^q − a·x^p)^m with gcd(p, q) = 1.
struct FaceForm {
  Rat C;
  Rat a;
  int p = 0;
  int q = 0;
  int m = 0;

  BiPoly expand() const;
};

LatticePolygon newton_polygon(const BiPoly& p);
LatticeCounts lattice_counts(const LatticePolygon& poly);
/// Edges in counter-clockwise order; a segment polygon yields one edge.
std::vector<PolygonEdge> edges(const LatticePolygon& poly);

/// Univariate polynomial e(t) of the monomials of p on an edge, read from
/// the lower endpoint along the primitive direction with the lowest power of
/// t removed, so e(0) != 0. Zero if no support point lies on the edge.
UniPoly edge_polynomial(const BiPoly& p, const PolygonEdge& e);

std::variant<TriangleFace, PolygonNotTriangle> triangle_face(const BiPoly& p);
std::variant<FaceForm, FaceNotBinomialPower> face_binomial_power(const TriangleFace& face);

}  // namespace jaccoord
