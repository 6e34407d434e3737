#pragma once

#include <complex>
#include <vector>

#include "hermtop/forms.hpp"
#include "hermtop/numeric.hpp"

namespace hermtop {

// Upper half-space point (z, zeta), zeta > 0.
struct Point3 {
  std::complex<double> z;
  double zeta = 1.0;
};

// Exact planar point z = p + q*sqrt(D): Euclidean coordinates are
// (p, q*sqrt(|D|)), and every spine line is rational in (p, q).
struct ExactPoint {
  Rat p, q;
  bool operator==(const ExactPoint& o) const { return p == o.p && q == o.q; }
};
using ExactPolygon = std::vector<ExactPoint>;

// Half-plane A*p + B*q <= C with integer data.
struct HalfPlane {
  Rat A, B, C;
};

// Boundary line of a spine cell: tr(z conj(a) b) = N(a) + N(b) - N(I).
struct CellLine {
  RingElem a, b;
  long long nI = 1;
  HalfPlane half_plane() const;  // the side containing 0
};

// exp of the signed distance from cusp alpha to w; d_infinity = 1/zeta.
double cusp_distance(const Cusp& alpha, const Point3& w);

enum class Tangency { touch, disjoint };
// Tangency decided exactly: compare N(ad - bc) with N(I)N(J) exactly.
Tangency horoballs_touch(const Cusp& alpha, const Cusp& beta);

// Projection to C of the cell of points equidistant to 0 and infinity,
// cut out by all reduction lines; exact rational polygon in (p, q).
ExactPolygon fundamental_cell(Disc d);

// Voronoi cell of the lattice A around 0 in the same coordinates.
ExactPolygon voronoi_cell(Disc d);

// canonical orientation + starting vertex, for exact comparisons
ExactPolygon canonical_polygon(ExactPolygon poly);
Rat polygon_area2(const ExactPolygon& poly);  // twice the signed (p, q) area

std::complex<double> embed_exact(const ExactPoint& pt, Disc d);

struct TileCell {
  std::complex<double> site;
  double weight = 0;  // N(I)/N(b), the squared horosphere radius
  std::vector<std::complex<double>> poly;
};

struct Window {
  double x0, y0, x1, y1;
};

// Power-diagram tiling of the horosphere at infinity over the window.
std::vector<TileCell> horosphere_tiling(Disc d, const Window& win);

// The point equidistant to four (or more) cusps; throws when degenerate.
Point3 vertex_position(const std::vector<Cusp>& cusps);

}  // namespace hermtop
