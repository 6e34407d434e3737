#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hermtop/eisenstein.hpp"
#include "hermtop/gaussian.hpp"
#include "hermtop/spine_geom.hpp"
#include "hermtop/topograph.hpp"

namespace hermtop {

// z -> (az + b)/(cz + d), acting on H^3 by the Poincare extension.
struct MobiusMap {
  std::complex<double> a{1}, b{0}, c{0}, d{1};
};

std::complex<double> mobius_apply(const MobiusMap& m, std::complex<double> z);
Point3 mobius_apply_h3(const MobiusMap& m, const Point3& w);
MobiusMap mobius_compose(const MobiusMap& f, const MobiusMap& g);  // f after g

struct DiskPoint {
  double u = 0, v = 0;
};

// Boundary circle {f = 0} of an indefinite form: center -conj(nu)/a,
// radius sqrt(Delta/|D|)/|a|.  When a = 0 the zero set is a line through
// infinity; `pre` records the shear applied to move it to a circle, and the
// returned circle belongs to transform(f, pre).
struct CirclePosition {
  std::complex<double> center;
  double radius = 1;
  Mat2A pre;
};
CirclePosition circle_of_form(const HermitianForm& f);

// Geometric input of a projection: region cusps per vertex and cells as
// cyclic corner lists.
struct ProjectionInput {
  long long d = 0;
  std::vector<std::vector<Cusp>> vertex_cusps;
  std::vector<std::vector<int>> cells;
  std::vector<long long> cell_inv;
  std::vector<long long> vertex_inv;
};

ProjectionInput projection_input_g(const OceanGraphG& g);
ProjectionInput projection_input_e(const OceanGraphE& g);

struct OceanProjection {
  std::vector<DiskPoint> vertices;
  std::vector<std::vector<int>> cells;  // corner indices, cyclic
  std::vector<long long> cell_inv;
  std::vector<long long> vertex_inv;
  MobiusMap chain;  // half-space map taking H_f to the vertical plane Re = 0
};

// Mobius to standard position, orthogonal projection onto the vertical
// plane, then the upper half-plane to the Poincare disk.
OceanProjection project_ocean(const HermitianForm& f, const ProjectionInput& in);

// Angle of a projected cell at `corner` between the geodesics toward its
// two neighbouring corners (disk model, hence the Euclidean angle between
// arc tangents).
double disk_angle(const DiskPoint& corner, const DiskPoint& prev, const DiskPoint& next);

// Klein model: geodesics become straight chords, hyperbolic convexity
// becomes Euclidean convexity.
DiskPoint to_klein(const DiskPoint& p);
double klein_intersection_area(const std::vector<DiskPoint>& a,
                               const std::vector<DiskPoint>& b);

// SVG emitters; all deterministic.
std::string svg_topograph(const QuadraticForm& f, int depth);
std::string svg_ocean(const OceanProjection& p);
std::string svg_tiling(const std::vector<TileCell>& cells, const Window& win);

}  // namespace hermtop
