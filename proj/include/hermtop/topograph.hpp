#pragma once

#include <array>
#include <vector>

#include "hermtop/forms.hpp"
#include "hermtop/numeric.hpp"

namespace hermtop {

// Primitive vector up to sign, normalized with m > 0, or m = 0 and n = 1.
struct LaxVec {
  BigInt m, n;
};
LaxVec lax_normalize(BigInt m, BigInt n);

// Superbasis {u, v, u+v}; any two of the three form a basis of Z^2.
struct SuperBasis {
  BigInt ux, uy, vx, vy;
  static SuperBasis standard() { return SuperBasis{1, 0, 0, 1}; }
};

enum class EdgeChoice { uv, uw, vw };

// Values of f at (u, v, u+v).
std::array<BigInt, 3> vertex_values(const QuadraticForm& f, const SuperBasis& sb);

// a^2 + b^2 + c^2 - 2ab - 2bc - 2ac; equals qdisc for genuine vertex values.
BigInt vertex_disc(const BigInt& a, const BigInt& b, const BigInt& c);

// Cross the chosen edge: the region not on the edge is replaced, and its new
// value is 2x + 2y - z for edge values x, y and old opposite value z.
SuperBasis edge_step(const SuperBasis& sb, EdgeChoice which);

struct RiverEdgeLabel {
  BigInt neg, pos;  // values on the two banks, neg < 0 < pos
  char turn;        // 'L' or 'R': which way the river bends at the far vertex
};

struct RiverResult {
  std::vector<RiverEdgeLabel> period;
  std::array<std::array<BigInt, 2>, 2> automorph;  // SL2(Z), preserves f
  BigInt min_abs;
  LaxVec min_vec;
  BigInt disc;
};

// Walk Conway's river of an indefinite anisotropic form: descend from the
// standard superbasis to a mixed-sign vertex, then follow the river until
// the (values, orientation) state recurs.  The recurrence matrix generates
// SO(f), and the minimum of |f| over river vertices is the global minimum.
RiverResult trace_river(const QuadraticForm& f);

// The river-translation automorph: determinant 1, f(g v) = f(v).
std::array<std::array<BigInt, 2>, 2> so_generator(const QuadraticForm& f);

}  // namespace hermtop
