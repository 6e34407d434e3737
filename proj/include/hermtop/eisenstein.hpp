#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "hermtop/forms.hpp"

namespace hermtop {

// Descent step limit; HERMTOP_STEP_LIMIT overrides the default 10^6.
long long step_limit();

// Vertex of the D=-3 spine: the four lax vectors {u, v, u+v, u+rho v},
// where any two of them form a lax basis.
struct UltraBasis {
  Vec2A u, v;
};

UltraBasis standard_ultra_basis();

// Values of a form at the four vectors, in ultrabasis order.
struct VertexLabelE {
  long long a = 0, b = 0, c = 0, d = 0;
  std::array<long long, 4> tuple() const { return {a, b, c, d}; }
};

struct GreekLabel {
  long long alpha = 0, beta = 0, gamma = 0, delta = 0;
  std::array<long long, 4> tuple() const { return {alpha, beta, gamma, delta}; }
};

GreekLabel greeks(const VertexLabelE& l);
// a^2+b^2+c^2+d^2-ab-ac-ad-bc-bd-cd = -(alpha a + beta b + gamma c + delta d)/2
long long disc_e(const VertexLabelE& l);
inline long long inv_vertex(const VertexLabelE& l) { return l.a + l.b + l.c + l.d; }

std::array<Vec2A, 4> ultra_vectors(const UltraBasis& ub);
using VertexKeyE = std::array<long long, 16>;
VertexKeyE vertex_key(const UltraBasis& ub);

VertexLabelE labels_of(const HermitianForm& f, const UltraBasis& ub);

// The form determined by labels at a vertex, evaluated at w = x*u + y*v:
// (1/3)[beta N(x) + alpha N(y) + gamma N(x-y) + delta N(rho x - y)].
long long eval_at_vertex(const VertexLabelE& lbl, const UltraBasis& ub, const Vec2A& w);

// Gram data of the form with the given labels at the standard ultrabasis.
HermitianForm form_from_labels(const VertexLabelE& lbl);

// Cross the edge obtained by dropping slot k (0..3).  The new fourth value
// is the sum of the kept three minus the dropped one, and inv changes by
// the k-th greek.
struct ClimbResult {
  UltraBasis ub;
  VertexLabelE lbl;
};
ClimbResult climb(const VertexLabelE& lbl, const UltraBasis& ub, int k);

struct WellResult {
  UltraBasis ub;
  VertexLabelE lbl;
  // additional minimal-inv vertices reachable through zero greeks
  std::vector<ClimbResult> co_wells;
};

// Steepest descent on inv; exists iff f is positive definite.
WellResult find_well(const HermitianForm& f);

// Descend to the ocean and walk until exactly two labels are positive.
ClimbResult find_ocean_vertex(const HermitianForm& f);

struct OceanVertexE {
  UltraBasis ub;
  VertexLabelE lbl;
  int incident_ocean_cells = 0;
};
struct OceanCellE {
  Vec2A x, y;
  long long fx = 0, fy = 0;
  int depth = 0;
};
struct OceanEdgeE {
  std::array<Vec2A, 3> vecs;
  long long inv_e = 0;
};

using CellKeyE = std::array<long long, 8>;
using EdgeKeyE = std::array<long long, 12>;

struct OceanGraphE {
  HermitianForm f;
  std::map<VertexKeyE, OceanVertexE> vertices;
  std::map<CellKeyE, OceanCellE> cells;
  std::map<EdgeKeyE, OceanEdgeE> edges;
};

CellKeyE cell_key(const Vec2A& x, const Vec2A& y);

// BFS over hexagonal ocean cells up to the given combinatorial radius.
OceanGraphE ocean_graph_e(const HermitianForm& f, int radius);

struct UfResult {
  std::vector<Mat2A> generators;  // each satisfies transform(f, g) = f
  int vertex_orbits = 0, edge_orbits = 0, cell_orbits = 0;
  std::vector<int> vertex_stabilizer_orders;  // one per vertex orbit
  std::vector<long long> vertex_orbit_inv;
  std::vector<int> presentation_exponents;    // set when the quotient is spherical
};

UfResult uf_generators_e(const HermitianForm& f, int radius);

struct ClassE {
  std::array<long long, 4> key;  // canonical label tuple of the class
  HermitianForm rep;
  long long min_abs = 0;  // well minimum (definite) or ocean minimum (indefinite)
};

// GL2(A)-classes of primitive forms of the given discriminant; definite
// classes are keyed by wells, indefinite anisotropic ones by ocean vertices.
std::vector<ClassE> classify_disc_e(long long delta, int jobs = 1);

// All (2,2)-vertex label tuples seen in an adaptive-radius exploration,
// canonicalized; used for class keys and minima.
struct OceanSummary {
  std::set<std::array<long long, 4>> labels22;
  long long min_abs = 0;
  std::array<long long, 4> key{};
};
OceanSummary ocean_summary(const HermitianForm& f);

// Canonical form of a label tuple under the 12 slot permutations that
// re-presentations of one vertex realize (the even ones).
std::array<long long, 4> canonical_tuple_a4(const std::array<long long, 4>& t);

}  // namespace hermtop
