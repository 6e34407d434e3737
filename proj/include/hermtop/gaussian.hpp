#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hermtop/forms.hpp"

namespace hermtop {

// Vertex of the D=-4 spine: six regions forming three opposite pairs.
// A presenting pair (r, s) spans a submodule of index 2, det(r, s) ~ 1+i;
// the other four regions are (1+i)/2 (r + i^k s).
struct GVertex {
  Vec2A r, s;
};

GVertex make_gvertex(const Vec2A& r, const Vec2A& s);  // validates the determinant

// The six lax vectors: r, s, then (1+i)/2 (r + i^k s) for k = 1..4.
// Opposite pairs: {r, s}, {v[2], v[4]}, {v[3], v[5]}.
std::array<Vec2A, 6> vertex_vectors(const GVertex& v);

using VertexKeyG = std::array<long long, 24>;
VertexKeyG gvertex_key(const GVertex& v);

// Values grouped into the three opposite pairs.
using PairLabels = std::array<std::array<long long, 2>, 3>;
PairLabels glabels(const HermitianForm& f, const GVertex& v);
PairLabels canonical_pairs(const PairLabels& p);

// inv(v) = f(r) + f(s), independent of the presenting pair.
long long inv_g(const HermitianForm& f, const GVertex& v);

// 2 f(r) + 2 f(s) = sum of the values at the four remaining regions.
bool cube_relation_check(const HermitianForm& f, const GVertex& v);

// Delta = 2a(a-z) + 2b(b-z) + 2c(c-z) + z^2 from superbasis values (a, b, c)
// and a vertex invariant z of that edge.
long long disc_from_edge(long long a, long long b, long long c, long long z);

struct OceanCellG {
  Vec2A x, y;
  long long fx = 0, fy = 0;
  int depth = 0;
  std::array<VertexKeyG, 4> corners{};  // cyclic order
};
struct OceanVertexG {
  GVertex v;
  PairLabels pairs{};
  long long inv = 0;
  int incident_ocean_cells = 0;
};
struct OceanEdgeG {
  std::array<Vec2A, 3> vecs;
  long long inv_e = 0;
};

using CellKeyG = std::array<long long, 8>;
using EdgeKeyG = std::array<long long, 12>;

struct OceanGraphG {
  HermitianForm f;
  std::map<VertexKeyG, OceanVertexG> vertices;
  std::map<CellKeyG, OceanCellG> cells;
  std::map<EdgeKeyG, OceanEdgeG> edges;
};

CellKeyG cell_key_g(const Vec2A& x, const Vec2A& y);

// Descend the square complex to a cell whose two regions have opposite
// signs.  Requires an indefinite anisotropic form over D=-4.
std::pair<Vec2A, Vec2A> find_ocean_cell(const HermitianForm& f);

OceanGraphG ocean_graph_g(const HermitianForm& f, int radius);

struct VertexOrbitInfoG {
  long long inv = 0;
  PairLabels pairs{};
  int stabilizer_order = 0;
  bool stabilizer_cyclic = false;
};

struct UfResultG {
  std::vector<Mat2A> generators;
  std::vector<VertexOrbitInfoG> vertex_orbits;
  int edge_orbits = 0, cell_orbits = 0;
  std::set<long long> edge_inv_values;
  std::vector<int> presentation_exponents;  // spherical quotient only
  std::string presentation;
};

UfResultG uf_generators_g(const HermitianForm& f, int radius);

// Gram data of the form over D=-4 with superbasis values (a, b, c) at the
// standard basis and vertex invariant z at the (u+v, u+iv) corner.
HermitianForm form_from_edge_data(long long a, long long b, long long c, long long z);

// Canonical flattening of the three opposite pairs under the 24 cube
// rotations (axis permutation times direction flips of positive sign).
std::array<long long, 6> canonical_pairs_oriented(const PairLabels& p);

// The eight spine edges at a vertex, as superbases {u, v, u+v}.
std::vector<std::pair<Vec2A, Vec2A>> vertex_edges(const GVertex& v);

// The endpoint of the edge {u, v, u+v} other than `current`.
GVertex other_vertex_of_edge(const Vec2A& u, const Vec2A& v, const GVertex& current);

// Steepest descent on inv for a positive definite form over D=-4.
struct GMinVertex {
  GVertex v;
  long long inv = 0;
  std::vector<GVertex> co_minimal;  // equal-inv neighbours
};
GMinVertex find_min_vertex_g(const HermitianForm& f);

struct OceanSummaryG {
  std::array<long long, 6> key{};
  long long min_abs = 0;
};
OceanSummaryG ocean_summary_g(const HermitianForm& f);

struct ClassG {
  std::array<long long, 6> key{};
  HermitianForm rep;
  long long min_abs = 0;
};

// GL2(A)-classes over D=-4 of the given discriminant: definite classes are
// keyed by minimal-inv vertices, indefinite anisotropic ones by oceans.
std::vector<ClassG> classify_disc_g(long long delta, int jobs = 1);

}  // namespace hermtop
