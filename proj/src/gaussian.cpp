#include "hermtop/gaussian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <future>
#include <stdexcept>

#include "hermtop/eisenstein.hpp"  // step_limit

namespace hermtop {

namespace {

const long long D4 = -4;

RingElem gauss_i() { return RingElem(2, 1, D4); }
RingElem i_pow(int k) {
  static const std::array<RingElem, 4> pows = {ring_one(Disc(D4)), RingElem(2, 1, D4),
                                               RingElem(-1, 0, D4), RingElem(-2, -1, D4)};
  return pows[((k % 4) + 4) % 4];
}
RingElem one_plus_i() { return RingElem(3, 1, D4); }

Vec2A half(const Vec2A& v) {
  if (v.x.x % 2 || v.x.y % 2 || v.y.x % 2 || v.y.y % 2)
    throw std::domain_error("gaussian vertex: vector not divisible by 2");
  return Vec2A(RingElem(v.x.x / 2, v.x.y / 2, D4), RingElem(v.y.x / 2, v.y.y / 2, D4));
}

std::array<long long, 4> lax_full_key(const Vec2A& v) { return vec_key(lax_canonical(v)); }

}  // namespace

GVertex make_gvertex(const Vec2A& r, const Vec2A& s) {
  if (norm(det(r, s)) != 2)
    throw std::domain_error("gaussian vertex: det(r, s) must be an associate of 1+i");
  return GVertex{r, s};
}

std::array<Vec2A, 6> vertex_vectors(const GVertex& v) {
  if (norm(det(v.r, v.s)) != 2)
    throw std::domain_error("gaussian vertex: det(r, s) must be an associate of 1+i");
  std::array<Vec2A, 6> out = {v.r, v.s, v.r, v.r, v.r, v.r};
  for (int k = 1; k <= 4; ++k)
    out[1 + k] = half(one_plus_i() * (v.r + i_pow(k) * v.s));
  for (const Vec2A& w : out)
    if (!is_primitive(w)) throw std::logic_error("gaussian vertex: derived vector imprimitive");
  return out;
}

VertexKeyG gvertex_key(const GVertex& v) {
  auto vecs = vertex_vectors(v);
  std::array<std::array<long long, 4>, 6> keys;
  for (int i = 0; i < 6; ++i) keys[i] = lax_full_key(vecs[i]);
  std::sort(keys.begin(), keys.end());
  VertexKeyG out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = keys[i][j];
  return out;
}

PairLabels glabels(const HermitianForm& f, const GVertex& v) {
  auto vecs = vertex_vectors(v);
  // opposite pairs: {r, s}, {w1, w3}, {w2, w4}
  return PairLabels{{{heval(f, vecs[0]), heval(f, vecs[1])},
                     {heval(f, vecs[2]), heval(f, vecs[4])},
                     {heval(f, vecs[3]), heval(f, vecs[5])}}};
}

PairLabels canonical_pairs(const PairLabels& p) {
  PairLabels out = p;
  for (auto& pr : out)
    if (pr[1] < pr[0]) std::swap(pr[0], pr[1]);
  std::sort(out.begin(), out.end());
  return out;
}

long long inv_g(const HermitianForm& f, const GVertex& v) {
  return heval(f, v.r) + heval(f, v.s);
}

bool cube_relation_check(const HermitianForm& f, const GVertex& v) {
  auto vecs = vertex_vectors(v);
  long long lhs = 2 * (heval(f, vecs[0]) + heval(f, vecs[1]));
  long long rhs = 0;
  for (int k = 2; k < 6; ++k) rhs += heval(f, vecs[k]);
  if (lhs != rhs) return false;
  // all three opposite-pair sums agree
  PairLabels p = glabels(f, v);
  long long z = p[0][0] + p[0][1];
  return p[1][0] + p[1][1] == z && p[2][0] + p[2][1] == z;
}

long long disc_from_edge(long long a, long long b, long long c, long long z) {
  __int128 d = 2 * static_cast<__int128>(a) * (a - z) + 2 * static_cast<__int128>(b) * (b - z) +
               2 * static_cast<__int128>(c) * (c - z) + static_cast<__int128>(z) * z;
  return checked_ll(d, "disc_from_edge");
}

std::pair<Vec2A, Vec2A> find_ocean_cell(const HermitianForm& f) {
  if (f.d() != D4) throw std::invalid_argument("find_ocean_cell: discriminant must be -4");
  long long delta = hdisc(f);
  if (delta <= 0) throw std::domain_error("find_ocean_cell: form is not indefinite");
  if (!is_anisotropic(f)) throw std::domain_error("find_ocean_cell: form is isotropic");

  Disc d(D4);
  Vec2A u(ring_one(d), ring_zero(d)), v(ring_zero(d), ring_one(d));
  long long a = heval(f, u), b = heval(f, v);
  long long steps = 0;
  while ((a > 0) == (b > 0)) {
    if (a == 0 || b == 0) throw std::domain_error("find_ocean_cell: form represents 0");
    int sgn = (a > 0) ? 1 : -1;
    // candidate new regions u + i^k v; pick the one of smallest signed value
    int bestk = 1;
    long long bestval = 0;
    for (int k = 1; k <= 4; ++k) {
      long long val = heval(f, u + i_pow(k) * v);
      if (k == 1 || sgn * val < sgn * bestval ||
          (val == bestval &&
           lax_full_key(u + i_pow(k) * v) < lax_full_key(u + i_pow(bestk) * v))) {
        bestk = k;
        bestval = val;
      }
    }
    if (sgn * bestval >= sgn * (sgn > 0 ? std::max(a, b) : std::min(a, b)))
      throw std::logic_error("find_ocean_cell: stuck on an indefinite form");
    Vec2A w = u + i_pow(bestk) * v;
    // replace the region with the larger |value|
    bool replace_u = std::llabs(a) > std::llabs(b) ||
                     (std::llabs(a) == std::llabs(b) && lax_full_key(v) < lax_full_key(u));
    if (replace_u) {
      u = w;
      a = bestval;
    } else {
      v = w;
      b = bestval;
    }
    if (++steps > step_limit())
      throw std::domain_error("find_ocean_cell: step limit exceeded");
  }
  if (a == 0 || b == 0) throw std::domain_error("find_ocean_cell: form represents 0");
  return {u, v};
}

CellKeyG cell_key_g(const Vec2A& x, const Vec2A& y) {
  auto kx = lax_full_key(x), ky = lax_full_key(y);
  if (ky < kx) std::swap(kx, ky);
  return {kx[0], kx[1], kx[2], kx[3], ky[0], ky[1], ky[2], ky[3]};
}

namespace {

EdgeKeyG edge_key_g(const Vec2A& x, const Vec2A& y, const Vec2A& z) {
  std::array<std::array<long long, 4>, 3> ks = {lax_full_key(x), lax_full_key(y),
                                                lax_full_key(z)};
  std::sort(ks.begin(), ks.end());
  EdgeKeyG out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = ks[i][j];
  return out;
}

}  // namespace

OceanGraphG ocean_graph_g(const HermitianForm& f, int radius) {
  OceanGraphG g;
  g.f = f;
  auto [su, sv] = find_ocean_cell(f);

  std::deque<std::pair<CellKeyG, int>> queue;
  auto push_cell = [&](const Vec2A& x, const Vec2A& y, int depth) {
    long long fx = heval(f, x), fy = heval(f, y);
    if ((fx > 0) == (fy > 0)) return;
    CellKeyG key = cell_key_g(x, y);
    if (g.cells.count(key)) return;
    OceanCellG cell;
    cell.x = x;
    cell.y = y;
    cell.fx = fx;
    cell.fy = fy;
    cell.depth = depth;
    g.cells.emplace(key, cell);
    queue.push_back({key, depth});
  };
  push_cell(su, sv, 0);

  while (!queue.empty()) {
    auto [key, depth] = queue.front();
    queue.pop_front();
    OceanCellG& cell = g.cells.at(key);
    const Vec2A x = cell.x, y = cell.y;
    // corners: (x + i^k y, x + i^{k+1} y), k = 1..4, in cyclic order
    for (int k = 1; k <= 4; ++k) {
      GVertex vert{x + i_pow(k) * y, x + i_pow(k + 1) * y};
      VertexKeyG vk = gvertex_key(vert);
      cell.corners[k - 1] = vk;
      auto it = g.vertices.find(vk);
      if (it == g.vertices.end()) {
        OceanVertexG ov;
        ov.v = vert;
        ov.pairs = glabels(f, vert);
        ov.inv = inv_g(f, vert);
        it = g.vertices.emplace(vk, ov).first;
      }
      it->second.incident_ocean_cells += 1;
    }
    // edges {x, y, x + i^k y} and their other two cells
    for (int k = 1; k <= 4; ++k) {
      Vec2A w = x + i_pow(k) * y;
      long long fw = heval(f, w);
      EdgeKeyG ek = edge_key_g(x, y, w);
      if (!g.edges.count(ek))
        g.edges.emplace(ek, OceanEdgeG{{x, y, w}, cell.fx + cell.fy + fw});
      if (depth < radius) {
        push_cell(x, w, depth + 1);
        push_cell(y, w, depth + 1);
      }
    }
  }
  return g;
}

namespace {

bool is_opposite_slot(int i, int j) {
  return (i == 0 && j == 1) || (i == 1 && j == 0) || (i == 2 && j == 4) ||
         (i == 4 && j == 2) || (i == 3 && j == 5) || (i == 5 && j == 3);
}

std::vector<Mat2A> gvertex_maps(const HermitianForm& f, const OceanVertexG& from,
                                const OceanVertexG& to, bool all_maps) {
  std::vector<Mat2A> found;
  auto fv = vertex_vectors(from.v);
  auto tv = vertex_vectors(to.v);
  // pin g by a non-opposite pair (a lax basis, so invertible over A)
  Mat2A m0i = gl2_inverse(Mat2A::from_columns(fv[0], fv[2]));
  long long f0 = heval(f, fv[0]), f2 = heval(f, fv[2]);
  std::array<long long, 6> tval;
  for (int i = 0; i < 6; ++i) tval[i] = heval(f, tv[i]);
  VertexKeyG tokey = gvertex_key(to.v);
  auto us = units(Disc(D4));
  for (int i = 0; i < 6; ++i) {
    if (tval[i] != f0) continue;
    for (int j = 0; j < 6; ++j) {
      if (j == i || is_opposite_slot(i, j) || tval[j] != f2) continue;
      for (const RingElem& u1 : us) {
        for (const RingElem& u2 : us) {
          Mat2A g = Mat2A::from_columns(u1 * tv[i], u2 * tv[j]) * m0i;
          if (!g.in_gl2()) continue;
          if (!(transform(f, g) == f)) continue;
          GVertex img{g * from.v.r, g * from.v.s};
          if (norm(det(img.r, img.s)) != 2) continue;
          if (!(gvertex_key(img) == tokey)) continue;
          found.push_back(g);
          if (!all_maps) return found;
        }
      }
    }
  }
  return found;
}

bool is_scalar_mat(const Mat2A& m) {
  return m.q.is_zero() && m.r.is_zero() && m.p == m.s;
}

// order of g modulo scalar units (small orders only)
int order_mod_units(const Mat2A& g, int cap = 12) {
  Mat2A p = g;
  for (int n = 1; n <= cap; ++n) {
    if (is_scalar_mat(p)) return n;
    p = p * g;
  }
  return 0;
}

}  // namespace

UfResultG uf_generators_g(const HermitianForm& f, int radius) {
  OceanGraphG g = ocean_graph_g(f, radius);
  UfResultG res;

  auto add_gen = [&](const Mat2A& m) {
    Mat2A cg = mat_mod_units(m);
    if (is_scalar_mat(cg)) return;
    for (const Mat2A& e : res.generators)
      if (e == cg) return;
    res.generators.push_back(cg);
  };

  std::map<std::array<long long, 6>, std::vector<const OceanVertexG*>> groups;
  for (auto& [key, v] : g.vertices) {
    PairLabels cp = canonical_pairs(v.pairs);
    std::array<long long, 6> flat{cp[0][0], cp[0][1], cp[1][0], cp[1][1], cp[2][0], cp[2][1]};
    groups[flat].push_back(&v);
  }

  for (auto& [flat, vs] : groups) {
    std::vector<const OceanVertexG*> refs;
    for (const OceanVertexG* v : vs) {
      bool placed = false;
      for (const OceanVertexG* r : refs) {
        auto maps = gvertex_maps(f, *r, *v, false);
        if (!maps.empty()) {
          placed = true;
          add_gen(maps[0]);
          break;
        }
      }
      if (!placed) refs.push_back(v);
    }
    for (const OceanVertexG* r : refs) {
      auto stab = gvertex_maps(f, *r, *r, true);
      std::vector<Mat2A> distinct;
      for (const Mat2A& s : stab) {
        Mat2A cs = mat_mod_units(s);
        bool known = false;
        for (const Mat2A& e : distinct) known = known || (e == cs);
        if (known) continue;
        distinct.push_back(cs);
        add_gen(cs);
      }
      bool cyclic = false;
      for (const Mat2A& s : distinct)
        cyclic = cyclic || (order_mod_units(s) == static_cast<int>(distinct.size()));
      VertexOrbitInfoG info;
      info.inv = r->inv;
      info.pairs = canonical_pairs(r->pairs);
      info.stabilizer_order = static_cast<int>(distinct.size());
      info.stabilizer_cyclic = cyclic || distinct.size() == 1;
      res.vertex_orbits.push_back(info);
    }
  }

  {
    std::map<CellKeyG, CellKeyG> parent;
    for (auto& [k, c] : g.cells) parent[k] = k;
    std::function<CellKeyG(CellKeyG)> find = [&](CellKeyG k) {
      while (!(parent[k] == k)) k = parent[k] = parent[parent[k]];
      return k;
    };
    for (auto& [k, c] : g.cells) {
      for (const Mat2A& m : res.generators) {
        for (const Mat2A& mm : {m, gl2_inverse(m)}) {
          CellKeyG img = cell_key_g(mm * c.x, mm * c.y);
          if (!g.cells.count(img)) continue;
          CellKeyG a = find(k), b = find(img);
          if (!(a == b)) parent[a] = b;
        }
      }
    }
    std::set<CellKeyG> roots;
    for (auto& [k, c] : g.cells) roots.insert(find(k));
    res.cell_orbits = static_cast<int>(roots.size());
  }
  {
    std::map<EdgeKeyG, EdgeKeyG> parent;
    for (auto& [k, e] : g.edges) parent[k] = k;
    std::function<EdgeKeyG(EdgeKeyG)> find = [&](EdgeKeyG k) {
      while (!(parent[k] == k)) k = parent[k] = parent[parent[k]];
      return k;
    };
    for (auto& [k, e] : g.edges) {
      res.edge_inv_values.insert(e.inv_e);
      for (const Mat2A& m : res.generators) {
        for (const Mat2A& mm : {m, gl2_inverse(m)}) {
          EdgeKeyG img = edge_key_g(mm * e.vecs[0], mm * e.vecs[1], mm * e.vecs[2]);
          if (!g.edges.count(img)) continue;
          EdgeKeyG a = find(k), b = find(img);
          if (!(a == b)) parent[a] = b;
        }
      }
    }
    std::set<EdgeKeyG> roots;
    for (auto& [k, e] : g.edges) roots.insert(find(k));
    res.edge_orbits = static_cast<int>(roots.size());
  }

  if (res.cell_orbits == 1 && res.vertex_orbits.size() == 3) {
    bool all_cyclic = true;
    std::vector<int> exps;
    for (const auto& vo : res.vertex_orbits) {
      all_cyclic = all_cyclic && vo.stabilizer_cyclic && vo.stabilizer_order >= 2;
      exps.push_back(vo.stabilizer_order);
    }
    if (all_cyclic) {
      std::sort(exps.begin(), exps.end());
      res.presentation_exponents = exps;
      res.presentation = "< r, s, t | t^" + std::to_string(exps[0]) + " = r^" +
                         std::to_string(exps[1]) + " = s^" + std::to_string(exps[2]) +
                         " = r s t = 1 >";
    }
  }
  return res;
}

HermitianForm form_from_edge_data(long long a, long long b, long long c, long long z) {
  // f(u) = a, f(v) = b fix the diagonal; tr(nu) = c-a-b and the corner
  // invariant pin the numerator.
  long long ny = c - a - b;
  long long nx = 3 * c - a - b - z;
  return HermitianForm(a, b, DualElem(RingElem(nx, ny, D4)));
}

std::array<long long, 6> canonical_pairs_oriented(const PairLabels& p) {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const int sign3[6] = {1, -1, -1, 1, 1, -1};
  std::array<long long, 6> best{};
  bool have = false;
  for (int pi = 0; pi < 6; ++pi) {
    for (int flips = 0; flips < 8; ++flips) {
      int fsign = 1;
      for (int k = 0; k < 3; ++k)
        if (flips & (1 << k)) fsign = -fsign;
      if (sign3[pi] * fsign != 1) continue;  // rotations only
      std::array<long long, 6> cand;
      for (int k = 0; k < 3; ++k) {
        const auto& pr = p[perms[pi][k]];
        bool fl = flips & (1 << perms[pi][k]);
        cand[2 * k] = fl ? pr[1] : pr[0];
        cand[2 * k + 1] = fl ? pr[0] : pr[1];
      }
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  return best;
}

std::vector<std::pair<Vec2A, Vec2A>> vertex_edges(const GVertex& v) {
  auto vecs = vertex_vectors(v);
  // triples picking one face per opposite pair; each is a lax superbasis
  const int pair_idx[3][2] = {{0, 1}, {2, 4}, {3, 5}};
  auto us = units(Disc(D4));
  std::vector<std::pair<Vec2A, Vec2A>> out;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2) {
        std::array<Vec2A, 3> tri = {vecs[pair_idx[0][c0]], vecs[pair_idx[1][c1]],
                                    vecs[pair_idx[2][c2]]};
        // present the triple as {u, v, u+v}
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i)
          for (int j = 0; j < 3 && !found; ++j) {
            if (j == i) continue;
            int k = 3 - i - j;
            for (const RingElem& e : us) {
              Vec2A cand = tri[i] + e * tri[j];
              if (lax_canonical(cand) == lax_canonical(tri[k])) {
                out.push_back({tri[i], e * tri[j]});
                found = true;
                break;
              }
            }
          }
        if (!found) throw std::logic_error("vertex_edges: triple is not a superbasis");
      }
  return out;
}

GVertex other_vertex_of_edge(const Vec2A& u, const Vec2A& v, const GVertex& current) {
  RingElem i = gauss_i();
  GVertex v1{u + v, u + i * v};
  GVertex v2{u + v, u - i * v};
  VertexKeyG cur = gvertex_key(current);
  if (!(gvertex_key(v1) == cur)) {
    if (!(gvertex_key(v2) == cur))
      throw std::logic_error("other_vertex_of_edge: edge not incident to vertex");
    return v1;
  }
  return v2;
}

GMinVertex find_min_vertex_g(const HermitianForm& f) {
  if (f.d() != D4) throw std::invalid_argument("find_min_vertex_g: discriminant must be -4");
  long long delta = hdisc(f);
  if (delta >= 0 || f.a <= 0)
    throw std::domain_error("find_min_vertex_g: form is not positive definite");
  Disc d(D4);
  Vec2A e1(ring_one(d), ring_zero(d)), e2(ring_zero(d), ring_one(d));
  GVertex cur{e1 + e2, e1 + gauss_i() * e2};
  long long z = inv_g(f, cur);
  long long steps = 0;
  for (;;) {
    for (const Vec2A& w : vertex_vectors(cur))
      if (heval(f, w) <= 0)
        throw std::domain_error("find_min_vertex_g: form is not positive definite");
    GVertex best = cur;
    long long bestz = z;
    VertexKeyG bestkey{};
    bool moved = false;
    for (auto& [u, v] : vertex_edges(cur)) {
      GVertex nb = other_vertex_of_edge(u, v, cur);
      long long nz = inv_g(f, nb);
      VertexKeyG nk = gvertex_key(nb);
      if (nz < bestz || (moved && nz == bestz && nk < bestkey)) {
        best = nb;
        bestz = nz;
        bestkey = nk;
        moved = true;
      }
    }
    if (!moved) break;
    cur = best;
    z = bestz;
    if (++steps > step_limit())
      throw std::domain_error("find_min_vertex_g: step limit exceeded");
  }

  GMinVertex res{cur, z, {}};
  // collect the connected component of equal-inv vertices
  std::map<VertexKeyG, GVertex> seen;
  seen.emplace(gvertex_key(cur), cur);
  std::deque<GVertex> queue{cur};
  while (!queue.empty() && seen.size() < 64) {
    GVertex c = queue.front();
    queue.pop_front();
    for (auto& [u, v] : vertex_edges(c)) {
      GVertex nb = other_vertex_of_edge(u, v, c);
      if (inv_g(f, nb) != z) continue;
      VertexKeyG key = gvertex_key(nb);
      if (seen.count(key)) continue;
      seen.emplace(key, nb);
      queue.push_back(nb);
    }
  }
  VertexKeyG curkey = gvertex_key(cur);
  for (auto& [key, v] : seen)
    if (!(key == curkey)) res.co_minimal.push_back(v);
  return res;
}

OceanSummaryG ocean_summary_g(const HermitianForm& f) {
  OceanSummaryG out;
  std::set<std::array<long long, 6>> prev;
  long long minabs = -1;
  for (int radius = 2; radius <= 6; ++radius) {
    OceanGraphG g = ocean_graph_g(f, radius);
    std::set<std::array<long long, 6>> cur;
    for (auto& [k, v] : g.vertices) {
      cur.insert(canonical_pairs_oriented(v.pairs));
      for (const auto& pr : v.pairs)
        for (long long val : pr) {
          long long a = std::llabs(val);
          if (minabs < 0 || a < minabs) minabs = a;
        }
    }
    out.key = *cur.begin();
    if (radius > 2 && cur == prev) break;
    prev = cur;
    if (g.cells.size() > 4000) break;
  }
  out.min_abs = minabs;
  return out;
}

namespace {

std::vector<HermitianForm> classify_candidates_g(long long delta) {
  std::vector<HermitianForm> cands;
  if (delta > 0) {
    // ocean corner data (a, b, c, z): cell values a < 0 < b with
    // 4|a|b <= Delta; |c| and |z - c| bounded the same way
    long long q = delta / 4;
    for (long long a = -1; -a <= q; --a)
      for (long long b = 1; -a * b <= q; ++b)
        for (long long c = -q; c <= q; ++c)
          for (long long z = c - q; z <= c + q; ++z) {
            if (disc_from_edge(a, b, c, z) != delta) continue;
            HermitianForm f = form_from_edge_data(a, b, c, z);
            if (content(f) != 1) continue;
            if (!is_anisotropic(f)) continue;
            cands.push_back(f);
          }
  } else {
    // definite: some vertex datum with all six values positive and a
    // conservative invariant bound; validated against direct reduction
    long long zmax = 2 * (-delta) + 4;
    for (long long z = 2; z <= zmax; ++z)
      for (long long a = 1; a < z; ++a)
        for (long long b = a; b < z; ++b) {
          // solve 2c(c - z) = delta - 2a(a-z) - 2b(b-z) - z^2 for c
          long long rhs = delta - 2 * a * (a - z) - 2 * b * (b - z) - z * z;
          // 2c^2 - 2zc - rhs = 0
          long long disc = z * z + 2 * rhs;
          if (disc < 0) continue;
          long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
          for (long long rr = std::max(0LL, r - 2); rr <= r + 2; ++rr) {
            if (rr * rr != disc) continue;
            for (long long c : {(z + rr) / 2, (z - rr) / 2}) {
              if (c < 1 || c >= z) continue;
              if (2 * c * (c - z) != rhs) continue;
              HermitianForm f = form_from_edge_data(a, b, c, z);
              if (hdisc(f) != delta || content(f) != 1) continue;
              if (f.a <= 0) continue;
              cands.push_back(f);
            }
            break;
          }
        }
  }
  return cands;
}

}  // namespace

std::vector<ClassG> classify_disc_g(long long delta, int jobs) {
  if (delta == 0) throw std::domain_error("classify_disc_g: zero discriminant");
  std::vector<HermitianForm> cands = classify_candidates_g(delta);

  auto summarize = [delta](const HermitianForm& f) -> ClassG {
    if (delta > 0) {
      OceanSummaryG o = ocean_summary_g(f);
      return ClassG{o.key, f, o.min_abs};
    }
    GMinVertex m = find_min_vertex_g(f);
    std::array<long long, 6> key = canonical_pairs_oriented(glabels(f, m.v));
    long long mn = -1;
    auto upd = [&](const GVertex& v) {
      for (const Vec2A& w : vertex_vectors(v)) {
        long long val = heval(f, w);
        if (mn < 0 || val < mn) mn = val;
      }
      auto k = canonical_pairs_oriented(glabels(f, v));
      if (k < key) key = k;
    };
    upd(m.v);
    for (const GVertex& v : m.co_minimal) upd(v);
    return ClassG{key, f, mn};
  };

  std::vector<ClassG> summaries(cands.size());
  if (jobs > 1 && cands.size() > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> futs;
    for (int j = 0; j < jobs; ++j) {
      futs.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= cands.size()) return;
          summaries[i] = summarize(cands[i]);
        }
      }));
    }
    for (auto& fu : futs) fu.get();
  } else {
    for (size_t i = 0; i < cands.size(); ++i) summaries[i] = summarize(cands[i]);
  }

  std::map<std::array<long long, 6>, ClassG> classes;
  for (const ClassG& s : summaries) {
    auto it = classes.find(s.key);
    if (it == classes.end()) {
      classes.emplace(s.key, s);
    } else {
      auto repkey = [](const HermitianForm& ff) {
        return std::make_tuple(ff.a, ff.c, ff.nu.num.x, ff.nu.num.y);
      };
      if (repkey(s.rep) < repkey(it->second.rep)) it->second = s;
    }
  }
  std::vector<ClassG> out;
  out.reserve(classes.size());
  for (auto& [k, c] : classes) out.push_back(c);
  return out;
}

}  // namespace hermtop
