#include "hermtop/eisenstein.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <future>
#include <stdexcept>

namespace hermtop {

long long step_limit() {
  static long long lim = [] {
    if (const char* s = std::getenv("HERMTOP_STEP_LIMIT")) {
      long long v = std::atoll(s);
      if (v > 0) return v;
    }
    return 1000000LL;
  }();
  return lim;
}

namespace {

const long long D3 = -3;

RingElem rho() { return RingElem(2, 1, D3); }

RingElem rho_pow(int k) {
  static const std::array<RingElem, 6> pows = {
      ring_one(Disc(D3)),   RingElem(2, 1, D3),   RingElem(1, 1, D3),
      RingElem(-1, 0, D3),  RingElem(-2, -1, D3), RingElem(-1, -1, D3)};
  return pows[((k % 6) + 6) % 6];
}

std::array<long long, 4> lax_full_key(const Vec2A& v) { return vec_key(lax_canonical(v)); }

}  // namespace

UltraBasis standard_ultra_basis() {
  Disc d(D3);
  return UltraBasis{Vec2A(ring_one(d), ring_zero(d)), Vec2A(ring_zero(d), ring_one(d))};
}

GreekLabel greeks(const VertexLabelE& l) {
  return GreekLabel{l.b + l.c + l.d - 2 * l.a, l.a + l.c + l.d - 2 * l.b,
                    l.a + l.b + l.d - 2 * l.c, l.a + l.b + l.c - 2 * l.d};
}

long long disc_e(const VertexLabelE& l) {
  __int128 s = static_cast<__int128>(l.a) * l.a + static_cast<__int128>(l.b) * l.b +
               static_cast<__int128>(l.c) * l.c + static_cast<__int128>(l.d) * l.d -
               static_cast<__int128>(l.a) * l.b - static_cast<__int128>(l.a) * l.c -
               static_cast<__int128>(l.a) * l.d - static_cast<__int128>(l.b) * l.c -
               static_cast<__int128>(l.b) * l.d - static_cast<__int128>(l.c) * l.d;
  return checked_ll(s, "disc_e");
}

std::array<Vec2A, 4> ultra_vectors(const UltraBasis& ub) {
  return {ub.u, ub.v, ub.u + ub.v, ub.u + rho() * ub.v};
}

VertexKeyE vertex_key(const UltraBasis& ub) {
  auto vecs = ultra_vectors(ub);
  std::array<std::array<long long, 4>, 4> keys;
  for (int i = 0; i < 4; ++i) keys[i] = lax_full_key(vecs[i]);
  std::sort(keys.begin(), keys.end());
  VertexKeyE out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = keys[i][j];
  return out;
}

VertexLabelE labels_of(const HermitianForm& f, const UltraBasis& ub) {
  auto vecs = ultra_vectors(ub);
  return VertexLabelE{heval(f, vecs[0]), heval(f, vecs[1]), heval(f, vecs[2]),
                      heval(f, vecs[3])};
}

long long eval_at_vertex(const VertexLabelE& lbl, const UltraBasis& ub, const Vec2A& w) {
  Mat2A m = Mat2A::from_columns(ub.u, ub.v);
  if (!m.in_gl2()) throw std::domain_error("eval_at_vertex: not an ultrabasis");
  Vec2A xy = gl2_inverse(m) * w;
  GreekLabel g = greeks(lbl);
  RingElem x = xy.x, y = xy.y;
  __int128 three = static_cast<__int128>(g.beta) * norm(x) +
                   static_cast<__int128>(g.alpha) * norm(y) +
                   static_cast<__int128>(g.gamma) * norm(x - y) +
                   static_cast<__int128>(g.delta) * norm(rho() * x - y);
  if (three % 3 != 0) throw std::logic_error("eval_at_vertex: value not divisible by 3");
  return checked_ll(three / 3, "eval_at_vertex");
}

HermitianForm form_from_labels(const VertexLabelE& l) {
  // f(u) = a and f(v) = b give the diagonal; tr(nu) = c-a-b and
  // tr(conj(rho) nu) = d-a-b pin the numerator of nu.
  long long ny = l.c - l.a - l.b;
  long long nx = 2 * ny - (l.d - l.a - l.b);
  return HermitianForm(l.a, l.b, DualElem(RingElem(nx, ny, D3)));
}

ClimbResult climb(const VertexLabelE& l, const UltraBasis& ub, int k) {
  const RingElem r = rho();
  const RingElem r2 = rho_pow(2);
  const RingElem rbar = rho_pow(5);
  switch (k) {
    case 0:  // drop u
      return ClimbResult{UltraBasis{r2 * ub.v, ub.u + ub.v},
                         VertexLabelE{l.b, l.c, l.d, l.b + l.c + l.d - l.a}};
    case 1:  // drop v
      return ClimbResult{UltraBasis{r * ub.u, ub.v + rbar * ub.u},
                         VertexLabelE{l.a, l.d, l.c, l.a + l.c + l.d - l.b}};
    case 2:  // drop u+v
      return ClimbResult{UltraBasis{ub.u + r * ub.v, -ub.v},
                         VertexLabelE{l.d, l.b, l.a + l.b + l.d - l.c, l.a}};
    case 3:  // drop u+rho v
      return ClimbResult{UltraBasis{ub.v, ub.u},
                         VertexLabelE{l.b, l.a, l.c, l.a + l.b + l.c - l.d}};
  }
  throw std::invalid_argument("climb: slot out of range");
}

WellResult find_well(const HermitianForm& f) {
  if (f.d() != D3) throw std::invalid_argument("find_well: discriminant must be -3");
  UltraBasis ub = standard_ultra_basis();
  VertexLabelE lbl = labels_of(f, ub);
  long long steps = 0;
  for (;;) {
    auto t = lbl.tuple();
    for (long long v : t)
      if (v <= 0) throw std::domain_error("find_well: form is not positive definite");
    auto gt = greeks(lbl).tuple();
    int best = -1;
    auto vecs = ultra_vectors(ub);
    for (int k = 0; k < 4; ++k) {
      if (gt[k] >= 0) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      long long ek = inv_vertex(lbl) - 2 * t[k];
      long long eb = inv_vertex(lbl) - 2 * t[best];
      if (gt[k] < gt[best] ||
          (gt[k] == gt[best] &&
           (ek < eb || (ek == eb && lax_full_key(vecs[k]) < lax_full_key(vecs[best])))))
        best = k;
    }
    if (best < 0) break;  // all greeks >= 0: a well
    auto next = climb(lbl, ub, best);
    ub = next.ub;
    lbl = next.lbl;
    if (++steps > step_limit()) throw std::domain_error("find_well: step limit exceeded");
  }

  WellResult res{ub, lbl, {}};
  // zero greeks mean adjacent vertices of equal (minimal) inv: report them
  std::map<VertexKeyE, ClimbResult> seen;
  seen.emplace(vertex_key(ub), ClimbResult{ub, lbl});
  std::deque<ClimbResult> queue{{ub, lbl}};
  while (!queue.empty() && seen.size() < 64) {
    ClimbResult cur = queue.front();
    queue.pop_front();
    auto gt = greeks(cur.lbl).tuple();
    for (int k = 0; k < 4; ++k) {
      if (gt[k] != 0) continue;
      ClimbResult nb = climb(cur.lbl, cur.ub, k);
      auto key = vertex_key(nb.ub);
      if (seen.count(key)) continue;
      seen.emplace(key, nb);
      queue.push_back(nb);
    }
  }
  VertexKeyE wellkey = vertex_key(res.ub);
  for (auto& [key, cr] : seen) {
    if (key == wellkey) continue;
    res.co_wells.push_back(cr);
  }
  return res;
}

ClimbResult find_ocean_vertex(const HermitianForm& f) {
  if (f.d() != D3)
    throw std::invalid_argument("find_ocean_vertex: discriminant must be -3");
  long long delta = hdisc(f);
  if (delta <= 0) throw std::domain_error("find_ocean_vertex: form is not indefinite");
  if (!is_anisotropic(f)) throw std::domain_error("find_ocean_vertex: form is isotropic");

  UltraBasis ub = standard_ultra_basis();
  VertexLabelE lbl = labels_of(f, ub);
  long long steps = 0;
  auto sign_count = [](const VertexLabelE& l) {
    int pos = 0, neg = 0;
    for (long long v : l.tuple()) {
      if (v > 0) ++pos;
      if (v < 0) ++neg;
      if (v == 0) throw std::domain_error("find_ocean_vertex: form represents 0");
    }
    return std::make_pair(pos, neg);
  };
  for (;;) {
    auto [pos, neg] = sign_count(lbl);
    if (pos == 2 && neg == 2) break;
    auto t = lbl.tuple();
    auto vecs = ultra_vectors(ub);
    int best = -1;
    if (pos == 4 || neg == 4) {
      // steepest descent on inv (on -inv when all values are negative)
      auto gt = greeks(lbl).tuple();
      int sgn = (pos == 4) ? 1 : -1;
      for (int k = 0; k < 4; ++k) {
        if (sgn * gt[k] >= 0) continue;
        if (best < 0 || sgn * gt[k] < sgn * gt[best] ||
            (gt[k] == gt[best] && lax_full_key(vecs[k]) < lax_full_key(vecs[best])))
          best = k;
      }
      if (best < 0)
        throw std::logic_error("find_ocean_vertex: stuck at a well of an indefinite form");
    } else {
      // (3,1) or (1,3): drop the extreme value on the majority side; the
      // replacement is strictly closer to the minority sign
      int sgn = (pos == 3) ? 1 : -1;
      for (int k = 0; k < 4; ++k) {
        if (sgn * t[k] <= 0) continue;
        if (best < 0 || sgn * t[k] > sgn * t[best] ||
            (t[k] == t[best] && lax_full_key(vecs[k]) < lax_full_key(vecs[best])))
          best = k;
      }
    }
    auto next = climb(lbl, ub, best);
    ub = next.ub;
    lbl = next.lbl;
    if (++steps > step_limit())
      throw std::domain_error("find_ocean_vertex: step limit exceeded");
  }
  return ClimbResult{ub, lbl};
}

CellKeyE cell_key(const Vec2A& x, const Vec2A& y) {
  auto kx = lax_full_key(x), ky = lax_full_key(y);
  if (ky < kx) std::swap(kx, ky);
  return {kx[0], kx[1], kx[2], kx[3], ky[0], ky[1], ky[2], ky[3]};
}

namespace {

EdgeKeyE edge_key(const Vec2A& x, const Vec2A& y, const Vec2A& z) {
  std::array<std::array<long long, 4>, 3> ks = {lax_full_key(x), lax_full_key(y),
                                                lax_full_key(z)};
  std::sort(ks.begin(), ks.end());
  EdgeKeyE out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = ks[i][j];
  return out;
}

}  // namespace

OceanGraphE ocean_graph_e(const HermitianForm& f, int radius) {
  OceanGraphE g;
  g.f = f;
  ClimbResult seed = find_ocean_vertex(f);

  std::deque<std::pair<OceanCellE, int>> queue;
  auto push_cell = [&](const Vec2A& x, const Vec2A& y, int depth) {
    long long fx = heval(f, x), fy = heval(f, y);
    if ((fx > 0) == (fy > 0)) return;  // not an ocean cell
    CellKeyE key = cell_key(x, y);
    if (g.cells.count(key)) return;
    OceanCellE cell{x, y, fx, fy, depth};
    g.cells.emplace(key, cell);
    queue.push_back({cell, depth});
  };

  {
    auto vecs = ultra_vectors(seed.ub);
    auto t = seed.lbl.tuple();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if ((t[i] > 0) != (t[j] > 0)) push_cell(vecs[i], vecs[j], 0);
  }

  while (!queue.empty()) {
    auto [cell, depth] = queue.front();
    queue.pop_front();
    const Vec2A x = cell.x, y = cell.y;
    // hexagon vertices, presented by (x, rho^i y)
    for (int i = 0; i < 6; ++i) {
      UltraBasis ub{x, rho_pow(i) * y};
      VertexKeyE vk = vertex_key(ub);
      auto it = g.vertices.find(vk);
      if (it == g.vertices.end())
        it = g.vertices.emplace(vk, OceanVertexE{ub, labels_of(f, ub), 0}).first;
      it->second.incident_ocean_cells += 1;
    }
    // edges {x, y, x + rho^i y} and the two other cells along each
    for (int i = 1; i <= 6; ++i) {
      Vec2A w = x + rho_pow(i) * y;
      long long fw = heval(f, w);
      EdgeKeyE ek = edge_key(x, y, w);
      if (!g.edges.count(ek))
        g.edges.emplace(ek, OceanEdgeE{{x, y, w}, cell.fx + cell.fy + fw});
      if (depth < radius) {
        push_cell(x, w, depth + 1);
        push_cell(y, w, depth + 1);
      }
    }
  }
  return g;
}

std::array<long long, 4> canonical_tuple_a4(const std::array<long long, 4>& t) {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p{0, 1, 2, 3};
    std::sort(p.begin(), p.end());
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (p[i] > p[j]) ++inv;
      if (inv % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  std::array<long long, 4> best = t;
  for (const auto& p : perms) {
    std::array<long long, 4> cand{t[p[0]], t[p[1]], t[p[2]], t[p[3]]};
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

// g in U(f) carrying `from` to `to` is pinned by the images of two lax
// vectors with matching values; the full form equality check settles it.
std::vector<Mat2A> vertex_maps(const HermitianForm& f, const OceanVertexE& from,
                               const OceanVertexE& to, bool all_maps) {
  std::vector<Mat2A> found;
  auto fv = ultra_vectors(from.ub);
  auto tv = ultra_vectors(to.ub);
  auto flbl = from.lbl.tuple();
  auto tlbl = to.lbl.tuple();
  Mat2A m0i = gl2_inverse(Mat2A::from_columns(fv[0], fv[1]));
  VertexKeyE tokey = vertex_key(to.ub);
  auto us = units(Disc(D3));
  for (int i = 0; i < 4; ++i) {
    if (tlbl[i] != flbl[0]) continue;
    for (int j = 0; j < 4; ++j) {
      if (j == i || tlbl[j] != flbl[1]) continue;
      for (const RingElem& u1 : us) {
        for (const RingElem& u2 : us) {
          Mat2A g = Mat2A::from_columns(u1 * tv[i], u2 * tv[j]) * m0i;
          if (!g.in_gl2()) continue;
          if (!(transform(f, g) == f)) continue;
          UltraBasis img{g * from.ub.u, g * from.ub.v};
          if (!(vertex_key(img) == tokey)) continue;
          found.push_back(g);
          if (!all_maps) return found;
        }
      }
    }
  }
  return found;
}

bool is_scalar(const Mat2A& m) {
  return m.q.is_zero() && m.r.is_zero() && m.p == m.s;
}

}  // namespace

UfResult uf_generators_e(const HermitianForm& f, int radius) {
  OceanGraphE g = ocean_graph_e(f, radius);
  UfResult res;

  std::map<std::array<long long, 4>, std::vector<const OceanVertexE*>> groups;
  for (auto& [key, v] : g.vertices) {
    auto t = v.lbl.tuple();
    std::sort(t.begin(), t.end());
    groups[t].push_back(&v);
  }

  auto add_gen = [&](const Mat2A& m) {
    Mat2A cg = mat_mod_units(m);
    if (is_scalar(cg)) return;
    for (const Mat2A& e : res.generators)
      if (e == cg) return;
    res.generators.push_back(cg);
  };

  for (auto& [t, vs] : groups) {
    std::vector<const OceanVertexE*> refs;
    for (const OceanVertexE* v : vs) {
      bool placed = false;
      for (const OceanVertexE* r : refs) {
        auto maps = vertex_maps(f, *r, *v, false);
        if (!maps.empty()) {
          placed = true;
          add_gen(maps[0]);
          break;
        }
      }
      if (!placed) refs.push_back(v);
    }
    for (const OceanVertexE* r : refs) {
      res.vertex_orbit_inv.push_back(inv_vertex(r->lbl));
      auto stab = vertex_maps(f, *r, *r, true);
      std::vector<Mat2A> distinct;
      for (const Mat2A& s : stab) {
        Mat2A cs = mat_mod_units(s);
        bool known = false;
        for (const Mat2A& e : distinct) known = known || (e == cs);
        if (known) continue;
        distinct.push_back(cs);
        add_gen(cs);
      }
      res.vertex_stabilizer_orders.push_back(static_cast<int>(distinct.size()));
      res.vertex_orbits += 1;
    }
  }

  // edge and cell orbit counts under the group generated by the found maps
  {
    std::map<CellKeyE, CellKeyE> parent;
    for (auto& [k, c] : g.cells) parent[k] = k;
    std::function<CellKeyE(CellKeyE)> find = [&](CellKeyE k) {
      while (!(parent[k] == k)) k = parent[k] = parent[parent[k]];
      return k;
    };
    for (auto& [k, c] : g.cells) {
      for (const Mat2A& m : res.generators) {
        for (const Mat2A& mm : {m, gl2_inverse(m)}) {
          CellKeyE img = cell_key(mm * c.x, mm * c.y);
          if (!g.cells.count(img)) continue;
          CellKeyE a = find(k), b = find(img);
          if (!(a == b)) parent[a] = b;
        }
      }
    }
    std::set<CellKeyE> roots;
    for (auto& [k, c] : g.cells) roots.insert(find(k));
    res.cell_orbits = static_cast<int>(roots.size());
  }
  {
    std::map<EdgeKeyE, EdgeKeyE> parent;
    for (auto& [k, e] : g.edges) parent[k] = k;
    std::function<EdgeKeyE(EdgeKeyE)> find = [&](EdgeKeyE k) {
      while (!(parent[k] == k)) k = parent[k] = parent[parent[k]];
      return k;
    };
    for (auto& [k, e] : g.edges) {
      for (const Mat2A& m : res.generators) {
        for (const Mat2A& mm : {m, gl2_inverse(m)}) {
          EdgeKeyE img = edge_key(mm * e.vecs[0], mm * e.vecs[1], mm * e.vecs[2]);
          if (!g.edges.count(img)) continue;
          EdgeKeyE a = find(k), b = find(img);
          if (!(a == b)) parent[a] = b;
        }
      }
    }
    std::set<EdgeKeyE> roots;
    for (auto& [k, e] : g.edges) roots.insert(find(k));
    res.edge_orbits = static_cast<int>(roots.size());
  }

  if (res.cell_orbits == 1 && !res.vertex_stabilizer_orders.empty()) {
    std::vector<int> exps = res.vertex_stabilizer_orders;
    std::sort(exps.begin(), exps.end());
    res.presentation_exponents = exps;
  }
  return res;
}

OceanSummary ocean_summary(const HermitianForm& f) {
  OceanSummary out;
  std::set<std::array<long long, 4>> prev;
  long long minabs = -1;
  for (int radius = 2; radius <= 6; ++radius) {
    OceanGraphE g = ocean_graph_e(f, radius);
    std::set<std::array<long long, 4>> cur;
    for (auto& [k, v] : g.vertices) {
      auto t = v.lbl.tuple();
      int pos = 0;
      for (long long val : t) pos += (val > 0);
      for (long long val : t) {
        long long a = std::llabs(val);
        if (minabs < 0 || a < minabs) minabs = a;
      }
      if (pos == 2) cur.insert(canonical_tuple_a4(t));
    }
    out.labels22 = cur;
    if (radius > 2 && cur == prev) break;
    prev = cur;
    if (g.cells.size() > 4000) break;
  }
  out.min_abs = minabs;
  out.key = *out.labels22.begin();
  return out;
}

namespace {

struct WellSummary {
  std::array<long long, 4> key{};
  long long min_abs = 0;
};

WellSummary well_summary(const HermitianForm& f) {
  WellResult w = find_well(f);
  WellSummary out;
  out.key = canonical_tuple_a4(w.lbl.tuple());
  long long m = w.lbl.a;
  for (long long v : w.lbl.tuple()) m = std::min(m, v);
  out.min_abs = m;
  for (auto& cw : w.co_wells) {
    auto k = canonical_tuple_a4(cw.lbl.tuple());
    if (k < out.key) out.key = k;
  }
  return out;
}

std::vector<HermitianForm> classify_candidates(long long delta) {
  std::vector<HermitianForm> cands;
  if (delta < 0) {
    // wells: 1 <= a <= b <= c <= d ordered up to reslotting later,
    // (a+b+c+d) * min <= -2 Delta bounds everything
    long long bound = -2 * delta;
    std::array<long long, 4> t{};
    for (t[0] = 1; 4 * t[0] * t[0] <= bound; ++t[0])
      for (t[1] = t[0]; t[0] * (t[0] + 3 * t[1]) <= bound; ++t[1])
        for (t[2] = t[1]; t[0] * (t[0] + t[1] + 2 * t[2]) <= bound; ++t[2])
          for (t[3] = t[2]; t[0] * (t[0] + t[1] + t[2] + t[3]) <= bound; ++t[3]) {
            std::array<long long, 4> vals = t;
            // all slot placements: inequivalent arrangements can give
            // different classes, duplicates collapse via the class key
            std::sort(vals.begin(), vals.end());
            do {
              VertexLabelE l{vals[0], vals[1], vals[2], vals[3]};
              if (disc_e(l) != delta) continue;
              auto gr = greeks(l).tuple();
              bool well = true;
              for (long long x : gr) well = well && (x >= 0);
              if (!well) continue;
              HermitianForm f = form_from_labels(l);
              if (content(f) != 1) continue;
              cands.push_back(f);
            } while (std::next_permutation(vals.begin(), vals.end()));
          }
  } else {
    // ocean vertices: two positive and two negative labels with every
    // cross product bounded by Delta
    for (long long a = 1; a * a <= delta; ++a)
      for (long long b = a; a * b <= delta; ++b)
        for (long long cc = 1; a * cc <= delta && b * cc <= delta; ++cc)
          for (long long dd = cc; cc * dd <= delta && a * dd <= delta && b * dd <= delta;
               ++dd) {
            std::array<long long, 4> vals{a, b, -cc, -dd};
            std::sort(vals.begin(), vals.end());
            do {
              VertexLabelE l{vals[0], vals[1], vals[2], vals[3]};
              if (disc_e(l) != delta) continue;
              HermitianForm f = form_from_labels(l);
              if (content(f) != 1) continue;
              if (!is_anisotropic(f)) continue;
              cands.push_back(f);
            } while (std::next_permutation(vals.begin(), vals.end()));
          }
  }
  return cands;
}

}  // namespace

std::vector<ClassE> classify_disc_e(long long delta, int jobs) {
  if (delta == 0) throw std::domain_error("classify_disc_e: zero discriminant");
  std::vector<HermitianForm> cands = classify_candidates(delta);

  auto summarize = [delta](const HermitianForm& f) -> ClassE {
    if (delta < 0) {
      WellSummary w = well_summary(f);
      return ClassE{w.key, f, w.min_abs};
    }
    OceanSummary o = ocean_summary(f);
    return ClassE{o.key, f, o.min_abs};
  };

  std::vector<ClassE> summaries(cands.size());
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

  std::map<std::array<long long, 4>, ClassE> classes;
  for (const ClassE& s : summaries) {
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
  std::vector<ClassE> out;
  out.reserve(classes.size());
  for (auto& [k, c] : classes) out.push_back(c);
  return out;
}

}  // namespace hermtop
