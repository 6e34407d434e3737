#include "hermtop/spine_geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hermtop {

namespace {

std::vector<RingElem> elements_of_norm_up_to(Disc d, long long bound) {
  std::vector<RingElem> out;
  const long long D = d.value();
  long long ymax = static_cast<long long>(std::sqrt(4.0 * bound / -D)) + 1;
  for (long long y = -ymax; y <= ymax; ++y) {
    // N = (x + Dy/2)^2 - (D/4) y^2; centre of the x-range is -Dy/2
    double centre = -static_cast<double>(D) * y / 2.0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(bound))) + 2;
    long long x0 = static_cast<long long>(std::floor(centre)) - r;
    long long x1 = static_cast<long long>(std::ceil(centre)) + r;
    for (long long x = x0; x <= x1; ++x) {
      RingElem e(x, y, D);
      if (!e.is_zero() && norm(e) <= bound) out.push_back(e);
    }
  }
  return out;
}

ExactPolygon clip(const ExactPolygon& poly, const HalfPlane& hp) {
  ExactPolygon out;
  size_t n = poly.size();
  if (n == 0) return out;
  for (size_t i = 0; i < n; ++i) {
    const ExactPoint& P = poly[i];
    const ExactPoint& Q = poly[(i + 1) % n];
    Rat sp = hp.C - hp.A * P.p - hp.B * P.q;
    Rat sq = hp.C - hp.A * Q.p - hp.B * Q.q;
    if (sp >= 0) out.push_back(P);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      Rat t = sp / (sp - sq);
      out.push_back(ExactPoint{P.p + t * (Q.p - P.p), P.q + t * (Q.q - P.q)});
    }
  }
  // remove duplicates and collinear chain points
  ExactPolygon clean;
  for (const ExactPoint& p : out) {
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  }
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  bool changed = true;
  while (changed && clean.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < clean.size(); ++i) {
      const ExactPoint& A = clean[(i + clean.size() - 1) % clean.size()];
      const ExactPoint& B = clean[i];
      const ExactPoint& C = clean[(i + 1) % clean.size()];
      Rat cross = (B.p - A.p) * (C.q - B.q) - (B.q - A.q) * (C.p - B.p);
      if (cross == 0) {
        clean.erase(clean.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return clean;
}

HalfPlane normalize_hp(Rat A, Rat B, Rat C) { return HalfPlane{A, B, C}; }

std::array<long long, 3> line_key(long long A, long long B, long long C) {
  long long g = gcd_ll(gcd_ll(A, B), C);
  if (g > 1) {
    A /= g;
    B /= g;
    C /= g;
  }
  if (A < 0 || (A == 0 && B < 0)) {
    A = -A;
    B = -B;
    C = -C;
  }
  return {A, B, C};
}

ExactPolygon intersect_half_planes(const std::vector<HalfPlane>& hps, long long box) {
  ExactPolygon poly = {{Rat(-box), Rat(-box)}, {Rat(box), Rat(-box)},
                       {Rat(box), Rat(box)},   {Rat(-box), Rat(box)}};
  for (const HalfPlane& hp : hps) {
    poly = clip(poly, hp);
    if (poly.empty()) break;
  }
  return poly;
}

}  // namespace

HalfPlane CellLine::half_plane() const {
  const long long D = a.d;
  RingElem w = conj(a) * b;
  long long A = 2 * w.x + w.y * D;
  long long B = w.y * D;
  long long C = norm(a) + norm(b) - nI;
  if (C <= 0) throw std::logic_error("cell line: right side must be positive");
  return normalize_hp(Rat(A), Rat(B), Rat(C));
}

double cusp_distance(const Cusp& alpha, const Point3& w) {
  if (alpha.is_infinity()) return 1.0 / w.zeta;
  std::complex<double> a = embed(alpha.v.x) / embed(alpha.v.y);
  double c = static_cast<double>(norm(alpha.v.y)) / static_cast<double>(alpha.normN);
  return c * (std::norm(w.z - a) + w.zeta * w.zeta) / w.zeta;
}

Tangency horoballs_touch(const Cusp& alpha, const Cusp& beta) {
  RingElem delta = alpha.v.x * beta.v.y - alpha.v.y * beta.v.x;
  if (delta.is_zero()) throw std::invalid_argument("horoballs_touch: equal cusps");
  long long lhs = norm(delta);
  long long rhs = alpha.normN * beta.normN;
  if (lhs == rhs) return Tangency::touch;
  if (lhs > rhs) return Tangency::disjoint;
  throw std::logic_error("horoballs_touch: N(ad-bc) < N(I)N(J) is impossible");
}

ExactPolygon fundamental_cell(Disc d) {
  const long long Dabs = -d.value();
  long long nImax = static_cast<long long>(std::sqrt(Dabs / 3.0));
  std::set<std::array<long long, 3>> seen;
  std::vector<HalfPlane> hps;
  for (long long nI = 1; nI <= std::max(1LL, nImax); ++nI) {
    long long nb = nI * Dabs / 2;
    auto elems = elements_of_norm_up_to(d, nb);
    for (const RingElem& b : elems) {
      for (const RingElem& a : elems) {
        if (module_norm(a, b) != nI) continue;
        CellLine line{a, b, nI};
        HalfPlane hp = line.half_plane();
        long long A = static_cast<long long>(numerator(hp.A));
        long long B = static_cast<long long>(numerator(hp.B));
        long long C = static_cast<long long>(numerator(hp.C));
        if (seen.insert(line_key(A, B, C)).second) hps.push_back(hp);
      }
    }
  }
  return canonical_polygon(intersect_half_planes(hps, Dabs));
}

ExactPolygon voronoi_cell(Disc d) {
  const long long Dabs = -d.value();
  std::vector<HalfPlane> hps;
  std::set<std::array<long long, 3>> seen;
  for (const RingElem& a : elements_of_norm_up_to(d, 3 * Dabs)) {
    RingElem w = conj(a);
    long long A = 2 * w.x + w.y * d.value();
    long long B = w.y * d.value();
    long long C = norm(a);
    if (seen.insert(line_key(A, B, C)).second)
      hps.push_back(normalize_hp(Rat(A), Rat(B), Rat(C)));
  }
  return canonical_polygon(intersect_half_planes(hps, Dabs));
}

Rat polygon_area2(const ExactPolygon& poly) {
  Rat s = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const ExactPoint& a = poly[i];
    const ExactPoint& b = poly[(i + 1) % n];
    s += a.p * b.q - b.p * a.q;
  }
  return s;
}

ExactPolygon canonical_polygon(ExactPolygon poly) {
  if (poly.size() < 3) return poly;
  if (polygon_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
  size_t best = 0;
  for (size_t i = 1; i < poly.size(); ++i) {
    if (std::make_pair(poly[i].p, poly[i].q) < std::make_pair(poly[best].p, poly[best].q))
      best = i;
  }
  std::rotate(poly.begin(), poly.begin() + best, poly.end());
  return poly;
}

std::complex<double> embed_exact(const ExactPoint& pt, Disc d) {
  double root = std::sqrt(static_cast<double>(-d.value()));
  return {static_cast<double>(pt.p), static_cast<double>(pt.q) * root};
}

namespace {

struct SiteExact {
  Rat p, q;    // position, z = p + q sqrt(D)
  Rat weight;  // N(I)/N(b)
};

std::vector<std::complex<double>> clip_d(const std::vector<std::complex<double>>& poly,
                                         double A, double B, double C) {
  // A x + B y <= C
  std::vector<std::complex<double>> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& P = poly[i];
    const auto& Q = poly[(i + 1) % n];
    double sp = C - A * P.real() - B * P.imag();
    double sq = C - A * Q.real() - B * Q.imag();
    if (sp >= 0) out.push_back(P);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      double t = sp / (sp - sq);
      out.push_back(P + t * (Q - P));
    }
  }
  return out;
}

std::vector<std::complex<double>> tidy_poly(std::vector<std::complex<double>> poly) {
  // drop near-duplicate and collinear vertices left by grazing clips
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < poly.size(); ++i) {
      const auto& A = poly[(i + poly.size() - 1) % poly.size()];
      const auto& B = poly[i];
      const auto& C = poly[(i + 1) % poly.size()];
      double cross = (B.real() - A.real()) * (C.imag() - B.imag()) -
                     (B.imag() - A.imag()) * (C.real() - B.real());
      if (std::abs(B - A) < 1e-9 || std::abs(cross) < 1e-12) {
        poly.erase(poly.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return poly;
}

double poly_area(const std::vector<std::complex<double>>& poly) {
  double s = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    s += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * std::abs(s);
}

}  // namespace

std::vector<TileCell> horosphere_tiling(Disc d, const Window& win) {
  if (!(win.x1 > win.x0) || !(win.y1 > win.y0))
    throw std::domain_error("horosphere_tiling: degenerate window");
  const long long D = d.value();
  const long long Dabs = -D;
  const double root = std::sqrt(static_cast<double>(Dabs));
  long long nImax = std::max(1LL, static_cast<long long>(std::sqrt(Dabs / 3.0)));

  // covering radius^2 of the lattice from the Voronoi cell vertices
  ExactPolygon vor = voronoi_cell(d);
  double mu2 = 0;
  for (const ExactPoint& v : vor) {
    double e = static_cast<double>(v.p) * static_cast<double>(v.p) +
               static_cast<double>(Dabs) * static_cast<double>(v.q) * static_cast<double>(v.q);
    mu2 = std::max(mu2, e);
  }
  double mu = std::sqrt(mu2);
  double reach = mu + std::sqrt(mu2 + 1.0) + 1.0;

  // positions as reduced integer triples (P, Q, R): p = P/R, q = Q/R
  using PosKey = std::array<long long, 3>;
  auto pos_key = [](long long P, long long Q, long long R) {
    long long g = gcd_ll(gcd_ll(P, Q), R);
    if (g > 1) {
      P /= g;
      Q /= g;
      R /= g;
    }
    if (R < 0) {
      P = -P;
      Q = -Q;
      R = -R;
    }
    return PosKey{P, Q, R};
  };

  // A cusp not in the lattice class that lies within distance 1 of a
  // lattice point owns no 2-cell and can be dropped.  Borderline cases are
  // kept: a kept empty cell is harmless, a dropped real one is not.
  auto survives = [&](const PosKey& k, double pd, double qd) {
    // alpha in A: 2q and p - qD integral
    if ((2 * k[1]) % k[2] == 0 && (k[0] - k[1] * D) % k[2] == 0) return true;
    long long q2 = static_cast<long long>(std::llround(2.0 * qd));
    for (long long ly = q2 - 2; ly <= q2 + 2; ++ly) {
      double centre = pd - static_cast<double>(ly * D) / 2.0;
      long long lx0 = static_cast<long long>(std::llround(centre));
      for (long long lx = lx0 - 2; lx <= lx0 + 2; ++lx) {
        double dp = pd - lx - static_cast<double>(ly * D) / 2.0;
        double dq = qd - ly / 2.0;
        if (dp * dp + Dabs * dq * dq < 1.0 - 1e-9) return false;
      }
    }
    return true;
  };

  // base cusps a/b near 0; only pairs with both generator norms within
  // nI*|D|/2 can bound cells, so the search box is finite
  struct BaseSite {
    double p, q, w;
  };
  std::map<PosKey, BaseSite> base;
  std::set<PosKey> rejected;
  for (long long nI = 1; nI <= nImax; ++nI) {
    long long nb = nI * Dabs / 2;
    long long na = static_cast<long long>(std::ceil(nb * (mu2 + 1.0)));
    auto bs = elements_of_norm_up_to(d, nb);
    auto as = elements_of_norm_up_to(d, na);
    for (const RingElem& b : bs) {
      long long NB = norm(b);
      for (const RingElem& a : as) {
        RingElem w = a * conj(b);
        PosKey key = pos_key(2 * w.x + w.y * D, w.y, 2 * NB);
        if (base.count(key) || rejected.count(key)) continue;
        double pd = static_cast<double>(key[0]) / key[2];
        double qd = static_cast<double>(key[1]) / key[2];
        if (!survives(key, pd, qd)) {
          rejected.insert(key);
          continue;
        }
        if (module_norm(a, b) != nI) continue;
        base.emplace(key, BaseSite{pd, qd, static_cast<double>(nI) / NB});
      }
    }
  }
  // the zero cusp (0, 1) is a base site as well
  base.emplace(PosKey{0, 0, 1}, BaseSite{0.0, 0.0, 1.0});

  // translate across the (inflated) window
  double margin = mu + reach + 1.0;
  double px0 = win.x0 - margin, px1 = win.x1 + margin;
  double qy0 = (win.y0 - margin) / root, qy1 = (win.y1 + margin) / root;
  struct Site {
    double x, y, w;
    bool inner;
  };
  std::vector<Site> sites;
  double inner_margin = mu + 1.0;
  std::map<PosKey, double> placed;  // dedupe exactly by position
  for (auto& [pos, bs] : base) {
    // lattice translates: lambda = lx + ly*tau adds (lx + ly D/2, ly/2)
    long long ly0 = static_cast<long long>(std::floor(2 * (qy0 - bs.q))) - 1;
    long long ly1 = static_cast<long long>(std::ceil(2 * (qy1 - bs.q))) + 1;
    for (long long ly = ly0; ly <= ly1; ++ly) {
      double q = bs.q + ly / 2.0;
      if (q < qy0 || q > qy1) continue;
      double centre = bs.p + ly * D / 2.0;
      long long lx0 = static_cast<long long>(std::floor(px0 - centre)) - 1;
      long long lx1 = static_cast<long long>(std::ceil(px1 - centre)) + 1;
      for (long long lx = lx0; lx <= lx1; ++lx) {
        double p = centre + lx;
        if (p < px0 || p > px1) continue;
        PosKey key = pos_key(2 * pos[0] + pos[2] * (2 * lx + ly * D),
                             2 * pos[1] + pos[2] * ly, 2 * pos[2]);
        auto it = placed.find(key);
        if (it != placed.end()) {
          // the same cusp reached twice; its weight is intrinsic
          if (std::abs(it->second - bs.w) > 1e-12)
            throw std::logic_error("horosphere_tiling: inconsistent cusp weight");
          continue;
        }
        placed.emplace(key, bs.w);
        double x = p, y = q * root;
        bool inner = x >= win.x0 - inner_margin && x <= win.x1 + inner_margin &&
                     y >= win.y0 - inner_margin && y <= win.y1 + inner_margin;
        sites.push_back(Site{x, y, bs.w, inner});
      }
    }
  }

  // spatial buckets for neighbour queries
  double cell = std::max(reach, 1.0);
  std::map<std::pair<long long, long long>, std::vector<size_t>> grid;
  auto bucket = [&](double x, double y) {
    return std::make_pair(static_cast<long long>(std::floor(x / cell)),
                          static_cast<long long>(std::floor(y / cell)));
  };
  for (size_t i = 0; i < sites.size(); ++i) grid[bucket(sites[i].x, sites[i].y)].push_back(i);

  std::vector<TileCell> out;
  std::vector<std::complex<double>> window_poly = {
      {win.x0, win.y0}, {win.x1, win.y0}, {win.x1, win.y1}, {win.x0, win.y1}};
  for (size_t i = 0; i < sites.size(); ++i) {
    if (!sites[i].inner) continue;
    const Site& s = sites[i];
    // gather neighbours within reach, closest first
    std::vector<std::pair<double, size_t>> nbrs;
    auto [bx, by] = bucket(s.x, s.y);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({bx + dx, by + dy});
        if (it == grid.end()) continue;
        for (size_t j : it->second) {
          if (j == i) continue;
          double d2 = (sites[j].x - s.x) * (sites[j].x - s.x) +
                      (sites[j].y - s.y) * (sites[j].y - s.y);
          if (d2 <= reach * reach) nbrs.push_back({d2, j});
        }
      }
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<std::complex<double>> poly = window_poly;
    for (auto& [d2, j] : nbrs) {
      const Site& t = sites[j];
      // |z - s|^2 - ws <= |z - t|^2 - wt
      double A = 2 * (t.x - s.x), B = 2 * (t.y - s.y);
      double C = t.x * t.x + t.y * t.y - s.x * s.x - s.y * s.y + s.w - t.w;
      poly = clip_d(poly, A, B, C);
      if (poly.size() < 3) break;
    }
    poly = tidy_poly(poly);
    if (poly.size() >= 3 && poly_area(poly) > 1e-12)
      out.push_back(TileCell{{s.x, s.y}, s.w, poly});
  }
  return out;
}

Point3 vertex_position(const std::vector<Cusp>& cusps) {
  if (cusps.size() < 4)
    throw std::invalid_argument("vertex_position: need at least four cusps");
  struct Fin {
    double ax, ay, c;
  };
  std::vector<Fin> fins;
  bool has_inf = false;
  for (const Cusp& cu : cusps) {
    if (cu.is_infinity()) {
      has_inf = true;
      continue;
    }
    std::complex<double> a = embed(cu.v.x) / embed(cu.v.y);
    fins.push_back(Fin{a.real(), a.imag(),
                       static_cast<double>(norm(cu.v.y)) / static_cast<double>(cu.normN)});
  }
  // rows: coefficients of (x, y, u) and the right-hand side
  std::vector<std::array<double, 4>> rows;
  if (has_inf) {
    for (const Fin& f : fins)
      rows.push_back({-2 * f.c * f.ax, -2 * f.c * f.ay, f.c,
                      1 - f.c * (f.ax * f.ax + f.ay * f.ay)});
  } else {
    const Fin& f0 = fins[0];
    for (size_t i = 1; i < fins.size(); ++i) {
      const Fin& f = fins[i];
      rows.push_back({-2 * (f.c * f.ax - f0.c * f0.ax), -2 * (f.c * f.ay - f0.c * f0.ay),
                      f.c - f0.c,
                      f0.c * (f0.ax * f0.ax + f0.ay * f0.ay) -
                          f.c * (f.ax * f.ax + f.ay * f.ay)});
    }
  }
  if (rows.size() < 3)
    throw std::invalid_argument("vertex_position: not enough independent cusps");
  // Gauss-Jordan with partial pivoting across all rows
  int rank = 0;
  int pivot_col[3] = {-1, -1, -1};
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    size_t piv = rows.size();
    double best = 1e-10;
    for (size_t r = rank; r < rows.size(); ++r) {
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        piv = r;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank)) continue;
      double factor = rows[r][col] / rows[rank][col];
      for (int c = 0; c < 4; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < 3) throw std::domain_error("vertex_position: degenerate cusp configuration");
  double sol[3];
  for (int k = 0; k < 3; ++k) sol[pivot_col[k]] = rows[k][3] / rows[k][pivot_col[k]];
  double x = sol[0], y = sol[1], u = sol[2];
  double zeta2 = u - x * x - y * y;
  if (!(zeta2 > 1e-15)) throw std::domain_error("vertex_position: no common point above C");
  Point3 w{{x, y}, std::sqrt(zeta2)};
  // verify all pairwise equalities
  double ref = -1;
  for (const Cusp& cu : cusps) {
    double val = cusp_distance(cu, w);
    if (ref < 0)
      ref = val;
    else if (std::abs(val - ref) > 1e-7 * std::max(1.0, std::abs(ref)))
      throw std::domain_error("vertex_position: cusps are not equidistant from a point");
  }
  return w;
}

}  // namespace hermtop
