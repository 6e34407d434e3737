#include "hermtop/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hermtop {

namespace {

std::string fmt(double v) {
  if (std::abs(v) < 5e-7) v = 0;  // avoid "-0.000000"
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::complex<double> mobius_apply(const MobiusMap& m, std::complex<double> z) {
  return (m.a * z + m.b) / (m.c * z + m.d);
}

Point3 mobius_apply_h3(const MobiusMap& m, const Point3& w) {
  std::complex<double> cz_d = m.c * w.z + m.d;
  double Q = std::norm(cz_d) + std::norm(m.c) * w.zeta * w.zeta;
  std::complex<double> z2 =
      ((m.a * w.z + m.b) * std::conj(cz_d) + m.a * std::conj(m.c) * w.zeta * w.zeta) / Q;
  double zeta2 = std::abs(m.a * m.d - m.b * m.c) * w.zeta / Q;
  return Point3{z2, zeta2};
}

MobiusMap mobius_compose(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                   f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

CirclePosition circle_of_form(const HermitianForm& f) {
  long long delta = hdisc(f);
  if (delta <= 0) throw std::domain_error("circle_of_form: form is not indefinite");
  Disc dd(f.d());
  HermitianForm g = f;
  Mat2A pre = Mat2A::identity(dd);
  if (g.a == 0) {
    // shear until the first diagonal entry is nonzero; some small t works
    // because an anisotropic indefinite form has finite nonzero values
    bool found = false;
    for (long long tx = -2; tx <= 2 && !found; ++tx)
      for (long long ty = -2; ty <= 2 && !found; ++ty) {
        RingElem t(tx, ty, f.d());
        Mat2A shear(ring_one(dd), ring_zero(dd), t, ring_one(dd));
        HermitianForm cand = transform(g, shear);
        if (cand.a != 0) {
          g = cand;
          pre = shear;
          found = true;
        }
      }
    if (!found) throw std::domain_error("circle_of_form: could not move the line to a circle");
  }
  double root = std::sqrt(static_cast<double>(-f.d()));
  std::complex<double> nu = embed(g.nu.num) / std::complex<double>(0, root);
  std::complex<double> center = -std::conj(nu) / static_cast<double>(g.a);
  double radius = std::sqrt(static_cast<double>(delta) / static_cast<double>(-f.d())) /
                  std::abs(static_cast<double>(g.a));
  return CirclePosition{center, radius, pre};
}

namespace {

Cusp cusp_of_vector(const Vec2A& v) { return make_cusp(v); }

}  // namespace

ProjectionInput projection_input_g(const OceanGraphG& g) {
  ProjectionInput in;
  in.d = g.f.d();
  std::map<VertexKeyG, int> index;
  for (auto& [key, v] : g.vertices) {
    index.emplace(key, static_cast<int>(in.vertex_cusps.size()));
    std::vector<Cusp> cusps;
    for (const Vec2A& w : vertex_vectors(v.v)) cusps.push_back(cusp_of_vector(w));
    in.vertex_cusps.push_back(cusps);
    in.vertex_inv.push_back(v.inv);
  }
  for (auto& [key, c] : g.cells) {
    std::vector<int> corners;
    for (const VertexKeyG& vk : c.corners) corners.push_back(index.at(vk));
    in.cells.push_back(corners);
    in.cell_inv.push_back(c.fx + c.fy);
  }
  return in;
}

ProjectionInput projection_input_e(const OceanGraphE& g) {
  ProjectionInput in;
  in.d = g.f.d();
  std::map<VertexKeyE, int> index;
  for (auto& [key, v] : g.vertices) {
    index.emplace(key, static_cast<int>(in.vertex_cusps.size()));
    std::vector<Cusp> cusps;
    for (const Vec2A& w : ultra_vectors(v.ub)) cusps.push_back(cusp_of_vector(w));
    in.vertex_cusps.push_back(cusps);
    in.vertex_inv.push_back(inv_vertex(v.lbl));
  }
  RingElem rho(2, 1, -3);
  for (auto& [key, c] : g.cells) {
    std::vector<int> corners;
    RingElem rp = ring_one(Disc(-3));
    for (int i = 0; i < 6; ++i) {
      UltraBasis ub{c.x, rp * c.y};
      corners.push_back(index.at(vertex_key(ub)));
      rp = rp * rho;
    }
    in.cells.push_back(corners);
    in.cell_inv.push_back(c.fx + c.fy);
  }
  return in;
}

OceanProjection project_ocean(const HermitianForm& f, const ProjectionInput& in) {
  CirclePosition cp = circle_of_form(f);
  bool sheared = !(cp.pre == Mat2A::identity(Disc(f.d())));
  Mat2A prei = sheared ? gl2_inverse(cp.pre) : cp.pre;

  // Mobius chain: recentre the circle, then send it to the imaginary axis
  MobiusMap m1{1.0, -cp.center, 0.0, cp.radius};
  MobiusMap m2{1.0, -1.0, 1.0, 1.0};
  MobiusMap chain = mobius_compose(m2, m1);

  OceanProjection out;
  out.chain = chain;
  out.cells = in.cells;
  out.cell_inv = in.cell_inv;
  out.vertex_inv = in.vertex_inv;
  for (const auto& cusps : in.vertex_cusps) {
    std::vector<Cusp> use = cusps;
    if (sheared) {
      use.clear();
      for (const Cusp& c : cusps) use.push_back(make_cusp(prei * c.v));
    }
    Point3 pos = vertex_position(use);
    Point3 mapped = mobius_apply_h3(chain, pos);
    if (!(mapped.zeta > 0))
      throw std::domain_error("project_ocean: vertex collapsed to the boundary");
    // orthogonal projection onto the vertical plane Re z = 0, then the
    // half-plane coordinate w = y + i sqrt(x^2 + zeta^2)
    double x = mapped.z.real(), y = mapped.z.imag();
    std::complex<double> w(y, std::sqrt(x * x + mapped.zeta * mapped.zeta));
    std::complex<double> disk = (w - std::complex<double>(0, 1)) /
                                (w + std::complex<double>(0, 1));
    if (std::abs(disk) >= 1)
      throw std::domain_error("project_ocean: image left the disk");
    out.vertices.push_back(DiskPoint{disk.real(), disk.imag()});
  }
  return out;
}

namespace {

std::complex<double> cd(const DiskPoint& p) { return {p.u, p.v}; }

// centre of the circle through p, q orthogonal to the unit circle, or a
// flag that the geodesic is a diameter
bool geodesic_center(std::complex<double> p, std::complex<double> q,
                     std::complex<double>& c) {
  double a11 = 2 * p.real(), a12 = 2 * p.imag();
  double a21 = 2 * q.real(), a22 = 2 * q.imag();
  double b1 = std::norm(p) + 1, b2 = std::norm(q) + 1;
  double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-10 * (std::abs(p) + std::abs(q) + 1)) return false;
  c = {(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
  return true;
}

std::complex<double> tangent_dir(std::complex<double> from, std::complex<double> to) {
  std::complex<double> c;
  if (!geodesic_center(from, to, c)) return (to - from) / std::abs(to - from);
  std::complex<double> radial = from - c;
  std::complex<double> t(-radial.imag(), radial.real());
  if ((t * std::conj(to - from)).real() < 0) t = -t;
  return t / std::abs(t);
}

}  // namespace

double disk_angle(const DiskPoint& corner, const DiskPoint& prev, const DiskPoint& next) {
  std::complex<double> t1 = tangent_dir(cd(corner), cd(prev));
  std::complex<double> t2 = tangent_dir(cd(corner), cd(next));
  double cosang = std::clamp((t1 * std::conj(t2)).real(), -1.0, 1.0);
  return std::acos(cosang);
}

DiskPoint to_klein(const DiskPoint& p) {
  double s = 1 + p.u * p.u + p.v * p.v;
  return DiskPoint{2 * p.u / s, 2 * p.v / s};
}

double klein_intersection_area(const std::vector<DiskPoint>& a,
                               const std::vector<DiskPoint>& b) {
  // both polygons are convex in the Klein model; clip a by b's edges
  std::vector<std::complex<double>> poly;
  for (const DiskPoint& p : a) poly.push_back(cd(p));
  // ensure counterclockwise clip polygon
  std::vector<std::complex<double>> clipper;
  for (const DiskPoint& p : b) clipper.push_back(cd(p));
  double s = 0;
  for (size_t i = 0; i < clipper.size(); ++i) {
    const auto& p = clipper[i];
    const auto& q = clipper[(i + 1) % clipper.size()];
    s += p.real() * q.imag() - q.real() * p.imag();
  }
  if (s < 0) std::reverse(clipper.begin(), clipper.end());
  for (size_t i = 0; i < clipper.size() && !poly.empty(); ++i) {
    const auto& e0 = clipper[i];
    const auto& e1 = clipper[(i + 1) % clipper.size()];
    // inside = left of e0 -> e1
    std::vector<std::complex<double>> next;
    auto side = [&](const std::complex<double>& z) {
      return (e1.real() - e0.real()) * (z.imag() - e0.imag()) -
             (e1.imag() - e0.imag()) * (z.real() - e0.real());
    };
    for (size_t k = 0; k < poly.size(); ++k) {
      const auto& P = poly[k];
      const auto& Q = poly[(k + 1) % poly.size()];
      double sp = side(P), sq = side(Q);
      if (sp >= 0) next.push_back(P);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        double t = sp / (sp - sq);
        next.push_back(P + t * (Q - P));
      }
    }
    poly = next;
  }
  double area = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    area += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * std::abs(area);
}

std::string svg_topograph(const QuadraticForm& f, int depth) {
  std::ostringstream svg;
  double W = 720, H = 720;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  struct Branch {
    SuperBasis sb;
    double x, y, angle, len;
    int depth;
  };
  std::vector<Branch> stack;
  // root edge between the standard superbasis and its {u, v}-neighbour
  stack.push_back({SuperBasis::standard(), W / 2, H * 0.75, -M_PI / 2, H * 0.28, depth});
  std::vector<std::string> lines, labels;
  auto label_at = [&](double x, double y, const BigInt& val) {
    std::ostringstream t;
    t << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
      << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333\">" << val.str()
      << "</text>\n";
    labels.push_back(t.str());
  };
  bool root_labeled = false;
  while (!stack.empty()) {
    Branch br = stack.back();
    stack.pop_back();
    auto vals = vertex_values(f, br.sb);
    double x2 = br.x + br.len * std::cos(br.angle);
    double y2 = br.y + br.len * std::sin(br.angle);
    bool river = (vals[0] > 0) != (vals[1] > 0);
    std::ostringstream ln;
    ln << "<line x1=\"" << fmt(br.x) << "\" y1=\"" << fmt(br.y) << "\" x2=\"" << fmt(x2)
       << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << (river ? "#1565c0" : "#999")
       << "\" stroke-width=\"" << (river ? 2.5 : 1.2) << "\"/>\n";
    lines.push_back(ln.str());
    // regions u and v flank the edge
    double nx = -std::sin(br.angle), ny = std::cos(br.angle);
    double mx = (br.x + x2) / 2, my = (br.y + y2) / 2;
    double off = std::max(12.0, br.len * 0.22);
    label_at(mx - nx * off, my - ny * off, vals[0]);
    label_at(mx + nx * off, my + ny * off, vals[1]);
    if (!root_labeled) {
      label_at(br.x - 18, br.y + 16, vals[2]);
      root_labeled = true;
    }
    if (br.depth <= 1) continue;
    // the far vertex branches across its {u, w} and {v, w} edges
    double spread = 0.52;
    stack.push_back({edge_step(br.sb, EdgeChoice::uw), x2, y2, br.angle - spread,
                     br.len * 0.58, br.depth - 1});
    stack.push_back({edge_step(br.sb, EdgeChoice::vw), x2, y2, br.angle + spread,
                     br.len * 0.58, br.depth - 1});
  }
  for (auto& s : lines) svg << s;
  for (auto& s : labels) svg << s;
  svg << "</svg>\n";
  return svg.str();
}

std::string svg_ocean(const OceanProjection& p) {
  std::ostringstream svg;
  double R = 360, C = 380;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"760\" "
         "viewBox=\"0 0 760 760\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto X = [&](const DiskPoint& d) { return C + R * d.u; };
  auto Y = [&](const DiskPoint& d) { return C - R * d.v; };
  // colour cells by the sign of their invariant
  auto color = [&](long long inv) {
    if (inv > 0) return "#aed6f1";
    if (inv < 0) return "#f5b7b1";
    return "#d5f5e3";
  };
  for (size_t ci = 0; ci < p.cells.size(); ++ci) {
    const auto& cell = p.cells[ci];
    if (cell.empty()) continue;
    std::ostringstream path;
    for (size_t k = 0; k < cell.size(); ++k) {
      const DiskPoint& a = p.vertices[cell[k]];
      const DiskPoint& b = p.vertices[cell[(k + 1) % cell.size()]];
      if (k == 0) path << "M " << fmt(X(a)) << " " << fmt(Y(a)) << " ";
      std::complex<double> cc;
      if (geodesic_center({a.u, a.v}, {b.u, b.v}, cc)) {
        double r = std::sqrt(std::max(0.0, std::norm(cc) - 1.0)) * R;
        // svg y-axis points down, so the sweep flips
        double cross = (a.u - cc.real()) * (b.v - cc.imag()) -
                       (a.v - cc.imag()) * (b.u - cc.real());
        int sweep = cross > 0 ? 0 : 1;
        path << "A " << fmt(r) << " " << fmt(r) << " 0 0 " << sweep << " " << fmt(X(b))
             << " " << fmt(Y(b)) << " ";
      } else {
        path << "L " << fmt(X(b)) << " " << fmt(Y(b)) << " ";
      }
    }
    path << "Z";
    svg << "<path d=\"" << path.str() << "\" fill=\"" << color(p.cell_inv[ci])
        << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  }
  svg << "<circle cx=\"" << C << "\" cy=\"" << C << "\" r=\"" << R
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string svg_tiling(const std::vector<TileCell>& cells, const Window& win) {
  std::ostringstream svg;
  double scale = 170;
  double W = (win.x1 - win.x0) * scale, H = (win.y1 - win.y0) * scale;
  auto X = [&](double x) { return (x - win.x0) * scale; };
  auto Y = [&](double y) { return (win.y1 - y) * scale; };
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
      << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  static const char* palette[] = {"#aed6f1", "#f9e79f", "#f5b7b1", "#d5f5e3",
                                  "#d7bde2", "#fad7a0"};
  std::vector<double> weights;
  for (const auto& c : cells) {
    bool known = false;
    for (double w : weights) known = known || std::abs(w - c.weight) < 1e-9;
    if (!known) weights.push_back(c.weight);
  }
  std::sort(weights.begin(), weights.end(), std::greater<double>());
  for (const auto& c : cells) {
    size_t wi = 0;
    for (size_t k = 0; k < weights.size(); ++k)
      if (std::abs(weights[k] - c.weight) < 1e-9) wi = k;
    std::ostringstream path;
    for (size_t k = 0; k < c.poly.size(); ++k) {
      path << (k == 0 ? "M " : "L ") << fmt(X(c.poly[k].real())) << " "
           << fmt(Y(c.poly[k].imag())) << " ";
    }
    path << "Z";
    svg << "<path d=\"" << path.str() << "\" fill=\"" << palette[wi % 6]
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hermtop
