#include <doctest.h>

#include <cmath>
#include <complex>

#include "hermtop/render.hpp"

using namespace hermtop;

namespace {

HermitianForm delta6g() { return HermitianForm(1, -1, DualElem(RingElem(3, 1, -4))); }

double dist(const DiskPoint& a, const DiskPoint& b) {
  return std::hypot(a.u - b.u, a.v - b.v);
}

// disk Mobius translation taking z1 to 0
std::complex<double> disk_translate(std::complex<double> z1, std::complex<double> z) {
  return (z - z1) / (1.0 - std::conj(z1) * z);
}

}  // namespace

TEST_CASE("circle of the Delta=6 form") {
  HermitianForm f = delta6g();
  CirclePosition c = circle_of_form(f);
  CHECK(c.pre == Mat2A::identity(Disc(-4)));
  CHECK(std::abs(c.center - std::complex<double>(-0.5, -0.5)) < 1e-12);
  CHECK(c.radius == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  // sampled points of the circle are zeros of f(z, 1)
  RatGram rg = to_rat_gram(f);
  for (double t : {0.3, 1.7, 4.4}) {
    std::complex<double> z = c.center + c.radius * std::exp(std::complex<double>(0, t));
    // evaluate a N(z) + tr(nu z) + c numerically
    std::complex<double> nu = embed(f.nu.num) / std::complex<double>(0, 2);
    double val = f.a * std::norm(z) + 2 * (nu * z).real() + f.c;
    CHECK(std::abs(val) < 1e-10);
  }
  (void)rg;
}

TEST_CASE("unit circle for diag(1, -1) and scaling invariance") {
  HermitianForm f(1, -1, DualElem(ring_zero(Disc(-4))));
  CirclePosition c = circle_of_form(f);
  CHECK(std::abs(c.center) < 1e-14);
  CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-14));
  HermitianForm f3(3, -3, DualElem(ring_zero(Disc(-4))));
  CirclePosition c3 = circle_of_form(f3);
  CHECK(std::abs(c3.center - c.center) < 1e-14);
  CHECK(c3.radius == doctest::Approx(c.radius).epsilon(1e-13));
}

TEST_CASE("circle for a form with a = 0 goes through the shear") {
  // isotropic, but the zero set is still computed after a pre-shear
  HermitianForm f(0, 3, DualElem(RingElem(3, 1, -4)));
  REQUIRE(hdisc(f) > 0);
  CirclePosition c = circle_of_form(f);
  CHECK_FALSE(c.pre == Mat2A::identity(Disc(-4)));
  HermitianForm g = transform(f, c.pre);
  REQUIRE(g.a != 0);
  std::complex<double> nu = embed(g.nu.num) / std::complex<double>(0, 2);
  for (double t : {0.9, 2.2}) {
    std::complex<double> z = c.center + c.radius * std::exp(std::complex<double>(0, t));
    double val = g.a * std::norm(z) + 2 * (nu * z).real() + g.c;
    CHECK(std::abs(val) < 1e-10);
  }
}

TEST_CASE("Poincare extension basics") {
  MobiusMap inv{0, 1, 1, 0};  // z -> 1/z
  Point3 w{{0.3, 0.4}, 0.5};
  Point3 iw = mobius_apply_h3(inv, w);
  double q = std::norm(w.z) + w.zeta * w.zeta;
  CHECK(std::abs(iw.z - std::conj(w.z) / q) < 1e-14);
  CHECK(iw.zeta == doctest::Approx(w.zeta / q).epsilon(1e-13));
  // boundary action is compatible
  MobiusMap m{std::complex<double>(2, 1), 0.5, std::complex<double>(0, 1), 1};
  Point3 low{{0.7, -0.2}, 1e-7};
  Point3 mapped = mobius_apply_h3(m, low);
  CHECK(std::abs(mapped.z - mobius_apply(m, low.z)) < 1e-5);
}

TEST_CASE("Delta=6 ocean projects to the 90-60 rhombic tiling") {
  HermitianForm f = delta6g();
  OceanGraphG g = ocean_graph_g(f, 4);
  ProjectionInput in = projection_input_g(g);
  OceanProjection p = project_ocean(f, in);

  for (const DiskPoint& v : p.vertices) CHECK(v.u * v.u + v.v * v.v < 1.0);

  // count incident explored cells per vertex
  std::vector<int> incident(p.vertices.size(), 0);
  for (const auto& cell : p.cells)
    for (int v : cell) incident[v] += 1;

  // every cell is a rhombus with angles 90 (at inv = +-2) and 60 (at inv 0)
  for (const auto& cell : p.cells) {
    REQUIRE(cell.size() == 4);
    for (size_t k = 0; k < 4; ++k) {
      const DiskPoint& corner = p.vertices[cell[k]];
      const DiskPoint& prev = p.vertices[cell[(k + 3) % 4]];
      const DiskPoint& next = p.vertices[cell[(k + 1) % 4]];
      double ang = disk_angle(corner, prev, next);
      double want = (p.vertex_inv[cell[k]] == 0) ? M_PI / 3 : M_PI / 2;
      CHECK(std::abs(ang - want) < 1e-6);
    }
  }

  // angle sums at interior vertices: 2 pi
  for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
    int expected = (p.vertex_inv[vi] == 0) ? 6 : 4;
    if (incident[vi] != expected) continue;  // boundary of the explored patch
    double sum = 0;
    for (const auto& cell : p.cells) {
      for (size_t k = 0; k < cell.size(); ++k) {
        if (cell[k] != static_cast<int>(vi)) continue;
        sum += disk_angle(p.vertices[cell[k]], p.vertices[cell[(k + 3) % 4]],
                          p.vertices[cell[(k + 1) % 4]]);
      }
    }
    CHECK(std::abs(sum - 2 * M_PI) < 1e-6);
  }

  // distinct cells have essentially disjoint interiors
  std::vector<std::vector<DiskPoint>> klein;
  for (const auto& cell : p.cells) {
    std::vector<DiskPoint> poly;
    for (int v : cell) poly.push_back(to_klein(p.vertices[v]));
    klein.push_back(poly);
  }
  for (size_t i = 0; i < klein.size(); ++i)
    for (size_t j = i + 1; j < klein.size(); ++j)
      CHECK(klein_intersection_area(klein[i], klein[j]) < 1e-9);
}

TEST_CASE("projection is equivariant under the symmetry group") {
  HermitianForm f = delta6g();
  OceanGraphG g = ocean_graph_g(f, 3);
  UfResultG uf = uf_generators_g(f, 3);
  REQUIRE(!uf.generators.empty());
  ProjectionInput in = projection_input_g(g);
  OceanProjection p = project_ocean(f, in);

  // index vertices by key for lookup of transformed vertices
  std::map<VertexKeyG, int> index;
  int vi = 0;
  for (auto& [key, v] : g.vertices) index.emplace(key, vi++);

  for (const Mat2A& m : uf.generators) {
    // collect pairs (v, m v) present in the explored patch
    std::vector<std::pair<int, int>> pairs;
    for (auto& [key, v] : g.vertices) {
      GVertex img{m * v.v.r, m * v.v.s};
      auto it = index.find(gvertex_key(img));
      if (it != index.end()) pairs.push_back({index.at(key), it->second});
    }
    if (pairs.size() < 3) continue;
    // the induced disk map is a Mobius isometry: pin it by the first pair
    // and a rotation, then verify the rest
    auto z = [&](int k) { return std::complex<double>(p.vertices[k].u, p.vertices[k].v); };
    std::complex<double> z1 = z(pairs[0].first), w1 = z(pairs[0].second);
    std::complex<double> rot = 0;
    size_t pin = 1;
    for (; pin < pairs.size(); ++pin) {
      std::complex<double> a = disk_translate(z1, z(pairs[pin].first));
      std::complex<double> b = disk_translate(w1, z(pairs[pin].second));
      if (std::abs(a) > 1e-6) {
        CHECK(std::abs(std::abs(a) - std::abs(b)) < 1e-8);
        rot = b / a;
        break;
      }
    }
    REQUIRE(std::abs(rot) > 0.5);
    int checked = 0;
    for (auto& [from, to] : pairs) {
      std::complex<double> image = rot * disk_translate(z1, z(from));
      // map back: w = (image + w1)/(1 + conj(w1) image)
      std::complex<double> w = (image + w1) / (1.0 + std::conj(w1) * image);
      CHECK(std::abs(w - z(to)) < 1e-6);
      ++checked;
    }
    CHECK(checked >= 3);
  }
}

TEST_CASE("svg emitters") {
  // topograph of the running quadratic example
  std::string t = svg_topograph(QuadraticForm{1, 1, -1}, 5);
  CHECK(t.find("<svg") == 0);
  CHECK(t.find("<line") != std::string::npos);
  CHECK(t.find("</svg>") != std::string::npos);

  // ocean figure
  HermitianForm f = delta6g();
  OceanGraphG g = ocean_graph_g(f, 3);
  OceanProjection p = project_ocean(f, projection_input_g(g));
  std::string o = svg_ocean(p);
  CHECK(o.find("<svg") == 0);
  CHECK(o.find("<path") != std::string::npos);

  // determinism
  CHECK(o == svg_ocean(project_ocean(f, projection_input_g(ocean_graph_g(f, 3)))));

  // empty projection still yields a valid document
  OceanProjection empty;
  std::string e = svg_ocean(empty);
  CHECK(e.find("<svg") == 0);
  CHECK(e.find("</svg>") != std::string::npos);

  // tiling figure
  Window win{-1, -1, 1, 1};
  std::string s = svg_tiling(horosphere_tiling(Disc(-3), win), win);
  CHECK(s.find("<svg") == 0);
  CHECK(s.find("<path") != std::string::npos);
}
