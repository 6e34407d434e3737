#include <doctest.h>

#include <cmath>

#include "hermtop/spine_geom.hpp"

using namespace hermtop;

namespace {

Cusp cusp_of(long long xx, long long xy, long long yx, long long yy, long long d) {
  return make_cusp(Vec2A(RingElem(xx, xy, d), RingElem(yx, yy, d)));
}

}  // namespace

TEST_CASE("cusp_distance at the D=-4 spine vertex") {
  Disc d(-4);
  Point3 w{{0.5, 0.5}, 1.0 / std::sqrt(2.0)};
  CHECK(cusp_distance(cusp_infinity(d), w) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // the six regions meeting at the vertex are all at the same distance
  std::vector<Cusp> six = {
      cusp_infinity(d),
      cusp_zero(d),
      cusp_of(1, 0, 1, 0, -4),            // 1
      cusp_of(2, 1, 1, 0, -4),            // i
      cusp_of(3, 1, 1, 0, -4),            // 1+i
      cusp_of(3, 1, 2, 0, -4),            // (1+i)/2
  };
  for (const Cusp& c : six)
    CHECK(cusp_distance(c, w) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // distance blows up toward the boundary away from the cusp
  Point3 lo{{0.3, 0.4}, 1e-6};
  CHECK(cusp_distance(cusp_zero(d), lo) > 1e5);
}

TEST_CASE("horoball tangency") {
  Disc d4(-4);
  CHECK(horoballs_touch(cusp_zero(d4), cusp_infinity(d4)) == Tangency::touch);
  // 0 and (1+i)/2
  CHECK(horoballs_touch(cusp_zero(d4), cusp_of(3, 1, 2, 0, -4)) == Tangency::touch);
  // 0 and 2
  CHECK(horoballs_touch(cusp_zero(d4), cusp_of(2, 0, 1, 0, -4)) == Tangency::disjoint);
  CHECK_THROWS(horoballs_touch(cusp_zero(d4), cusp_zero(d4)));
  // non-Euclidean D=-20: a norm-2 ideal cusp misses the infinity horoball,
  // but two norm-2 cusps with principal product touch
  Disc d20(-20);
  Cusp half = make_cusp(Vec2A(RingElem(11, 1, -20), RingElem(2, 0, -20)));
  CHECK(half.normN == 2);
  CHECK(horoballs_touch(half, cusp_infinity(d20)) == Tangency::disjoint);
  CHECK(horoballs_touch(cusp_zero(d20), cusp_infinity(d20)) == Tangency::touch);
  Cusp other = make_cusp(Vec2A(RingElem(2, 0, -20), RingElem(-9, -1, -20)));
  CHECK(other.normN == 2);
  CHECK(horoballs_touch(half, other) == Tangency::touch);
}

TEST_CASE("fundamental cell for D=-4 is the expected square") {
  ExactPolygon cell = fundamental_cell(Disc(-4));
  REQUIRE(cell.size() == 4);
  ExactPolygon expect = canonical_polygon({{make_rat(-1, 2), make_rat(-1, 4)},
                                           {make_rat(1, 2), make_rat(-1, 4)},
                                           {make_rat(1, 2), make_rat(1, 4)},
                                           {make_rat(-1, 2), make_rat(1, 4)}});
  CHECK(cell == expect);
}

TEST_CASE("fundamental cell for D=-3 is the regular hexagon") {
  ExactPolygon cell = fundamental_cell(Disc(-3));
  REQUIRE(cell.size() == 6);
  ExactPolygon expect = canonical_polygon({{make_rat(1, 2), make_rat(1, 6)},
                                           {make_rat(0, 1), make_rat(1, 3)},
                                           {make_rat(-1, 2), make_rat(1, 6)},
                                           {make_rat(-1, 2), make_rat(-1, 6)},
                                           {make_rat(0, 1), make_rat(-1, 3)},
                                           {make_rat(1, 2), make_rat(-1, 6)}});
  CHECK(cell == expect);
}

TEST_CASE("fundamental cell equals the Voronoi cell exactly iff Euclidean") {
  for (long long d : {-3LL, -4LL, -7LL, -8LL, -11LL}) {
    CHECK(fundamental_cell(Disc(d)) == voronoi_cell(Disc(d)));
  }
  for (long long d : {-15LL, -20LL, -23LL}) {
    CHECK_FALSE(fundamental_cell(Disc(d)) == voronoi_cell(Disc(d)));
  }
  // for D=-20 the cell is strictly smaller (norm-2 ideal class lines)
  CHECK(polygon_area2(fundamental_cell(Disc(-20))) < polygon_area2(voronoi_cell(Disc(-20))));
}

TEST_CASE("fundamental cell vertices stay above the covering horoballs") {
  // zeta^2 = 1 - |z|^2 >= 2/|D| at every vertex, exactly
  for (long long d : {-3LL, -4LL, -7LL, -8LL, -11LL, -15LL, -20LL, -23LL, -88LL}) {
    ExactPolygon cell = fundamental_cell(Disc(d));
    REQUIRE(cell.size() >= 4);
    for (const ExactPoint& v : cell) {
      Rat z2 = v.p * v.p + Rat(-d) * v.q * v.q;
      CHECK(Rat(1) - z2 >= make_rat(2, -d));
    }
  }
}

TEST_CASE("horosphere tiling covers the window") {
  for (long long d : {-3LL, -4LL, -7LL, -20LL}) {
    Window win{-1.0, -1.0, 1.5, 1.3};
    auto cells = horosphere_tiling(Disc(d), win);
    CHECK(cells.size() >= 4);
    double area = 0;
    for (const auto& c : cells) {
      double s = 0;
      size_t n = c.poly.size();
      for (size_t i = 0; i < n; ++i) {
        const auto& a = c.poly[i];
        const auto& b = c.poly[(i + 1) % n];
        s += a.real() * b.imag() - b.real() * a.imag();
      }
      area += 0.5 * std::abs(s);
    }
    double want = (win.x1 - win.x0) * (win.y1 - win.y0);
    CHECK(std::abs(area - want) < 1e-9);
  }
}

TEST_CASE("D=-4 tiling is the unit square lattice") {
  Window win{-0.6, -0.6, 1.6, 1.6};
  auto cells = horosphere_tiling(Disc(-4), win);
  for (const auto& c : cells) {
    // every nonempty cell has an integer-lattice site and weight 1
    CHECK(c.weight == doctest::Approx(1.0));
    CHECK(std::abs(c.site.real() - std::round(c.site.real())) < 1e-12);
    CHECK(std::abs(c.site.imag() - std::round(c.site.imag())) < 1e-12);
  }
}

TEST_CASE("tiling is invariant under lattice translation") {
  for (long long d : {-3LL, -20LL}) {
    Window win{-2.0, -2.0, 2.0, 2.0};
    auto cells = horosphere_tiling(Disc(d), win);
    auto find_site = [&](std::complex<double> s) -> const TileCell* {
      for (const auto& c : cells)
        if (std::abs(c.site - s) < 1e-9) return &c;
      return nullptr;
    };
    int matched = 0;
    for (const auto& c : cells) {
      bool inside = true;
      for (const auto& p : c.poly)
        inside = inside && p.real() > win.x0 + 0.2 && p.real() < win.x1 - 1.2 &&
                 p.imag() > win.y0 + 0.2 && p.imag() < win.y1 - 0.2;
      if (!inside) continue;
      const TileCell* t = find_site(c.site + 1.0);
      REQUIRE(t != nullptr);
      CHECK(t->weight == doctest::Approx(c.weight).epsilon(1e-12));
      REQUIRE(t->poly.size() == c.poly.size());
      for (const auto& p : c.poly) {
        double best = 1e9;
        for (const auto& q : t->poly) best = std::min(best, std::abs(q - (p + 1.0)));
        CHECK(best < 1e-9);
      }
      ++matched;
    }
    CHECK(matched > 0);
  }
}

TEST_CASE("vertex_position examples") {
  Disc d4(-4);
  std::vector<Cusp> four = {cusp_infinity(d4), cusp_zero(d4), cusp_of(1, 0, 1, 0, -4),
                            cusp_of(2, 1, 1, 0, -4)};
  Point3 w = vertex_position(four);
  CHECK(w.z.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.z.imag() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.zeta == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // permuting the cusps gives the same point
  std::vector<Cusp> perm = {four[2], four[0], four[3], four[1]};
  Point3 w2 = vertex_position(perm);
  CHECK(std::abs(w2.z - w.z) < 1e-12);
  CHECK(w2.zeta == doctest::Approx(w.zeta).epsilon(1e-12));

  // D=-3: all four distances agree at the solved point
  Disc d3(-3);
  std::vector<Cusp> e = {cusp_infinity(d3), cusp_zero(d3), cusp_of(1, 0, 1, 0, -3),
                         cusp_of(2, 1, 1, 0, -3)};
  Point3 v = vertex_position(e);
  double ref = cusp_distance(e[0], v);
  for (const Cusp& c : e) CHECK(cusp_distance(c, v) == doctest::Approx(ref).epsilon(1e-12));
  CHECK(v.zeta == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));

  // collinear cusps: infinity, 0, 1, 2
  std::vector<Cusp> line = {cusp_infinity(d4), cusp_zero(d4), cusp_of(1, 0, 1, 0, -4),
                            cusp_of(2, 0, 1, 0, -4)};
  CHECK_THROWS(vertex_position(line));
}
