#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hermtop/eisenstein.hpp"
#include "hermtop/gaussian.hpp"
#include "hermtop/render.hpp"
#include "hermtop/spine_geom.hpp"
#include "hermtop/topograph.hpp"

using json = nlohmann::ordered_json;
using namespace hermtop;

namespace {

// argument-level problems, reported with exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rat_json(const Rat& r) {
  json j;
  BigInt num = numerator(r), den = denominator(r);
  auto put = [](json& out, const char* key, const BigInt& v) {
    if (v >= INT64_MIN && v <= INT64_MAX)
      out[key] = static_cast<long long>(v);
    else
      out[key] = v.str();
  };
  put(j, "num", num);
  put(j, "den", den);
  return j;
}

json big_json(const BigInt& v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<long long>(v);
  return v.str();
}

json elem_json(const RingElem& e) { return json{{"x", e.x}, {"y", e.y}, {"d", e.d}}; }

json vec_json(const Vec2A& v) {
  return json{{"x", json{{"x", v.x.x}, {"y", v.x.y}}}, {"y", json{{"x", v.y.x}, {"y", v.y.y}}}};
}

json mat_json(const Mat2A& m) {
  return json::array({json::array({elem_json(m.p), elem_json(m.q)}),
                      json::array({elem_json(m.r), elem_json(m.s)})});
}

json form_json(const HermitianForm& f) {
  return json{{"d", f.d()},
              {"a", f.a},
              {"c", f.c},
              {"nu", json{{"x", f.nu.num.x}, {"y", f.nu.num.y}}}};
}

HermitianForm parse_form(const std::string& text, long long d) {
  json j = json::parse(text);
  long long jd = j.value("d", d);
  if (d != 0 && jd != d)
    throw UsageError("form discriminant disagrees with --d");
  Disc disc(jd);
  long long a = j.at("a").get<long long>();
  long long c = j.at("c").get<long long>();
  long long nx = j.at("nu").at("x").get<long long>();
  long long ny = j.at("nu").at("y").get<long long>();
  return HermitianForm(a, c, DualElem(RingElem(nx, ny, jd)));
}

QuadraticForm parse_qform(const std::string& text) {
  QuadraticForm f;
  if (std::sscanf(text.c_str(), "%lld,%lld,%lld", &f.a, &f.b2, &f.c) != 3)
    throw UsageError("expected --form a,b2,c");
  return f;
}

Window parse_window(const std::string& text) {
  Window w;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.y0, &w.x1, &w.y1) != 4)
    throw UsageError("expected --window x0,y0,x1,y1");
  return w;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

json ocean_json_e(const OceanGraphE& g) {
  json cells = json::array(), vertices = json::array(), edges = json::array();
  for (auto& [k, c] : g.cells)
    cells.push_back(json{{"x", vec_json(c.x)}, {"y", vec_json(c.y)}, {"Fx", c.fx},
                         {"Fy", c.fy}, {"depth", c.depth}});
  for (auto& [k, v] : g.vertices)
    vertices.push_back(json{{"u", vec_json(v.ub.u)},
                            {"v", vec_json(v.ub.v)},
                            {"labels", json::array({v.lbl.a, v.lbl.b, v.lbl.c, v.lbl.d})},
                            {"inv", inv_vertex(v.lbl)}});
  for (auto& [k, e] : g.edges) edges.push_back(json{{"inv", e.inv_e}});
  return json{{"cells", cells}, {"vertices", vertices}, {"edges", edges}};
}

json ocean_json_g(const OceanGraphG& g) {
  json cells = json::array(), vertices = json::array(), edges = json::array();
  for (auto& [k, c] : g.cells)
    cells.push_back(json{{"x", vec_json(c.x)}, {"y", vec_json(c.y)}, {"Fx", c.fx},
                         {"Fy", c.fy}, {"depth", c.depth}});
  for (auto& [k, v] : g.vertices) {
    json pairs = json::array();
    for (auto& pr : v.pairs) pairs.push_back(json::array({pr[0], pr[1]}));
    vertices.push_back(json{{"r", vec_json(v.v.r)},
                            {"s", vec_json(v.v.s)},
                            {"pairs", pairs},
                            {"inv", v.inv}});
  }
  for (auto& [k, e] : g.edges) edges.push_back(json{{"inv", e.inv_e}});
  return json{{"cells", cells}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topographs, spines and oceans of integral binary forms"};
  app.require_subcommand(1);

  // river
  auto* river = app.add_subcommand("river", "trace the river of an indefinite quadratic form");
  std::string river_form;
  std::string river_svg;
  int river_depth = 7;
  bool river_json = true;
  river->add_option("--form", river_form, "coefficients a,b2,c")->required();
  river->add_flag("--json", river_json, "emit JSON (the default)");
  river->add_option("--svg", river_svg, "write a topograph figure to this file");
  river->add_option("--depth", river_depth, "figure recursion depth");

  // minimum
  auto* minimum = app.add_subcommand("minimum", "minimum of |f| for quadratic or hermitian forms");
  std::string min_qform, min_hform;
  long long min_d = 0;
  minimum->add_option("--form", min_hform, "quadratic a,b2,c or hermitian JSON");
  minimum->add_option("--d", min_d, "discriminant of the quadratic field");

  // well
  auto* well = app.add_subcommand("well", "well of a positive definite hermitian form (D=-3)");
  std::string well_form;
  long long well_d = -3;
  well->add_option("--d", well_d)->check(CLI::IsMember({-3}));
  well->add_option("--form", well_form, "hermitian form JSON")->required();

  // ocean
  auto* ocean = app.add_subcommand("ocean", "explore the ocean of an indefinite anisotropic form");
  std::string ocean_form;
  long long ocean_d = -3;
  int ocean_radius = 4;
  ocean->add_option("--d", ocean_d)->check(CLI::IsMember({-3, -4}));
  ocean->add_option("--form", ocean_form)->required();
  ocean->add_option("--radius", ocean_radius);

  // classify
  auto* classify = app.add_subcommand("classify", "GL2(A)-classes of a fixed discriminant");
  long long cls_d = -3, cls_disc = 0;
  int cls_jobs = 1;
  classify->add_option("--d", cls_d)->check(CLI::IsMember({-3, -4}));
  classify->add_option("--disc", cls_disc)->required();
  classify->add_option("--jobs", cls_jobs)->check(CLI::PositiveNumber);

  // uf-group
  auto* uf = app.add_subcommand("uf-group", "generators and orbits of the symmetry group U(f)");
  std::string uf_form;
  long long uf_d = -3;
  int uf_radius = 4;
  uf->add_option("--d", uf_d)->check(CLI::IsMember({-3, -4}));
  uf->add_option("--form", uf_form)->required();
  uf->add_option("--radius", uf_radius);

  // spine-cell
  auto* cell = app.add_subcommand("spine-cell", "fundamental 2-cell of the spine at infinity");
  long long cell_d = -3;
  bool cell_voronoi = false;
  cell->add_option("--d", cell_d)->required();
  cell->add_flag("--voronoi", cell_voronoi, "emit the Voronoi cell of the lattice instead");

  // tile-horosphere
  auto* tile = app.add_subcommand("tile-horosphere", "horosphere tiling at the infinite cusp");
  long long tile_d = -3;
  std::string tile_window = "-2,-2,2,2", tile_svg;
  tile->add_option("--d", tile_d)->required();
  tile->add_option("--window", tile_window);
  tile->add_option("--svg", tile_svg, "write the figure to this file");

  // render-ocean
  auto* rocean = app.add_subcommand("render-ocean", "project the ocean to the Poincare disk");
  std::string ro_form, ro_out;
  long long ro_d = -4;
  int ro_radius = 4;
  bool ro_coords = false;
  rocean->add_option("--d", ro_d)->check(CLI::IsMember({-3, -4}));
  rocean->add_option("--form", ro_form)->required();
  rocean->add_option("--radius", ro_radius);
  rocean->add_option("--out", ro_out, "SVG output path");
  rocean->add_flag("--coords", ro_coords, "dump disk coordinates as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (river->parsed()) {
      QuadraticForm f = parse_qform(river_form);
      RiverResult r = trace_river(f);
      json period = json::array();
      for (const auto& e : r.period)
        period.push_back(json{{"neg", big_json(e.neg)},
                              {"pos", big_json(e.pos)},
                              {"turn", std::string(1, e.turn)}});
      json out{{"form", json{{"a", f.a}, {"b2", f.b2}, {"c", f.c}}},
               {"disc", big_json(r.disc)},
               {"min_abs", big_json(r.min_abs)},
               {"min_vec", json{{"m", big_json(r.min_vec.m)}, {"n", big_json(r.min_vec.n)}}},
               {"automorph", json::array({json::array({big_json(r.automorph[0][0]),
                                                       big_json(r.automorph[0][1])}),
                                          json::array({big_json(r.automorph[1][0]),
                                                       big_json(r.automorph[1][1])})})},
               {"period", period}};
      std::cout << out.dump(2) << "\n";
      if (!river_svg.empty()) write_file(river_svg, svg_topograph(f, river_depth));
    } else if (minimum->parsed()) {
      if (min_hform.empty()) throw UsageError("minimum: --form is required");
      if (min_hform.find('{') == std::string::npos) {
        QuadraticForm f = parse_qform(min_hform);
        RiverResult r = trace_river(f);
        json out{{"kind", "quadratic"},
                 {"min_abs", big_json(r.min_abs)},
                 {"min_vec", json{{"m", big_json(r.min_vec.m)}, {"n", big_json(r.min_vec.n)}}}};
        std::cout << out.dump(2) << "\n";
      } else {
        HermitianForm f = parse_form(min_hform, min_d);
        long long delta = hdisc(f);
        json out{{"kind", "hermitian"}, {"disc", delta}};
        if (delta < 0) {
          if (f.d() == -3) {
            WellResult w = find_well(f.a > 0 ? f : HermitianForm(-f.a, -f.c, DualElem(-f.nu.num)));
            long long m = std::min(std::min(w.lbl.a, w.lbl.b), std::min(w.lbl.c, w.lbl.d));
            out["min_abs"] = m;
            out["method"] = "well";
          } else {
            GMinVertex m = find_min_vertex_g(f.a > 0 ? f : HermitianForm(-f.a, -f.c, DualElem(-f.nu.num)));
            long long mn = -1;
            for (const Vec2A& w : vertex_vectors(m.v)) {
              long long v = std::llabs(heval(f, w));
              if (mn < 0 || v < mn) mn = v;
            }
            out["min_abs"] = mn;
            out["method"] = "minimal-vertex";
          }
        } else {
          if (f.d() == -3) {
            OceanSummary s = ocean_summary(f);
            out["min_abs"] = s.min_abs;
          } else {
            OceanSummaryG s = ocean_summary_g(f);
            out["min_abs"] = s.min_abs;
          }
          out["method"] = "ocean";
        }
        std::cout << out.dump(2) << "\n";
      }
    } else if (well->parsed()) {
      HermitianForm f = parse_form(well_form, well_d);
      WellResult w = find_well(f);
      auto g = greeks(w.lbl);
      json cow = json::array();
      for (auto& c : w.co_wells)
        cow.push_back(json::array({c.lbl.a, c.lbl.b, c.lbl.c, c.lbl.d}));
      json out{{"labels", json::array({w.lbl.a, w.lbl.b, w.lbl.c, w.lbl.d})},
               {"greeks", json::array({g.alpha, g.beta, g.gamma, g.delta})},
               {"inv", inv_vertex(w.lbl)},
               {"u", vec_json(w.ub.u)},
               {"v", vec_json(w.ub.v)},
               {"co_wells", cow}};
      std::cout << out.dump(2) << "\n";
    } else if (ocean->parsed()) {
      HermitianForm f = parse_form(ocean_form, ocean_d);
      json out;
      if (f.d() == -3)
        out = ocean_json_e(ocean_graph_e(f, ocean_radius));
      else
        out = ocean_json_g(ocean_graph_g(f, ocean_radius));
      out["form"] = form_json(f);
      std::cout << out.dump(2) << "\n";
    } else if (classify->parsed()) {
      json classes = json::array();
      if (cls_d == -3) {
        for (const ClassE& c : classify_disc_e(cls_disc, cls_jobs))
          classes.push_back(json{{"labels", c.key},
                                 {"rep", form_json(c.rep)},
                                 {"min_abs", c.min_abs}});
      } else {
        for (const ClassG& c : classify_disc_g(cls_disc, cls_jobs))
          classes.push_back(json{{"labels", c.key},
                                 {"rep", form_json(c.rep)},
                                 {"min_abs", c.min_abs}});
      }
      json out{{"d", cls_d}, {"disc", cls_disc}, {"count", classes.size()},
               {"classes", classes}};
      std::cout << out.dump(2) << "\n";
    } else if (uf->parsed()) {
      HermitianForm f = parse_form(uf_form, uf_d);
      json out{{"form", form_json(f)}};
      if (f.d() == -3) {
        UfResult r = uf_generators_e(f, uf_radius);
        json gens = json::array();
        for (const Mat2A& m : r.generators) gens.push_back(mat_json(m));
        out["generators"] = gens;
        out["vertex_orbits"] = r.vertex_orbits;
        out["edge_orbits"] = r.edge_orbits;
        out["cell_orbits"] = r.cell_orbits;
        out["stabilizer_orders"] = r.vertex_stabilizer_orders;
        if (!r.presentation_exponents.empty())
          out["presentation_exponents"] = r.presentation_exponents;
      } else {
        UfResultG r = uf_generators_g(f, uf_radius);
        json gens = json::array();
        for (const Mat2A& m : r.generators) gens.push_back(mat_json(m));
        json orbits = json::array();
        for (const auto& vo : r.vertex_orbits) {
          json pairs = json::array();
          for (auto& pr : vo.pairs) pairs.push_back(json::array({pr[0], pr[1]}));
          orbits.push_back(json{{"inv", vo.inv},
                                {"pairs", pairs},
                                {"stabilizer_order", vo.stabilizer_order},
                                {"stabilizer_cyclic", vo.stabilizer_cyclic}});
        }
        out["generators"] = gens;
        out["vertex_orbits"] = orbits.size();
        out["vertex_orbit_detail"] = orbits;
        out["edge_orbits"] = r.edge_orbits;
        out["cell_orbits"] = r.cell_orbits;
        json einv = json::array();
        for (long long v : r.edge_inv_values) einv.push_back(v);
        out["edge_inv_values"] = einv;
        if (!r.presentation_exponents.empty()) {
          out["presentation_exponents"] = r.presentation_exponents;
          out["presentation"] = r.presentation;
        }
      }
      std::cout << out.dump(2) << "\n";
    } else if (cell->parsed()) {
      Disc dd(cell_d);
      ExactPolygon poly = cell_voronoi ? voronoi_cell(dd) : fundamental_cell(dd);
      json verts = json::array(), eu = json::array();
      for (const ExactPoint& p : poly) {
        verts.push_back(json{{"p", rat_json(p.p)}, {"q", rat_json(p.q)}});
        auto z = embed_exact(p, dd);
        eu.push_back(json::array({z.real(), z.imag()}));
      }
      json out{{"d", cell_d},
               {"kind", cell_voronoi ? "voronoi" : "fundamental"},
               {"vertices", verts},
               {"euclidean", eu}};
      std::cout << out.dump(2) << "\n";
    } else if (tile->parsed()) {
      Disc dd(tile_d);
      Window win = parse_window(tile_window);
      auto cells = horosphere_tiling(dd, win);
      double area = 0;
      for (const auto& c : cells) {
        double s = 0;
        for (size_t i = 0; i < c.poly.size(); ++i) {
          const auto& a = c.poly[i];
          const auto& b = c.poly[(i + 1) % c.poly.size()];
          s += a.real() * b.imag() - b.real() * a.imag();
        }
        area += 0.5 * std::abs(s);
      }
      if (!tile_svg.empty()) write_file(tile_svg, svg_tiling(cells, win));
      json out{{"d", tile_d},
               {"cells", cells.size()},
               {"window_area", (win.x1 - win.x0) * (win.y1 - win.y0)},
               {"covered_area", area}};
      std::cout << out.dump(2) << "\n";
    } else if (rocean->parsed()) {
      HermitianForm f = parse_form(ro_form, ro_d);
      OceanProjection p;
      if (f.d() == -3)
        p = project_ocean(f, projection_input_e(ocean_graph_e(f, ro_radius)));
      else
        p = project_ocean(f, projection_input_g(ocean_graph_g(f, ro_radius)));
      if (!ro_out.empty()) write_file(ro_out, svg_ocean(p));
      json out{{"vertices", p.vertices.size()}, {"cells", p.cells.size()}};
      if (ro_coords) {
        json coords = json::array();
        for (const DiskPoint& v : p.vertices) coords.push_back(json::array({v.u, v.v}));
        out["disk_coords"] = coords;
      }
      std::cout << out.dump(2) << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad form JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
