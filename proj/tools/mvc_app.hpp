#ifndef MVC_TOOLS_APP_HPP
#define MVC_TOOLS_APP_HPP

// Command-line front end. run() is kept separate from main() so tests can
// drive it in-process and check the exit code.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "mvc/mvc.hpp"

namespace mvc::cli {

enum Exit : int { Ok = 0, Falsified = 1, ParseFailure = 2, Invariant = 3, UnsupportedDimension = 4, Impossible = 5 };

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline std::string num12(double v) { return io::format_number(v, 12); }
inline std::string num12(const Rational& v) { return io::format_number(v); }

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + num12(x);
  return out;
}

inline std::string point_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) out += (i ? ", " : "") + io::format_number(p[i]);
  return out + ")";
}

template <class T>
void print_cell(const BasicHPolyhedron<T>& h, std::ostream& out) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    out << io::format_row(h.halfspaces()[i]);
    if (h.provenance()) out << "    (" << (*h.provenance())[i].first << ", " << (*h.provenance())[i].second << ")";
    out << "\n";
  }
}

template <class T>
void print_predicate(const BasicSiteSystem<T>& sys, const std::string& which, std::ostream& out) {
  PredicateReport<T> r;
  if (which == "empty") r = is_empty(sys);
  else if (which == "bounded") r = is_bounded(sys);
  else r = has_interior(sys);
  out << which << ": " << (r.value ? "true" : "false") << "\n";
  out << "method: " << r.method << "\n";
  if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
  if (const auto* m = r.multipliers()) {
    out << (which == "interior" ? "convex combination: " : "multipliers: ") << join(m->multipliers) << "\n";
  }
  if (const auto* w = r.witness()) out << "witness: " << join(w->coords()) << "\n";
}

inline std::string shape_report(const CellShape& s) {
  std::ostringstream os;
  os << to_string(s.tag);
  if (s.tag == ShapeTag::Singleton) os << " " << point_text(s.vertices.front());
  os << "\n";
  if (s.tag != ShapeTag::Singleton && !s.vertices.empty()) {
    os << "vertices:";
    for (const auto& v : s.vertices) os << " " << point_text(v);
    os << "\n";
  }
  std::vector<Point> rays;
  for (const auto& r : s.rays) {
    auto same = [&](const Point& q) { return std::abs(q[0] - r[0]) < 1e-9 && std::abs(q[1] - r[1]) < 1e-9; };
    if (std::none_of(rays.begin(), rays.end(), same)) rays.push_back(r);
  }
  if (!rays.empty()) {
    os << "rays:";
    for (const auto& r : rays) os << " " << point_text(r);
    os << "\n";
  }
  if (s.cyclic) os << "cyclic: " << (*s.cyclic ? "true" : "false") << "\n";
  if (s.parallel_unbounded_sides)
    os << "parallel_unbounded_sides: " << (*s.parallel_unbounded_sides ? "true" : "false") << "\n";
  if (s.numerically_ambiguous) os << "numerically_ambiguous: true\n";
  return os.str();
}

inline Point take_point(const std::vector<double>& p, std::size_t& at) {
  if (at + 2 > p.size()) throw Error(Errc::ParseError, "not enough shape parameters");
  Point q{p[at], p[at + 1]};
  at += 2;
  return q;
}

struct ShapeArgs {
  std::string shape;
  std::vector<double> params, d, v1, v2;
  double alpha = 0, beta = 1, gamma = 0, b1 = 0, b2 = 0;
  int sigma = 2, tau = 4;
};

inline ConstructionResult construct_from_args(const ShapeArgs& a) {
  std::size_t at = 0;
  auto expect = [&](std::size_t n) {
    if (a.params.size() != n)
      throw Error(Errc::ParseError, "shape '" + a.shape + "' takes " + std::to_string(n) + " numbers");
  };
  const std::string& s = a.shape;
  if (s == "empty") return construct(TargetShape{EmptyTarget{}});
  if (s == "singleton") {
    expect(2);
    return construct(TargetShape{SingletonTarget{take_point(a.params, at)}});
  }
  if (s == "halfspace" || s == "halfplane") {
    if (a.d.empty()) throw Error(Errc::ParseError, "halfspace needs --d");
    return construct(TargetShape{HalfspaceTarget{a.d, a.gamma, a.sigma, a.tau}});
  }
  if (s == "strip") {
    if (a.d.empty()) throw Error(Errc::ParseError, "strip needs --d");
    return construct(TargetShape{StripTarget{a.d, a.alpha, a.beta}});
  }
  if (s == "wedge") {
    if (a.v1.empty() || a.v2.empty()) throw Error(Errc::ParseError, "wedge needs --v1 and --v2");
    return construct(TargetShape{WedgeTarget{a.v1, a.v2, a.b1, a.b2}});
  }
  if (s == "quadrilateral" || s == "quad") {
    expect(8);
    std::array<Point, 4> q;
    for (auto& p : q) p = take_point(a.params, at);
    return construct(TargetShape{NonCyclicQuadTarget{q}});
  }
  if (s == "triangle") {
    expect(6);
    std::vector<Point> t;
    for (int i = 0; i < 3; ++i) t.push_back(take_point(a.params, at));
    ::mvc::detail::plane::Chain chain{t, std::nullopt, std::nullopt};
    const int o = ::mvc::detail::plane::orientation(chain);
    if (o == 0) throw Error(Errc::NonConvexInput, "degenerate triangle");
    return construct(::mvc::detail::plane::chain_hrep(chain, o));
  }
  if (s == "unbounded-three") {
    expect(8);
    Point v1 = take_point(a.params, at), v2 = take_point(a.params, at);
    Point r1 = take_point(a.params, at), r2 = take_point(a.params, at);
    return construct(TargetShape{UnboundedThreeTarget{v1, v2, r1, r2}});
  }
  if (s == "unbounded-quad-parallel") {
    expect(8);
    Point pa = take_point(a.params, at), pb = take_point(a.params, at);
    Point pc = take_point(a.params, at), r = take_point(a.params, at);
    return construct(TargetShape{UnboundedQuadParallelTarget{pa, pb, pc, r}});
  }
  if (s == "unbounded-quad-general") {
    expect(10);
    Point c = take_point(a.params, at), pa = take_point(a.params, at), d = take_point(a.params, at);
    Point r1 = take_point(a.params, at), r2 = take_point(a.params, at);
    return construct(TargetShape{UnboundedQuadGeneralTarget{c, pa, d, r1, r2}});
  }
  throw Error(Errc::ParseError, "unknown shape '" + s + "'");
}

inline Box default_box(const SiteSystem& sys, double factor) {
  std::vector<double> lo(sys.dim(), INFINITY), hi(sys.dim(), -INFINITY);
  for (const auto& s : sys.sites())
    for (std::size_t i = 0; i < sys.dim(); ++i) {
      lo[i] = std::min(lo[i], s.point[i]);
      hi[i] = std::max(hi[i], s.point[i]);
    }
  for (std::size_t i = 0; i < sys.dim(); ++i) {
    const double c = (lo[i] + hi[i]) / 2, h = std::max(1.0, factor * (hi[i] - lo[i]) / 2);
    lo[i] = c - h;
    hi[i] = c + h;
  }
  return Box(lo, hi);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-k multipoint Voronoi cells: predicates, classification, constructions"};
  app.name("mvc");
  app.require_subcommand(1);

  std::string input, hrep_path, svg_path, predicate;
  bool reduce = false;
  auto* cell = app.add_subcommand("cell", "Print the H-representation of the cell");
  cell->add_option("input", input, "site file ('-' for stdin)")->required();
  cell->add_flag("--reduce", reduce, "drop redundant rows");

  auto* check = app.add_subcommand("check", "Evaluate a predicate with its certificate");
  check->add_option("input", input, "site file ('-' for stdin)")->required();
  check->add_option("--predicate", predicate, "empty | bounded | interior | ball")
      ->required()
      ->check(CLI::IsMember({"empty", "bounded", "interior", "ball"}));

  auto* classify = app.add_subcommand("classify", "Classify a planar cell");
  classify->add_option("input", input, "site file ('-' for stdin)")->required();

  detail::ShapeArgs shape;
  auto* cons = app.add_subcommand("construct", "Emit sites realizing a planar shape");
  auto* shape_opt = cons->add_option("--shape", shape.shape, "shape tag");
  cons->add_option("params", shape.params, "shape coordinates");
  auto* target_opt = cons->add_option("--target", hrep_path, "hrep file with at most four rows");
  shape_opt->excludes(target_opt);
  cons->add_option("--d", shape.d, "unit normal")->expected(1, 64);
  cons->add_option("--alpha", shape.alpha);
  cons->add_option("--beta", shape.beta);
  cons->add_option("--gamma", shape.gamma);
  cons->add_option("--sigma", shape.sigma);
  cons->add_option("--tau", shape.tau);
  cons->add_option("--v1", shape.v1)->expected(1, 64);
  cons->add_option("--v2", shape.v2)->expected(1, 64);
  cons->add_option("--b1", shape.b1);
  cons->add_option("--b2", shape.b2);

  std::size_t k = 1, resolution = 200;
  std::vector<double> bbox;
  int width = 600, height = 600;
  std::uint64_t palette_seed = 1;
  auto* diag = app.add_subcommand("diagram", "Enumerate the order-k cells and render them");
  diag->add_option("input", input, "site file ('-' for stdin)")->required();
  diag->add_option("-k", k, "order")->required();
  diag->add_option("--svg", svg_path, "SVG output path");
  diag->add_option("--bbox", bbox, "xmin ymin xmax ymax")->expected(4);
  diag->add_option("--resolution", resolution, "tiling check samples per axis");
  diag->add_option("--width", width);
  diag->add_option("--height", height);
  diag->add_option("--palette-seed", palette_seed);

  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Compare the H-representation with the distance definition");
  verify->add_option("input", input, "site file ('-' for stdin)")->required();
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--hrep", hrep_path, "check this hrep instead of the computed one");

  std::vector<const char*> argv{"mvc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : ParseFailure;
  }

  try {
    if (*cons) {
      if (shape.shape.empty() == hrep_path.empty()) throw Error(Errc::ParseError, "give exactly one of --shape, --target");
      ConstructionResult r = hrep_path.empty() ? detail::construct_from_args(shape)
                                               : construct(io::parse_hrep(detail::read_input(hrep_path, in)));
      if (auto* reason = std::get_if<ImpossibilityReason>(&r)) {
        out << "impossible (" << to_string(reason->kind) << "): " << reason->citation << "\n";
        return Impossible;
      }
      out << io::emit_sites(std::get<SiteSystem>(r));
      return Ok;
    }

    const io::SiteFile file = io::parse_site_file(detail::read_input(input, in));

    if (*cell) {
      if (file.exact() && !reduce) {
        detail::print_cell(cell_hrep(io::to_exact_site_system(file)), out);
      } else {
        auto h = cell_hrep(io::to_site_system(file));
        detail::print_cell(reduce ? remove_redundant(h) : h, out);
      }
      return Ok;
    }
    if (*check) {
      if (predicate == "ball") {
        auto b = ball_witness(io::to_site_system(file));
        if (!b) {
          out << "ball: none (empty cell)\n";
        } else {
          out << "ball: center " << detail::join(b->center.coords()) << " radius " << detail::num12(b->radius) << "\n";
        }
      } else if (file.exact()) {
        detail::print_predicate(io::to_exact_site_system(file), predicate, out);
      } else {
        detail::print_predicate(io::to_site_system(file), predicate, out);
      }
      return Ok;
    }
    if (*classify) {
      if (file.dim != 2) {
        err << "classify supports planar sites only (dim " << file.dim << ")\n";
        return UnsupportedDimension;
      }
      out << detail::shape_report(classify2d(io::to_site_system(file)));
      return Ok;
    }
    if (*diag) {
      if (file.dim != 2) {
        err << "diagram supports planar sites only (dim " << file.dim << ")\n";
        return UnsupportedDimension;
      }
      const SiteSystem sys = io::to_site_system(file);
      const Box box = bbox.empty() ? detail::default_box(sys, 1.5) : Box({bbox[0], bbox[1]}, {bbox[2], bbox[3]});
      const auto cells = diagram(sys.sites(), k, box);
      std::size_t empties = 0;
      for (const auto& c : cells) {
        out << "{";
        for (std::size_t i = 0; i < c.subset.size(); ++i) out << (i ? "," : "") << c.subset[i];
        out << "}: " << (c.empty ? "empty" : "nonempty") << "\n";
        empties += c.empty;
      }
      out << "subsets: " << cells.size() << " empty: " << empties << "\n";
      const auto t = tiling_check(cells, SampleGrid(box, resolution, palette_seed));
      out << "tiling: samples " << t.samples << " uncovered " << t.uncovered << " overlaps " << t.overlaps
          << " boundary " << t.skipped_boundary << "\n";
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw Error(Errc::ParseError, "cannot write '" + svg_path + "'");
        f << io::render_svg(cells, sys.sites(), io::RenderSpec{box, width, height, palette_seed});
      }
      return t.ok() ? Ok : Falsified;
    }
    if (*verify) {
      const SiteSystem sys = io::to_site_system(file);
      const HPolyhedron h = hrep_path.empty() ? cell_hrep(sys) : io::parse_hrep(detail::read_input(hrep_path, in));
      if (h.dim() != sys.dim()) throw Error(Errc::DimensionMismatch, "hrep and sites differ in dimension");
      const auto res = static_cast<std::size_t>(
          std::max(2.0, std::ceil(std::pow(static_cast<double>(samples), 1.0 / static_cast<double>(sys.dim())))));
      const auto r = agree(sys, h, SampleGrid(detail::default_box(sys, 2.0), res, seed));
      out << "samples: " << r.samples << "\ndisagreements: " << r.disagreements
          << "\nskipped_boundary: " << r.skipped_boundary << "\n";
      return r.disagreements == 0 ? Ok : Falsified;
    }
  } catch (const ImpossibleShape& e) {
    out << "impossible (" << to_string(e.reason().kind) << "): " << e.reason().citation << "\n";
    return Impossible;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::ParseError ? ParseFailure : Invariant;
  }
  return Ok;
}

}  // namespace mvc::cli

#endif  // MVC_TOOLS_APP_HPP
