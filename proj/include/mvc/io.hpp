#ifndef MVC_IO_HPP
#define MVC_IO_HPP

/*! \file
    \brief Text formats for site systems and H-representations, and SVG output.

Site file:
\code
dim 2
s1 0 0
t1 1 0
S: s1
\endcode
H-representation file: a `dim n` line, then one `a1 ... an | b` row per line.
Coordinates may be decimals or exact `p/q` tokens.
*/

#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvc/cell_ops.hpp"
#include "mvc/core.hpp"

namespace mvc::io {

/// Shortest form that still round-trips: 17 significant digits.
inline std::string format_number(double v, int digits = 17) {
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string format_number(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct SiteFile {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> coords;  // raw tokens
  std::vector<std::string> s_labels;

  bool exact() const {
    for (const auto& row : coords)
      for (const auto& t : row)
        if (t.find('/') != std::string::npos) return true;
    return false;
  }
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

inline std::size_t parse_dim(const std::string& line) {
  auto t = tokens(line);
  std::size_t n = 0;
  if (t.size() != 2 || t[0] != "dim") throw Error(Errc::ParseError, "expected 'dim <n>', got '" + line + "'");
  auto [p, ec] = std::from_chars(t[1].data(), t[1].data() + t[1].size(), n);
  if (ec != std::errc() || p != t[1].data() + t[1].size() || n == 0)
    throw Error(Errc::ParseError, "bad dimension '" + t[1] + "'");
  return n;
}

}  // namespace detail

inline double parse_double(const std::string& tok) {
  if (tok.find('/') != std::string::npos) return parse_rational(tok).convert_to<double>();
  double v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v))
    throw Error(Errc::ParseError, "bad number '" + tok + "'");
  return v;
}

inline SiteFile parse_site_file(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty site file");
  SiteFile f;
  f.dim = detail::parse_dim(lines.front());
  if (lines.size() < 2) throw Error(Errc::ParseError, "missing 'S:' line");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    auto t = detail::tokens(lines[i]);
    if (t.size() != f.dim + 1)
      throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": expected a label and " + std::to_string(f.dim) +
                                        " coordinates");
    for (unsigned char ch : t[0])
      if (ch > 127) throw Error(Errc::ParseError, "labels must be ASCII");
    if (t[0] == "S:") throw Error(Errc::ParseError, "'S:' must be the last line");
    for (std::size_t k = 1; k < t.size(); ++k) {
      if (t[k].find('/') != std::string::npos) {
        parse_rational(t[k]);
      } else {
        parse_double(t[k]);
      }
    }
    f.labels.push_back(t[0]);
    f.coords.emplace_back(t.begin() + 1, t.end());
  }
  auto last = detail::tokens(lines.back());
  if (last.empty() || last[0] != "S:") throw Error(Errc::ParseError, "last line must start with 'S:'");
  f.s_labels.assign(last.begin() + 1, last.end());
  std::set<std::string> known(f.labels.begin(), f.labels.end());
  if (known.size() != f.labels.size()) throw Error(Errc::ParseError, "duplicate site label");
  std::set<std::string> chosen;
  for (const auto& l : f.s_labels) {
    if (!known.count(l)) throw Error(Errc::ParseError, "unknown label '" + l + "' in S");
    if (!chosen.insert(l).second) throw Error(Errc::ParseError, "label '" + l + "' repeated in S");
  }
  if (chosen.empty() || chosen.size() == known.size())
    throw Error(Errc::ParseError, "S must be a proper nonempty subset of the sites");
  return f;
}

inline SiteSystem to_site_system(const SiteFile& f) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    std::vector<double> c;
    for (const auto& t : f.coords[i]) c.push_back(parse_double(t));
    sites.push_back({f.labels[i], Point(std::move(c))});
  }
  return SiteSystem(f.dim, std::move(sites), f.s_labels);
}

inline ExactSiteSystem to_exact_site_system(const SiteFile& f) {
  std::vector<ExactSite> sites;
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    std::vector<Rational> c;
    for (const auto& t : f.coords[i]) c.push_back(parse_rational(t));
    sites.push_back({f.labels[i], ExactPoint(std::move(c))});
  }
  return ExactSiteSystem(f.dim, std::move(sites), f.s_labels);
}

template <class T>
std::string emit_sites(const BasicSiteSystem<T>& sys) {
  std::string out = "dim " + std::to_string(sys.dim()) + "\n";
  for (const auto& s : sys.sites()) {
    out += s.label;
    for (const auto& c : s.point.coords()) out += " " + format_number(c);
    out += "\n";
  }
  out += "S:";
  for (const auto& l : sys.s_labels()) out += " " + l;
  out += "\n";
  return out;
}

inline HPolyhedron parse_hrep(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty hrep file");
  const std::size_t n = detail::parse_dim(lines.front());
  std::vector<Halfspace> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto t = detail::tokens(lines[i]);
    if (t.size() != n + 2 || t[n] != "|")
      throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": expected 'a1 ... a" + std::to_string(n) + " | b'");
    std::vector<double> a;
    for (std::size_t k = 0; k < n; ++k) a.push_back(parse_double(t[k]));
    rows.emplace_back(std::move(a), parse_double(t[n + 1]));
  }
  return HPolyhedron(n, std::move(rows));
}

template <class T>
std::string format_row(const BasicHalfspace<T>& h) {
  std::string out;
  for (const auto& a : h.normal()) out += format_number(a) + " ";
  return out + "| " + format_number(h.offset());
}

template <class T>
std::string emit_hrep(const BasicHPolyhedron<T>& p) {
  std::string out = "dim " + std::to_string(p.dim()) + "\n";
  for (const auto& h : p.halfspaces()) out += format_row(h) + "\n";
  return out;
}

struct RenderSpec {
  Box bbox;
  int width_px = 600;
  int height_px = 600;
  std::uint64_t palette_seed = 1;
};

namespace detail {

inline std::string hsl_hex(double h, double s, double l) {
  auto f = [&](double n) {
    const double k = std::fmod(n + h * 12, 12.0);
    const double a = s * std::min(l, 1 - l);
    return l - a * std::max(-1.0, std::min({k - 3, 9 - k, 1.0}));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(std::lround(255 * f(0))), int(std::lround(255 * f(8))),
                int(std::lround(255 * f(4))));
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// SVG 1.1 drawing of the nonempty cells (clipped to the box) and the sites.
inline std::string render_svg(const std::vector<DiagramCell>& cells, const std::vector<Site>& sites,
                              const RenderSpec& spec) {
  if (spec.bbox.dim() != 2) throw Error(Errc::DimensionMismatch, "rendering is planar");
  if (spec.width_px <= 0 || spec.height_px <= 0) throw Error(Errc::PreconditionViolated, "image size must be positive");
  const double W = spec.width_px, H = spec.height_px;
  const auto& b = spec.bbox;
  auto px = [&](double x) { return (x - b.lo[0]) / (b.hi[0] - b.lo[0]) * W; };
  auto py = [&](double y) { return H - (y - b.lo[1]) / (b.hi[1] - b.lo[1]) * H; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };

  std::mt19937_64 eng(spec.palette_seed);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
     << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << " " << spec.height_px << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << spec.height_px
     << "\" fill=\"white\"/>\n";
  // Seeded start, then golden-ratio steps so consecutive cells stay apart in hue.
  double hue = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  for (const auto& c : cells) {
    hue = std::fmod(hue + 0.6180339887498949, 1.0);
    if (c.empty || c.clipped.size() < 3) continue;
    std::string name;
    for (const auto& l : c.subset) name += (name.empty() ? "" : ",") + l;
    os << "<path d=\"";
    for (std::size_t i = 0; i < c.clipped.size(); ++i)
      os << (i ? " L " : "M ") << num(px(c.clipped[i][0])) << " " << num(py(c.clipped[i][1]));
    os << " Z\" fill=\"" << detail::hsl_hex(hue, 0.55, 0.75) << "\" fill-opacity=\"0.7\" stroke=\"#333333\""
       << " stroke-width=\"1\" stroke-dasharray=\"4 3\"><title>" << detail::xml_escape(name) << "</title></path>\n";
    double cx = 0, cy = 0;
    for (const auto& v : c.clipped) {
      cx += v[0];
      cy += v[1];
    }
    cx /= static_cast<double>(c.clipped.size());
    cy /= static_cast<double>(c.clipped.size());
    os << "<text x=\"" << num(px(cx)) << "\" y=\"" << num(py(cy)) << "\" font-size=\"11\" text-anchor=\"middle\""
       << " fill=\"#222222\">{" << detail::xml_escape(name) << "}</text>\n";
  }
  for (const auto& s : sites) {
    os << "<circle cx=\"" << num(px(s.point[0])) << "\" cy=\"" << num(py(s.point[1]))
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(px(s.point[0]) + 5) << "\" y=\"" << num(py(s.point[1]) - 5)
       << "\" font-size=\"12\" fill=\"black\">" << detail::xml_escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mvc::io

#endif  // MVC_IO_HPP
