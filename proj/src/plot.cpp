#include "okzar/plot.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace okzar {
namespace {

using Point = std::array<double, 2>;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::vector<Point> simplex_corners(std::size_t n) {
  if (n == 3) return {Point{300, 50}, Point{70, 450}, Point{530, 450}};
  // Regular tetrahedron (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1) seen obliquely.
  const double s = 115, cx = 300, cy = 270;
  const std::array<std::array<double, 3>, 4> t{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  std::vector<Point> out;
  for (const auto& p : t) out.push_back(Point{cx + s * 0.866 * (p[0] - p[1]), cy + s * ((p[0] + p[1]) * 0.5 - p[2])});
  return out;
}

Point project(const RatVec& x, const std::vector<Point>& corners) {
  double total = 0;
  for (const auto& c : x) total += c.get_d();
  Point p{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = x[i].get_d() / total;
    p[0] += w * corners[i][0];
    p[1] += w * corners[i][1];
  }
  return p;
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

RatVec parse_hyperplane(const std::string& text, std::size_t dim) {
  RatVec h;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    h.push_back(parse_rat(item));
  }
  require(h.size() == dim, ErrorKind::Input,
          "hyperplane needs " + std::to_string(dim) + " coefficients, got " + std::to_string(h.size()));
  return h;
}

std::vector<SliceCell> chamber_slices(const VarietyData& v, const RatVec& h) {
  const std::size_t n = v.n;
  require(h.size() == n, ErrorKind::Input, "hyperplane has the wrong dimension");
  bool meets = false, bounded = true;
  for (const auto& c : h) {
    if (c > 0) meets = true;
    else bounded = false;
  }
  require(meets, ErrorKind::Input, "hyperplane misses the interior of the effective cone");
  auto chambers = zariski_chambers(v);
  Rat bound = 0;
  auto widen = [&](const RatVec& g) {
    const Rat hg = dot(h, g);
    if (hg <= 0) return;
    Rat total = 0;
    for (const auto& x : g) total += x;
    Rat b = 2 * total / hg;
    if (b > bound) bound = b;
  };
  for (std::size_t i = 1; i <= n; ++i) widen(v.e_class(i));
  for (const auto& ch : chambers)
    for (const auto& g : ch.generators) widen(g);

  // Homogenized section: (x, t) with x in the chamber, h.x = t, t >= 0.
  RatVec eq = h;
  eq.push_back(-1);
  std::vector<RatVec> ineqs{unit_vector(n + 1, n)};
  if (!bounded) {
    RatVec clip(n + 1, Rat(-1));
    clip[n] = bound;
    ineqs.push_back(std::move(clip));
  }
  ConeRep section = cone_from_ineqs(n + 1, ineqs, std::vector<RatVec>{eq});

  std::vector<SliceCell> out;
  for (const auto& ch : chambers) {
    ConeRep lifted = intersect(product(ch.cone, cone_from_ineqs(1, std::vector<IntVec>{})), section);
    Polytope p = fiber_slice(lifted, {n}, RatVec{Rat(1)});
    if (dim(p) != static_cast<long>(n) - 1) continue;
    out.push_back(SliceCell{ch.support, ch.generator_names, std::move(p)});
  }
  return out;
}

std::string support_color(const std::vector<std::size_t>& support) {
  std::uint64_t hash = 14695981039346656037ull;
  std::string key = "{";
  for (auto i : support) key += std::to_string(i) + ",";
  key += "}";
  for (unsigned char c : key) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  const double hue = static_cast<double>(hash % 360), s = 0.55, l = 0.65;
  const double c = (1 - std::abs(2 * l - 1)) * s;
  const double hp = hue / 60;
  const double x = c * (1 - std::abs(std::fmod(hp, 2) - 1));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = l - c / 2;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

std::string render_svg(const VarietyData& v, const std::vector<SliceCell>& cells) {
  const std::size_t n = v.n;
  const auto corners = simplex_corners(n);
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"520\" viewBox=\"0 0 600 520\">\n"
    << "<title>" << v.name << " chambers</title>\n"
    << "<rect width=\"600\" height=\"520\" fill=\"white\"/>\n";

  for (const auto& cell : cells) {
    std::vector<Point> pts;
    for (const auto& x : cell.polygon.vertices) pts.push_back(project(x, corners));
    const auto poly = hull(pts);
    s << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) s << (i ? " " : "") << fmt(poly[i][0]) << "," << fmt(poly[i][1]);
    s << "\" fill=\"" << support_color(cell.support) << "\" fill-opacity=\"" << (n == 3 ? "0.85" : "0.35")
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const auto& cell : cells) {
    Point c{0, 0};
    for (const auto& x : cell.polygon.vertices) {
      Point p = project(x, corners);
      c[0] += p[0] / static_cast<double>(cell.polygon.vertices.size());
      c[1] += p[1] / static_cast<double>(cell.polygon.vertices.size());
    }
    s << "<text x=\"" << fmt(c[0]) << "\" y=\"" << fmt(c[1])
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">Cone("
      << join(cell.generator_names, ",") << ")</text>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      s << "<line x1=\"" << fmt(corners[i][0]) << "\" y1=\"" << fmt(corners[i][1]) << "\" x2=\"" << fmt(corners[j][0])
        << "\" y2=\"" << fmt(corners[j][1]) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    s << "<text x=\"" << fmt(corners[i][0]) << "\" y=\"" << fmt(corners[i][1] + (corners[i][1] < 260 ? -10 : 20))
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">E" << i + 1 << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

Json scene_json(const VarietyData& v, const RatVec& h, const std::vector<SliceCell>& cells) {
  Json j;
  j["variety"] = v.name;
  j["dim"] = v.n;
  j["hyperplane"] = to_json(h);
  Json list = Json::array();
  for (const auto& c : cells) {
    Json cell;
    Json sup = Json::array();
    for (auto i : c.support) sup.push_back("E" + std::to_string(i));
    cell["support"] = std::move(sup);
    cell["generators"] = c.generator_names;
    cell["color"] = support_color(c.support);
    Json poly = to_json(c.polygon);
    cell["vertices"] = poly["vertices"];
    cell["inequalities"] = poly["inequalities"];
    cell["equations"] = poly["equations"];
    list.push_back(std::move(cell));
  }
  j["cells"] = std::move(list);
  return j;
}

}  // namespace okzar
