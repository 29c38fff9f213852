#include "okzar/report.hpp"

#include <algorithm>
#include <fstream>

#include "okzar/plot.hpp"

namespace okzar {
namespace {

Json names(const std::vector<std::size_t>& indices, char symbol) {
  Json a = Json::array();
  for (auto i : indices) a.push_back(std::string(1, symbol) + std::to_string(i));
  return a;
}

Json class_json(const VarietyData& v, const RatVec& d) {
  Json j;
  j["E"] = to_json(d);
  j["expression"] = format_combination(d, 'E');
  if (is_nef(v, d)) j["D_expression"] = format_combination(d_coordinates(v, d), 'D');
  return j;
}

Json body_coordinates(std::size_t n) {
  Json a = Json::array();
  for (std::size_t i = 1; i <= n; ++i) a.push_back("nu" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) a.push_back("E" + std::to_string(i));
  return a;
}

Json cox_json(const CoxReport& r) {
  Json j;
  j["generators_form_hilbert_basis"] = r.generators_form_hilbert_basis;
  Json elems = Json::array();
  for (const auto& g : r.generators)
    elems.push_back(Json{{"valuation", to_json(g.valuation)}, {"divisor", to_json(g.divisor)}, {"label", g.label}});
  j["elements"] = std::move(elems);
  j["extra_elements"] = to_json(r.extra_elements);
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::Input, "cannot write '" + path.string() + "'");
  out << content;
  require(static_cast<bool>(out), ErrorKind::Input, "failed writing '" + path.string() + "'");
}

}  // namespace

Json make_report(const std::string& command, const std::string& variety, Json result) {
  Json j;
  j["command"] = command;
  j["variety"] = variety;
  j["result"] = std::move(result);
  return j;
}

ConeRep subcone(const VarietyData& v, const std::string& name) {
  auto it = v.subcones.find(name);
  if (it == v.subcones.end()) {
    std::string known;
    for (const auto& [k, _] : v.subcones) known += (known.empty() ? "" : ", ") + k;
    throw Error(ErrorKind::Input, "unknown subcone '" + name + "'" +
                                      (known.empty() ? std::string(" (none defined)") : " (known: " + known + ")"));
  }
  return cone_from_rays(v.n, it->second);
}

std::string format_polynomial(const EhrhartPoly& p, char var) {
  std::string out;
  for (std::size_t k = p.coefficients.size(); k-- > 0;) {
    const Rat& c = p.coefficients[k];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    Rat mag = abs(c);
    if (mag != 1 || k == 0) out += to_string(mag);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Json cmd_chambers(const VarietyData& v) {
  Json list = Json::array();
  for (const auto& ch : zariski_chambers(v)) {
    Json c;
    c["support"] = names(ch.support, 'E');
    c["generators"] = ch.generator_names;
    c["rays"] = to_json(ch.cone.rays);
    c["inequalities"] = to_json(ch.cone.ineqs);
    list.push_back(std::move(c));
  }
  Json r;
  r["count"] = list.size();
  r["chambers"] = std::move(list);
  return make_report("chambers", v.name, std::move(r));
}

Json cmd_pairing(const VarietyData& v) {
  FacetPairing fp = facet_pairing(v);
  ConeRep nef = nef_cone(v);
  Json r;
  r["nef_inequalities"] = to_json(nef.ineqs);
  r["distinguished"] = Json{{"functional", to_json(fp.distinguished.functional)},
                            {"generators", names(fp.d_indices(fp.distinguished), 'D')}};
  Json pairs = Json::array();
  for (const auto& [i, f] : fp.by_fixed)
    pairs.push_back(Json{{"fixed", "E" + std::to_string(i)},
                         {"functional", to_json(f.functional)},
                         {"generators", names(fp.d_indices(f), 'D')}});
  r["pairs"] = std::move(pairs);
  return make_report("pairing", v.name, std::move(r));
}

Json cmd_zariski(const VarietyData& v, const std::string& divisor) {
  RatVec d = parse_divisor(v, divisor);
  ZariskiDecomposition z = zariski_decompose(v, d);
  Json r;
  r["divisor"] = class_json(v, d);
  r["positive"] = class_json(v, z.positive);
  r["negative"] = class_json(v, z.negative);
  r["negative_support"] = names(z.support, 'E');
  r["chamber_support"] = names(z.chamber_support, 'E');
  return make_report("zariski", v.name, std::move(r));
}

Json cmd_nobody(const VarietyData& v, const std::optional<std::string>& divisor,
                const std::optional<std::string>& restrict_to) {
  require(!(divisor && restrict_to), ErrorKind::Input, "--divisor and --restrict are mutually exclusive");
  OkounkovBody b = global_body(v);
  Json r;
  if (divisor) {
    RatVec d = parse_divisor(v, *divisor);
    r["mode"] = "divisor";
    r["divisor"] = class_json(v, d);
    r["body"] = to_json(divisor_body(b, d));
  } else {
    if (restrict_to) {
      b = restrict_body(b, subcone(v, *restrict_to));
      r["mode"] = "restricted";
      r["subcone"] = *restrict_to;
    } else {
      r["mode"] = "global";
    }
    r["coordinates"] = body_coordinates(v.n);
    r["body"] = to_json(b.cone);
  }
  return make_report("nobody", v.name, std::move(r));
}

Json cmd_hilbert(const Document& doc, const std::optional<std::string>& restrict_to) {
  if (const auto* c = std::get_if<ConeDocument>(&doc)) {
    require(!restrict_to, ErrorKind::Input, "--restrict needs a variety document");
    HilbertBasis hb = hilbert_basis(c->cone);
    Json r;
    r["cone"] = to_json(c->cone);
    r["generators_form_hilbert_basis"] = hb.elements == c->cone.rays;
    r["elements"] = to_json(hb.elements);
    std::vector<IntVec> extra;
    for (const auto& e : hb.elements)
      if (!std::binary_search(c->cone.rays.begin(), c->cone.rays.end(), e)) extra.push_back(e);
    r["extra_elements"] = to_json(extra);
    return make_report("hilbert", c->name, std::move(r));
  }
  const auto& v = std::get<VarietyData>(doc);
  OkounkovBody b = global_body(v);
  if (restrict_to) b = restrict_body(b, subcone(v, *restrict_to));
  Json r;
  if (restrict_to) r["subcone"] = *restrict_to;
  r["coordinates"] = body_coordinates(v.n);
  Json cox = cox_json(cox_report(v, b));
  for (auto& [k, val] : cox.items()) r[k] = val;
  return make_report("hilbert", v.name, std::move(r));
}

Json cmd_ehrhart(const VarietyData& v, const std::string& divisor) {
  RatVec d = parse_divisor(v, divisor);
  Polytope p = divisor_body(global_body(v), d);
  require(!p.empty(), ErrorKind::Input, "divisor '" + divisor + "' is not effective");
  EhrhartPoly e = ehrhart_polynomial(p);
  Json r;
  r["divisor"] = class_json(v, d);
  r["vertices"] = to_json(p.vertices);
  r["coefficients"] = to_json(e.coefficients);
  r["polynomial"] = format_polynomial(e);
  Json counts = Json::array();
  for (long t = 0; t <= 3; ++t) counts.push_back(Json{{"t", t}, {"count", to_string(lattice_point_count(p, t))}});
  r["counts"] = std::move(counts);
  return make_report("ehrhart", v.name, std::move(r));
}

Json cmd_validate(const VarietyData& v) {
  Json r;
  r["valid"] = true;
  r["dim"] = v.n;
  r["warnings"] = v.warnings;
  r["nef_inequalities"] = to_json(nef_cone(v).ineqs);
  r["chamber_count"] = zariski_chambers(v).size();
  r["integral_decomposition"] = integral_decomposition_check(v);
  Json subs = Json::object();
  for (const auto& [name, gens] : v.subcones) subs[name] = to_json(gens);
  r["subcones"] = std::move(subs);
  return make_report("validate", v.name, std::move(r));
}

Json cmd_plot(const VarietyData& v, const std::string& hyperplane, const std::filesystem::path& out) {
  require(v.n == 3 || v.n == 4, ErrorKind::Unsupported, "plot supports dimensions 3 and 4");
  RatVec h = parse_hyperplane(hyperplane, v.n);
  auto cells = chamber_slices(v, h);
  write_file(out, render_svg(v, cells));
  Json r;
  r["hyperplane"] = to_json(h);
  r["svg"] = out.string();
  if (v.n == 4) {
    std::filesystem::path scene = out;
    scene.replace_extension(".json");
    write_file(scene, scene_json(v, h, cells).dump(2) + "\n");
    r["scene"] = scene.string();
  }
  Json list = Json::array();
  for (const auto& c : cells)
    list.push_back(Json{{"support", names(c.support, 'E')},
                        {"generators", c.generator_names},
                        {"vertices", to_json(c.polygon.vertices)}});
  r["cells"] = std::move(list);
  return make_report("plot", v.name, std::move(r));
}

}  // namespace okzar
