#include "okzar/document.hpp"

#include <cctype>
#include <fstream>

namespace okzar {
namespace {

[[noreturn]] void data_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Data, where + ": " + what);
}

Int int_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r;
    try {
      r = parse_rat(j.get<std::string>());
    } catch (const Error&) {
      data_error(where, "malformed number");
    }
    if (r.get_den() != 1) data_error(where, "expected an integer");
    return r.get_num();
  }
  data_error(where, "expected an integer");
}

IntVec int_vector_at(const Json& j, const std::string& where) {
  if (!j.is_array()) data_error(where, "expected an array");
  IntVec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) data_error("document", std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string name_of(const Json& doc) {
  if (!doc.contains("name")) return "unnamed";
  if (!doc["name"].is_string()) data_error("name", "expected a string");
  return doc["name"].get<std::string>();
}

std::size_t dim_of(const Json& doc) {
  const Json& d = field(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) data_error("dim", "expected a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Input, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Data, path.string() + ": " + e.what());
  }
}

VarietyData parse_variety(const Json& doc) {
  if (!doc.is_object()) data_error("document", "expected a JSON object");
  VarietyData v;
  v.name = name_of(doc);
  v.n = dim_of(doc);

  const Json& bc = field(doc, "basis_change");
  if (!bc.is_array()) data_error("basis_change", "expected an array of matrices");
  for (std::size_t k = 0; k < bc.size(); ++k) {
    const std::string where = "basis_change[" + std::to_string(k) + "]";
    if (!bc[k].is_array()) data_error(where, "expected a matrix");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < bc[k].size(); ++i)
      rows.push_back(int_vector_at(bc[k][i], where + "[" + std::to_string(i) + "]"));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != cols) data_error(where, "ragged matrix");
    v.basis_change.push_back(Mat::from_rows(rows, cols));
  }

  const Json& rs = field(doc, "restriction");
  if (!rs.is_array()) data_error("restriction", "expected an array of vectors");
  for (std::size_t k = 0; k < rs.size(); ++k)
    v.restriction.push_back(int_vector_at(rs[k], "restriction[" + std::to_string(k) + "]"));

  // Subcone expressions refer to level-0 classes, which need the basis data.
  VarietyData checked = load_variety(v);
  if (doc.contains("subcones")) {
    const Json& sc = doc["subcones"];
    if (!sc.is_object()) data_error("subcones", "expected an object");
    for (const auto& [name, gens] : sc.items()) {
      const std::string where = "subcones." + name;
      if (!gens.is_array()) data_error(where, "expected an array of divisor expressions");
      std::vector<RatVec> classes;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (gens[i].is_string()) {
          try {
            classes.push_back(parse_divisor(checked, gens[i].get<std::string>()));
          } catch (const Error& e) {
            data_error(w, e.what());
          }
        } else {
          classes.push_back(to_rat(int_vector_at(gens[i], w)));
        }
      }
      checked.subcones[name] = std::move(classes);
    }
  }
  return load_variety(std::move(checked));
}

ConeDocument parse_cone_document(const Json& doc) {
  if (!doc.is_object()) data_error("document", "expected a JSON object");
  ConeDocument c;
  c.name = name_of(doc);
  const std::size_t d = dim_of(doc);
  const Json& rays = field(doc, "rays");
  if (!rays.is_array()) data_error("rays", "expected an array of vectors");
  std::vector<IntVec> rs;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    rs.push_back(int_vector_at(rays[i], "rays[" + std::to_string(i) + "]"));
    if (rs.back().size() != d) data_error("rays[" + std::to_string(i) + "]", "wrong length");
  }
  c.cone = cone_from_rays(d, rs);
  return c;
}

Document parse_document(const Json& doc) {
  if (doc.is_object() && doc.contains("rays") && !doc.contains("basis_change"))
    return parse_cone_document(doc);
  return parse_variety(doc);
}

VarietyData load_variety_file(const std::filesystem::path& path) {
  Document d = parse_document(read_json_file(path));
  require(std::holds_alternative<VarietyData>(d), ErrorKind::Input,
          "'" + path.string() + "' is a cone document, not a variety");
  return std::get<VarietyData>(std::move(d));
}

RatVec parse_divisor(const VarietyData& v, std::string_view expr, std::size_t level) {
  const std::size_t m = v.dim_at(level);
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorKind::Input, "cannot parse divisor '" + std::string(expr) + "': " + why);
  };
  if (s.empty()) fail("empty expression");
  if (s == "0") return RatVec(m, Rat(0));

  RatVec out(m, Rat(0));
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;

    Rat coeff = 1;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) {
      coeff = parse_rat(s.substr(start, pos - start));
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size() || (s[pos] != 'E' && s[pos] != 'D')) fail("expected a symbol E<i> or D<j>");
    const char symbol = s[pos++];
    start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("missing index after '" + std::string(1, symbol) + "'");
    const std::size_t index = std::stoul(s.substr(start, pos - start));
    if (index < 1 || index > m)
      fail(std::string(1, symbol) + std::to_string(index) + " does not exist in dimension " +
           std::to_string(m));
    RatVec cls = symbol == 'E' ? v.e_class(index, level) : v.d_class(index, level);
    out = out + Rat(sign * coeff) * cls;
  }
  return out;
}

Json to_json(const Rat& r) { return to_string(r); }
Json to_json(const Int& z) { return to_string(z); }

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const ConeRep& c) {
  Json j;
  j["ambient_dim"] = c.ambient_dim;
  j["dim"] = dim(c);
  j["rays"] = to_json(c.rays);
  j["lineality"] = to_json(c.lineality);
  j["inequalities"] = to_json(c.ineqs);
  j["equations"] = to_json(c.eqs);
  return j;
}

Json to_json(const Polytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim;
  j["dim"] = dim(p);
  j["vertices"] = to_json(p.vertices);
  auto forms = [](const std::vector<AffineForm>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
    return a;
  };
  j["inequalities"] = forms(p.ineqs);
  j["equations"] = forms(p.eqs);
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  require(j.is_string(), ErrorKind::Input, "expected a number or a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

}  // namespace okzar
