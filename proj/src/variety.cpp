#include "okzar/variety.hpp"

#include <algorithm>
#include <optional>

namespace okzar {
namespace {

std::string level_tag(std::size_t level) { return "level " + std::to_string(level); }

// Subsets of {2..n} ordered by size, then lexicographically.
std::vector<std::vector<std::size_t>> candidate_supports(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t m = n >= 1 ? n - 1 : 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t{1} << b)) s.push_back(b + 2);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

RatVec VarietyData::d_class(std::size_t j, std::size_t level) const {
  require(level < basis_change.size(), ErrorKind::Input, "no basis data for " + level_tag(level));
  require(j >= 1 && j <= dim_at(level), ErrorKind::Input, "D index out of range");
  return basis_change[level].column(j - 1);
}

RatVec VarietyData::e_class(std::size_t i, std::size_t level) const {
  require(i >= 1 && i <= dim_at(level), ErrorKind::Input, "E index out of range");
  return unit_vector(dim_at(level), i - 1);
}

Mat VarietyData::restriction_map(std::size_t level) const {
  require(level < restriction.size(), ErrorKind::Data,
          "restriction data missing for " + level_tag(level));
  const std::size_t m = dim_at(level);
  Mat rho(m - 1, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    rho(i, i) = 1;
    rho(i, m - 1) = restriction[level][i];
  }
  return rho;
}

VarietyData VarietyData::truncated(std::size_t level) const {
  require(level < n, ErrorKind::Input, "truncation level out of range");
  VarietyData t;
  t.name = level == 0 ? name : name + "/Y" + std::to_string(level);
  t.n = n - level;
  t.basis_change.assign(basis_change.begin() + static_cast<long>(level), basis_change.end());
  if (level < restriction.size())
    t.restriction.assign(restriction.begin() + static_cast<long>(level), restriction.end());
  if (level == 0) t.subcones = subcones;
  return t;
}

VarietyData load_variety(VarietyData v) {
  require(v.n >= 1, ErrorKind::Data, "dimension must be positive");
  require(v.basis_change.size() == v.n, ErrorKind::Data,
          "expected " + std::to_string(v.n) + " basis-change matrices, got " +
              std::to_string(v.basis_change.size()));
  require(v.restriction.size() == v.n - 1, ErrorKind::Data,
          "expected " + std::to_string(v.n - 1) + " restriction vectors, got " +
              std::to_string(v.restriction.size()));
  v.warnings.clear();

  for (std::size_t k = 0; k < v.n; ++k) {
    const Mat& m = v.basis_change[k];
    const std::size_t size = v.dim_at(k);
    require(m.rows() == size && m.cols() == size, ErrorKind::Data,
            level_tag(k) + ": basis-change matrix must be " + std::to_string(size) + "x" +
                std::to_string(size));
    require(m.is_integral(), ErrorKind::Data, level_tag(k) + ": basis-change matrix is not integral");
    Rat det = determinant(m);
    require(abs(det) == 1, ErrorKind::Data,
            level_tag(k) + ": basis-change matrix is not unimodular (det = " + to_string(det) + ")");
    if (m.column(0) != unit_vector(size, 0))
      v.warnings.push_back(level_tag(k) + ": D1 differs from E1");
    require(is_nef(v, v.e_class(1, k), k), ErrorKind::Data, level_tag(k) + ": E1 is not nef");
    for (std::size_t i = 2; i <= size; ++i)
      require(!is_nef(v, v.e_class(i, k), k), ErrorKind::Data,
              level_tag(k) + ": E" + std::to_string(i) + " is nef");
  }

  for (std::size_t k = 0; k + 1 < v.n; ++k) {
    require(v.restriction[k].size() == v.dim_at(k) - 1, ErrorKind::Data,
            level_tag(k) + ": restriction vector must have length " +
                std::to_string(v.dim_at(k) - 1));
    Mat rho = v.restriction_map(k);
    for (std::size_t i = 1; i <= v.dim_at(k) - 1; ++i) {
      require(rho * v.d_class(i, k) == v.d_class(i, k + 1), ErrorKind::Data,
              level_tag(k) + ": restriction of D" + std::to_string(i) +
                  " does not match D" + std::to_string(i) + " of " + level_tag(k + 1));
    }
  }

  for (const auto& [name, gens] : v.subcones) {
    for (const auto& g : gens) {
      require(g.size() == v.n, ErrorKind::Data, "subcone '" + name + "': wrong vector length");
      require(is_effective(v, g), ErrorKind::Data, "subcone '" + name + "' is not inside Eff");
    }
  }
  return v;
}

ConeRep eff_cone(const VarietyData& v, std::size_t level) { return orthant(v.dim_at(level)); }

ConeRep nef_cone(const VarietyData& v, std::size_t level) {
  std::vector<RatVec> rays;
  for (std::size_t j = 1; j <= v.dim_at(level); ++j) rays.push_back(v.d_class(j, level));
  return cone_from_rays(v.dim_at(level), rays);
}

RatVec d_coordinates(const VarietyData& v, const RatVec& d, std::size_t level) {
  auto coords = solve_exact(v.basis_change.at(level), d);
  require(coords.has_value(), ErrorKind::Data, "basis-change matrix is singular");
  return *coords;
}

bool is_nef(const VarietyData& v, const RatVec& d, std::size_t level) {
  require(d.size() == v.dim_at(level), ErrorKind::Input, "divisor has the wrong dimension");
  auto c = d_coordinates(v, d, level);
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x >= 0; });
}

bool is_effective(const VarietyData& v, const RatVec& d, std::size_t level) {
  require(d.size() == v.dim_at(level), ErrorKind::Input, "divisor has the wrong dimension");
  return std::all_of(d.begin(), d.end(), [](const Rat& x) { return x >= 0; });
}

bool fixed_support_test(const VarietyData& v, const std::vector<std::size_t>& support) {
  require(!support.empty(), ErrorKind::Input, "fixed_support_test: empty support");
  std::vector<RatVec> rays;
  for (auto i : support) rays.push_back(v.e_class(i));
  ConeRep meet = intersect(cone_from_rays(v.n, rays), nef_cone(v));
  return dim(meet) == 0;
}

std::vector<std::size_t> FacetPairing::d_indices(const Face& f) const {
  std::vector<std::size_t> out;
  for (auto i : f.generator_indices) out.push_back(nef_ray_to_d.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

FacetPairing facet_pairing(const VarietyData& v) {
  ConeRep nef = nef_cone(v);
  FacetPairing fp;
  fp.nef_ray_to_d.resize(nef.rays.size());
  for (std::size_t r = 0; r < nef.rays.size(); ++r) {
    bool found = false;
    for (std::size_t j = 1; j <= v.n && !found; ++j) {
      if (primitive(v.d_class(j)) == nef.rays[r]) {
        fp.nef_ray_to_d[r] = j;
        found = true;
      }
    }
    require(found, ErrorKind::ModelViolation, "nef cone ray is not one of the D_j");
  }

  auto fs = facets(nef);
  require(fs.size() == v.n, ErrorKind::ModelViolation, "nef cone is not simplicial");
  std::vector<bool> used(fs.size(), false);
  for (std::size_t i = 2; i <= v.n; ++i) {
    RatVec e = v.e_class(i);
    std::vector<std::size_t> separating;
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (dot(fs[f].functional, e) < 0) separating.push_back(f);
    require(separating.size() == 1, ErrorKind::ModelViolation,
            "E" + std::to_string(i) + " is separated from the nef cone by " +
                std::to_string(separating.size()) + " facets (expected exactly one)");
    require(!used[separating[0]], ErrorKind::ModelViolation,
            "one nef facet separates two fixed rays");
    used[separating[0]] = true;
    fp.by_fixed.emplace(i, fs[separating[0]]);
  }
  std::vector<std::size_t> rest;
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (!used[f]) rest.push_back(f);
  require(rest.size() == 1, ErrorKind::ModelViolation, "no distinguished nef facet");
  for (std::size_t i = 1; i <= v.n; ++i)
    require(dot(fs[rest[0]].functional, v.e_class(i)) >= 0, ErrorKind::ModelViolation,
            "the remaining nef facet separates E" + std::to_string(i));
  fp.distinguished = fs[rest[0]];
  return fp;
}

std::vector<ZariskiChamber> zariski_chambers(const VarietyData& v) {
  FacetPairing fp = facet_pairing(v);
  std::vector<ZariskiChamber> out;
  for (const auto& support : candidate_supports(v.n)) {
    if (!support.empty() && !fixed_support_test(v, support)) continue;
    ZariskiChamber ch;
    ch.support = support;
    for (std::size_t j = 1; j <= v.n; ++j) {
      RatVec dj = v.d_class(j);
      bool on_face = std::all_of(support.begin(), support.end(), [&](std::size_t i) {
        return dot(fp.by_fixed.at(i).functional, dj) == 0;
      });
      if (on_face) {
        ch.nef_face_generators.push_back(j);
        ch.generators.push_back(dj);
        ch.generator_names.push_back("D" + std::to_string(j));
      }
    }
    for (auto i : support) {
      ch.generators.push_back(v.e_class(i));
      ch.generator_names.push_back("E" + std::to_string(i));
    }
    require(ch.generators.size() == v.n && rank(Mat::from_rows(ch.generators, v.n)) == v.n,
            ErrorKind::ModelViolation, "chamber is not a full-dimensional simplicial cone");
    ch.cone = cone_from_rays(v.n, ch.generators);
    out.push_back(std::move(ch));
  }
  return out;
}

ZariskiDecomposition zariski_decompose(const VarietyData& v,
                                       const std::vector<ZariskiChamber>& chambers,
                                       const RatVec& d, bool validate) {
  require(d.size() == v.n, ErrorKind::Input, "divisor has the wrong dimension");
  for (std::size_t i = 0; i < d.size(); ++i)
    require(d[i] >= 0, ErrorKind::Input,
            "divisor is not effective: E" + std::to_string(i + 1) + "-coordinate is " +
                to_string(d[i]));
  std::optional<ZariskiDecomposition> result;
  for (const auto& ch : chambers) {
    auto coeffs = solve_exact(Mat::from_columns(ch.generators, v.n), d);
    require(coeffs.has_value(), ErrorKind::ModelViolation, "singular chamber basis");
    if (!std::all_of(coeffs->begin(), coeffs->end(), [](const Rat& x) { return x >= 0; })) continue;
    ZariskiDecomposition z;
    z.positive.assign(v.n, Rat(0));
    z.negative.assign(v.n, Rat(0));
    const std::size_t nd = ch.nef_face_generators.size();
    for (std::size_t k = 0; k < nd; ++k) z.positive = z.positive + (*coeffs)[k] * ch.generators[k];
    for (std::size_t k = 0; k < ch.support.size(); ++k) {
      z.negative[ch.support[k] - 1] = (*coeffs)[nd + k];
      if ((*coeffs)[nd + k] != 0) z.support.push_back(ch.support[k]);
    }
    z.chamber_support = ch.support;
    if (!result) {
      result = std::move(z);
      if (!validate) break;
    } else {
      require(z.positive == result->positive && z.negative == result->negative,
              ErrorKind::ModelViolation, "two chambers give different decompositions");
    }
  }
  require(result.has_value(), ErrorKind::ModelViolation, "no chamber contains the divisor");
  return *result;
}

ZariskiDecomposition zariski_decompose(const VarietyData& v, const RatVec& d, bool validate) {
  return zariski_decompose(v, zariski_chambers(v), d, validate);
}

ZariskiChamber chamber_of(const VarietyData& v, const RatVec& d) {
  auto chambers = zariski_chambers(v);
  auto z = zariski_decompose(v, chambers, d);
  for (auto& ch : chambers)
    if (ch.support == z.chamber_support) return ch;
  throw Error(ErrorKind::Internal, "chamber_of: chamber vanished");
}

std::string format_combination(const RatVec& coeffs, char symbol) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    Rat mag = abs(c);
    if (mag != 1) out += to_string(mag);
    out += symbol;
    out += std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

bool integral_decomposition_check(const VarietyData& v) {
  for (const auto& ch : zariski_chambers(v))
    if (!is_lattice_basis(std::span<const RatVec>(ch.generators))) return false;
  return true;
}

}  // namespace okzar
