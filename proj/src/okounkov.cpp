#include "okzar/okounkov.hpp"

#include <algorithm>

namespace okzar {
namespace {

ConeRep whole_space(std::size_t dim) { return cone_from_ineqs(dim, std::vector<IntVec>{}); }

std::vector<std::size_t> divisor_coords(std::size_t m) {
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = m + i;
  return idx;
}

RecursionStep build_step(const VarietyData& v, const ConeRep& lower_body) {
  const std::size_t m = v.n;
  RecursionStep s;
  s.dim = m;
  s.lower_body = lower_body;

  Mat rho = v.restriction_map(0);
  std::vector<RatVec> restricted;
  for (std::size_t j = 1; j <= m; ++j) restricted.push_back(rho * v.d_class(j));
  s.restricted_nef = cone_from_rays(m - 1, restricted);
  s.restricted_semigroup = intersect(lower_body, product(whole_space(m - 1), s.restricted_nef));

  s.q = Mat(2 * (m - 1), 2 * m);
  for (std::size_t i = 0; i + 1 < m; ++i) s.q(i, i + 1) = 1;
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.q(m - 1 + i, m + j) = rho(i, j);
  s.preimage = preimage_linear(s.restricted_semigroup, s.q);

  // {0} x R^{m-1}_{>=0} x Nef
  std::vector<IntVec> ineqs, eqs;
  eqs.push_back(to_int(unit_vector(2 * m, 0)));
  for (std::size_t i = 1; i < m; ++i) ineqs.push_back(to_int(unit_vector(2 * m, i)));
  ConeRep nef = nef_cone(v);
  for (const auto& h : nef.ineqs) {
    IntVec lifted(2 * m, Int(0));
    std::copy(h.begin(), h.end(), lifted.begin() + static_cast<long>(m));
    ineqs.push_back(std::move(lifted));
  }
  s.valuation_zero = intersect(s.preimage, cone_from_ineqs(2 * m, ineqs, eqs));

  // The defining section of E_i first vanishes along the flag at depth m+1-i.
  std::vector<IntVec> fixed_rays;
  for (std::size_t i = 2; i <= m; ++i) {
    IntVec r(2 * m, Int(0));
    r[m - i] = 1;
    r[m + i - 1] = 1;
    fixed_rays.push_back(std::move(r));
  }
  s.body = minkowski_sum(s.valuation_zero, cone_from_rays(2 * m, fixed_rays));
  return s;
}

}  // namespace

OkounkovBody global_body(const VarietyData& v) {
  OkounkovBody b;
  b.level_dim = v.n;
  if (v.n == 1) {
    // Sections of O(d) on the line vanish to order 0..d at the flag point.
    b.cone = cone_from_rays(2, std::vector<IntVec>{{0, 1}, {1, 1}});
    return b;
  }
  OkounkovBody lower = global_body(v.truncated(1));
  RecursionStep step = build_step(v, lower.cone);
  b.cone = step.body;
  b.steps.push_back(std::move(step));
  for (auto& s : lower.steps) b.steps.push_back(std::move(s));
  return b;
}

ConeRep cone_of_S(const VarietyData& v) {
  require(v.n >= 2, ErrorKind::Unsupported, "cone_of_S needs dimension at least 2");
  return global_body(v).steps.front().valuation_zero;
}

RatVec canonical_valuation(const RatVec& effective_class) {
  const std::size_t m = effective_class.size();
  RatVec nu(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) nu[m - 1 - i] = effective_class[i];
  return nu;
}

OkounkovBody restrict_body(const OkounkovBody& b, const ConeRep& subcone) {
  const std::size_t n = b.level_dim;
  require(subcone.ambient_dim == n, ErrorKind::Input, "restrict_body: subcone has the wrong dimension");
  require(is_subcone(subcone, orthant(n)), ErrorKind::Input,
          "restrict_body: subcone is not contained in the effective cone");
  OkounkovBody r = b;
  r.cone = intersect(b.cone, product(whole_space(n), subcone));
  return r;
}

Polytope divisor_body(const OkounkovBody& b, const RatVec& d) {
  const std::size_t n = b.level_dim;
  require(d.size() == n, ErrorKind::Input, "divisor_body: divisor has the wrong dimension");
  if (std::any_of(d.begin(), d.end(), [](const Rat& x) { return x < 0; })) {
    Polytope empty;
    empty.ambient_dim = n;
    return empty;
  }
  return fiber_slice(b.cone, divisor_coords(n), d);
}

SlabResult slab(const VarietyData& v, const OkounkovBody& b, const RatVec& d, const Rat& a) {
  const std::size_t n = v.n;
  require(n >= 2 && !b.steps.empty(), ErrorKind::Unsupported, "slab needs dimension at least 2");
  require(d.size() == n, ErrorKind::Input, "slab: divisor has the wrong dimension");

  SlabResult out;
  out.a = a;
  std::vector<std::size_t> fixed{0};
  RatVec values{a};
  for (std::size_t i = 0; i < n; ++i) {
    fixed.push_back(n + i);
    values.push_back(d[i]);
  }
  out.direct = fiber_slice(b.cone, fixed, values);
  require(!out.direct.empty(), ErrorKind::Input, "slab: the slice at nu_1 = " + to_string(a) + " is empty");

  RatVec shifted = d;
  shifted[n - 1] -= a;
  require(shifted[n - 1] >= 0, ErrorKind::ContractViolation, "slab: D - a*E_n is not effective");
  out.decomposition = zariski_decompose(v, shifted);
  require(out.decomposition.negative[n - 1] == 0, ErrorKind::ContractViolation,
          "slab: negative part contains E" + std::to_string(n));

  Mat rho = v.restriction_map(0);
  RatVec positive = rho * out.decomposition.positive;
  RatVec negative = rho * out.decomposition.negative;
  for (std::size_t i = 0; i < negative.size(); ++i)
    require(negative[i] >= 0, ErrorKind::ContractViolation,
            "slab: restricted negative part has a negative E" + std::to_string(i + 1) + "-coordinate");
  out.shift = canonical_valuation(negative);
  Polytope lower = fiber_slice(b.steps.front().lower_body, divisor_coords(n - 1), positive);
  out.via_formula = translate(lower, out.shift);
  return out;
}

HilbertBasis body_hilbert_basis(const OkounkovBody& b) { return hilbert_basis(b.cone); }

std::string divisor_label(const VarietyData& v, const RatVec& d) {
  if (is_zero(d)) return "0";
  for (std::size_t j = 1; j <= v.n; ++j)
    if (d == v.d_class(j)) return "D" + std::to_string(j);
  for (std::size_t i = 1; i <= v.n; ++i)
    if (d == v.e_class(i)) return "E" + std::to_string(i);
  if (is_nef(v, d)) return format_combination(d_coordinates(v, d), 'D');
  return format_combination(d, 'E');
}

CoxReport cox_report(const VarietyData& v, const OkounkovBody& b) {
  CoxReport r;
  r.basis = body_hilbert_basis(b);
  r.generators_form_hilbert_basis = r.basis.elements == b.cone.rays;
  const std::size_t n = b.level_dim;
  for (const auto& e : r.basis.elements) {
    if (!std::binary_search(b.cone.rays.begin(), b.cone.rays.end(), e)) r.extra_elements.push_back(e);
    CoxGenerator g;
    g.valuation.assign(e.begin(), e.begin() + static_cast<long>(n));
    g.divisor.assign(e.begin() + static_cast<long>(n), e.end());
    g.label = divisor_label(v, to_rat(g.divisor));
    r.generators.push_back(std::move(g));
  }
  return r;
}

}  // namespace okzar
