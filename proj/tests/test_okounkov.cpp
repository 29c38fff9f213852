#include <doctest.h>

#include "properties.hpp"

using namespace okzar;
using namespace testsupport;

namespace {

std::vector<IntVec> points(const VarietyData& v, std::initializer_list<std::pair<IntVec, const char*>> gens) {
  std::vector<IntVec> out;
  for (const auto& [nu, d] : gens) out.push_back(body_point(nu, to_int(parse_divisor(v, d))));
  return sorted(out);
}

}  // namespace

TEST_CASE("base case is the projective line") {
  VarietyData v = fixture("incidence3").truncated(2);
  OkounkovBody b = global_body(v);
  CHECK(b.cone.rays == std::vector<IntVec>{iv({0, 1}), iv({1, 1})});
  CHECK(b.steps.empty());
}

TEST_CASE("surface body") {
  VarietyData v = fixture("incidence3");
  VarietyData s = v.truncated(1);
  OkounkovBody b = global_body(s);
  // (nu_1, nu_2, d) with d in the surface's E-basis: D1 = (1,0), D2 = (1,1), E2 = (0,1).
  CHECK(b.cone.rays == sorted({iv({1, 0, 0, 1}), iv({0, 0, 1, 0}), iv({0, 0, 1, 1}), iv({0, 1, 1, 0})}));
  CHECK(b.cone.rays == points(s, {{iv({1, 0}), "E2"}, {iv({0, 0}), "D1"}, {iv({0, 0}), "D2"}, {iv({0, 1}), "D1"}}));
}

TEST_CASE("recursion step of the 3-dim fixture") {
  VarietyData v = fixture("incidence3");
  VarietyData s = v.truncated(1);
  OkounkovBody b = global_body(v);
  REQUIRE(b.steps.size() == 2);
  const RecursionStep& st = b.steps.front();

  CHECK(st.restricted_semigroup.rays ==
        points(s, {{iv({0, 0}), "D1"}, {iv({0, 0}), "D2"}, {iv({0, 1}), "D1"}, {iv({1, 0}), "D2"}, {iv({1, 1}), "D2"}}));
  CHECK(sorted(st.restricted_semigroup.ineqs) ==
        sorted({iv({-1, 0, 0, 1}), iv({1, 0, 0, 0}), iv({0, 0, 1, -1}), iv({0, 1, 0, 0}), iv({1, -1, 1, -1})}));

  CHECK(st.q == Mat::from_rows(std::vector<IntVec>{iv({0, 1, 0, 0, 0, 0}), iv({0, 0, 1, 0, 0, 0}),
                                                    iv({0, 0, 0, 1, 0, 1}), iv({0, 0, 0, 0, 1, -1})},
                               6));
  CHECK(sorted(st.preimage.ineqs) == sorted({iv({0, -1, 0, 0, 1, -1}), iv({0, 1, 0, 0, 0, 0}), iv({0, 0, 0, 1, -1, 2}),
                                             iv({0, 0, 1, 0, 0, 0}), iv({0, 1, -1, 1, -1, 2})}));

  CHECK(st.valuation_zero.rays == points(v, {{iv({0, 0, 0}), "D3"}, {iv({0, 0, 0}), "D1"}, {iv({0, 0, 0}), "D2"},
                                             {iv({0, 0, 1}), "D3"}, {iv({0, 0, 1}), "D1"}, {iv({0, 1, 0}), "D2"},
                                             {iv({0, 1, 1}), "D2"}}));
  CHECK(cone_of_S(v) == st.valuation_zero);
}

TEST_CASE("global body of the 3-dim fixture") {
  VarietyData v = fixture("incidence3");
  OkounkovBody b = global_body(v);
  auto want = points(v, {{iv({0, 0, 0}), "D3"}, {iv({0, 0, 0}), "D1"}, {iv({0, 0, 0}), "D2"}, {iv({0, 0, 1}), "D3"},
                         {iv({0, 0, 1}), "D1"}, {iv({0, 1, 0}), "E2"}, {iv({1, 0, 0}), "E3"}});
  CHECK(b.cone.rays == want);
  CHECK(b.cone.is_pointed());
  CHECK(body_hilbert_basis(b).elements == want);
  CoxReport cox = cox_report(v, b);
  CHECK(cox.generators_form_hilbert_basis);
  CHECK(cox.extra_elements.empty());
  std::set<std::string> labels;
  for (const auto& g : cox.generators) {
    std::string key = "(";
    for (const auto& x : g.valuation) key += to_string(x);
    labels.insert(key + "|" + g.label + ")");
  }
  CHECK(labels.count("(100|E3)") == 1);
  CHECK(labels.count("(010|E2)") == 1);
  CHECK(labels.count("(001|D1)") == 1);
}

TEST_CASE("Schubert restriction to the flag variety") {
  VarietyData v = fixture("incidence3");
  OkounkovBody r = restrict_body(global_body(v), cone_from_rays(3, v.subcones.at("flag")));
  auto want = points(v, {{iv({0, 0, 0}), "D2"}, {iv({0, 0, 0}), "D3"}, {iv({0, 1, 1}), "D2"}, {iv({0, 0, 1}), "D3"},
                         {iv({1, 1, 0}), "D3"}, {iv({0, 1, 0}), "D2"}});
  CHECK(r.cone.rays == want);
  CHECK(hilbert_basis(r.cone).elements == want);
  CHECK_THROWS_AS(restrict_body(global_body(v), cone_from_rays(3, std::vector<IntVec>{iv({1, -1, 0})})), Error);
}

TEST_CASE("divisor body of D1+D2+D3") {
  VarietyData v = fixture("incidence3");
  Polytope p = divisor_body(global_body(v), parse_divisor(v, "D1+D2+D3"));
  CHECK(p.vertices == sorted({rv({1, 0, 0}), rv({1, 2, 0}), rv({1, 2, 2}), rv({0, 1, 3}), rv({0, 1, 0}),
                              rv({0, 0, 2}), rv({0, 0, 0})}));
  EhrhartPoly e = ehrhart_polynomial(p);
  CHECK(e.coefficients == std::vector<Rat>{1, 4, make_rat(11, 2), make_rat(5, 2)});
  CHECK(lattice_point_count(p, 1) == 13);
  CHECK(lattice_point_count(p, 2) == 51);
  std::vector<oracle::Vec> verts;
  for (const auto& x : p.vertices) verts.push_back(to_q(x));
  CHECK(oracle::brute_count(verts, 1) == 13);
  CHECK(oracle::brute_count(verts, 2) == 51);
  CHECK(divisor_body(global_body(v), rv({1, -1, 0})).empty());
}

TEST_CASE("body invariants on both fixtures") {
  for (const char* name : {"incidence3", "incidence4"}) {
    CAPTURE(name);
    VarietyData v = fixture(name);
    const std::size_t n = v.n;
    OkounkovBody b = global_body(v);
    CHECK(b.cone.is_pointed());
    for (const auto& r : b.cone.rays) {
      for (std::size_t i = 0; i < n; ++i) CHECK(r[i] >= 0);
      CHECK(is_effective(v, to_rat(IntVec(r.begin() + static_cast<long>(n), r.end()))));
    }
    // The d-space projection is Eff.
    Mat proj(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) proj(i, n + i) = 1;
    CHECK(image_linear(b.cone, proj) == eff_cone(v));
    // q maps Cone(S) into C(S_1).
    const RecursionStep& st = b.steps.front();
    std::mt19937_64 rng(37);
    for (const auto& r : st.valuation_zero.rays) CHECK(contains(st.restricted_semigroup, st.q * to_rat(r)));
    std::uniform_int_distribution<long> w(1, 9);
    for (int s = 0; s < 100; ++s) {
      RatVec x(2 * n, Rat(0));
      for (const auto& r : st.valuation_zero.rays) x = x + Rat(w(rng)) * to_rat(r);
      CHECK(contains(st.restricted_semigroup, st.q * x));
    }
    // Normality.
    CHECK(generators_are_hilbert_basis(b.cone));
    CHECK(integral_decomposition_check(v));
  }
}

TEST_CASE("Hilbert basis of the body covers small lattice points") {
  for (auto [name, bound] : {std::pair{"incidence3", 2L}, std::pair{"incidence4", 1L}}) {
    CAPTURE(name);
    VarietyData v = fixture(name);
    const std::size_t d = 2 * v.n;
    OkounkovBody b = global_body(v);
    HilbertBasis hb = hilbert_basis(b.cone);
    std::vector<oracle::Vec> rays;
    for (const auto& r : b.cone.rays) rays.push_back(to_q(r));
    oracle::HRep h = oracle::fourier_motzkin(d, rays);
    auto brute = oracle::brute_hilbert(d, h, bound);
    std::vector<std::vector<long>> ours;
    for (const auto& e : hb.elements) {
      std::vector<long> x;
      bool in_box = true;
      for (const auto& c : e) {
        x.push_back(c.get_si());
        in_box = in_box && c <= bound;
      }
      if (in_box) ours.push_back(x);
    }
    CHECK(ours == brute);
  }
}

TEST_CASE("divisor body dimension") {
  VarietyData v = fixture("incidence4");
  OkounkovBody b = global_body(v);
  CHECK(dim(divisor_body(b, parse_divisor(v, "D1+D2+D3+D4"))) == 4);
  CHECK(dim(divisor_body(b, rv({2, 3, 2, 1}))) == 4);
  CHECK(dim(divisor_body(b, parse_divisor(v, "E2+E4"))) < 4);
  CHECK(dim(divisor_body(b, parse_divisor(v, "D1"))) < 4);
}

TEST_CASE("monotonicity of divisor bodies") {
  for (const char* name : {"incidence3", "incidence4"}) {
    CAPTURE(name);
    VarietyData v = fixture(name);
    OkounkovBody b = global_body(v);
    std::mt19937_64 rng(41);
    for (int s = 0; s < 15; ++s) {
      IntVec big = random_int_vec(rng, v.n, 0, 3);
      IntVec small = big;
      for (auto& x : small) x = x == 0 ? Int(0) : Int(std::uniform_int_distribution<long>(0, x.get_si())(rng));
      Polytope pb = divisor_body(b, to_rat(big));
      Polytope ps = divisor_body(b, to_rat(small));
      RatVec shift = canonical_valuation(to_rat(big - small));
      for (const auto& x : ps.vertices) CHECK(contains(pb, x + shift));
    }
  }
}

TEST_CASE("slab formula") {
  for (const char* name : {"incidence3", "incidence4"}) {
    CAPTURE(name);
    SuiteResult r = slab_suite(fixture(name), 60);
    INFO(r.first_failure);
    CHECK(r.checked >= 60);
    CHECK(r.ok());
  }
}

TEST_CASE("slab preconditions") {
  VarietyData v = fixture("incidence3");
  OkounkovBody b = global_body(v);
  SlabResult s = slab(v, b, parse_divisor(v, "D1+D2+D3"), 1);
  CHECK(s.direct == s.via_formula);
  CHECK(s.direct.vertices == sorted({rv({0, 0}), rv({2, 0}), rv({2, 2})}));
  CHECK_THROWS_AS(slab(v, b, parse_divisor(v, "D1+D2+D3"), 2), Error);
}
