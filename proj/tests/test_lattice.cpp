#include <doctest.h>

#include "properties.hpp"

using namespace okzar;
using namespace testsupport;

namespace {

std::vector<std::vector<long>> as_long(const std::vector<IntVec>& v) {
  std::vector<std::vector<long>> out;
  for (const auto& x : v) {
    std::vector<long> y;
    for (const auto& c : x) y.push_back(c.get_si());
    out.push_back(y);
  }
  return out;
}

oracle::HRep oracle_cone(std::size_t d, const std::vector<IntVec>& rays) {
  std::vector<oracle::Vec> q;
  for (const auto& r : rays) q.push_back(to_q(r));
  return oracle::fourier_motzkin(d, q);
}

// Euclidean volume of a full-dimensional lattice polytope from a triangulation
// of its homogenization.
Rat volume(const Polytope& p) {
  const std::size_t d = p.ambient_dim;
  std::vector<RatVec> lifted;
  for (auto v : p.vertices) {
    v.push_back(1);
    lifted.push_back(v);
  }
  ConeRep c = cone_from_rays(d + 1, lifted);
  Rat total = 0;
  Int fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
  for (const auto& s : triangulate(c)) {
    std::vector<RatVec> cols;
    for (auto i : s) {
      RatVec r = to_rat(c.rays[i]);
      Rat h = r.back();
      cols.push_back(Rat(1) / h * r);
    }
    total += abs(determinant(Mat::from_columns(cols, d + 1)));
  }
  return total / fact;
}

}  // namespace

TEST_CASE("non-normal plane cone") {
  ConeRep c = cone_from_rays(2, std::vector<IntVec>{iv({1, 0}), iv({1, 2})});
  HilbertBasis hb = hilbert_basis(c);
  CHECK(hb.elements == std::vector<IntVec>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
  CHECK_FALSE(generators_are_hilbert_basis(c));
  CHECK(as_long(hb.elements) == oracle::brute_hilbert(2, oracle_cone(2, c.rays), 4));
}

TEST_CASE("orthant Hilbert basis is the unit vectors") {
  HilbertBasis hb = hilbert_basis(orthant(3));
  CHECK(hb.elements == std::vector<IntVec>{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
  CHECK(generators_are_hilbert_basis(orthant(3)));
}

TEST_CASE("non-pointed cones are rejected") {
  try {
    hilbert_basis(cone_from_ineqs(2, std::vector<IntVec>{iv({1, 0})}));
    FAIL("accepted a cone with lineality");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("triangulations use independent rays") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    std::vector<IntVec> rays;
    for (int i = 0; i < 5; ++i) rays.push_back(random_int_vec(rng, 3, 0, 3));
    ConeRep c = cone_from_rays(3, rays);
    std::set<std::size_t> used;
    for (const auto& s : triangulate(c)) {
      std::vector<IntVec> gens;
      for (auto i : s) {
        gens.push_back(c.rays[i]);
        used.insert(i);
      }
      CHECK(rank(Mat::from_rows(gens, 3)) == gens.size());
      CHECK(gens.size() == dim(c));
    }
    CHECK(used.size() == c.rays.size());
  }
}

TEST_CASE("Hilbert bases of random orthant cones match brute force") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 25; ++t) {
    const std::size_t d = t % 2 == 0 ? 2 : 3;
    std::vector<IntVec> rays;
    for (int i = 0; i < 3; ++i) rays.push_back(random_int_vec(rng, d, 0, 3));
    ConeRep c = cone_from_rays(d, rays);
    if (c.rays.empty()) continue;
    HilbertBasis hb = hilbert_basis(c);
    const long bound = d == 2 ? 12 : 8;
    bool in_box = true;
    for (const auto& e : hb.elements)
      for (const auto& x : e) in_box = in_box && x <= bound;
    REQUIRE(in_box);
    CHECK(as_long(hb.elements) == oracle::brute_hilbert(d, oracle_cone(d, c.rays), bound));
  }
}

TEST_CASE("Ehrhart polynomials of small lattice polytopes") {
  Polytope square = polytope_from_vertices(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
  CHECK(ehrhart_polynomial(square).coefficients == std::vector<Rat>{1, 2, 1});
  Polytope reeve = polytope_from_vertices(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 2})});
  CHECK(ehrhart_polynomial(reeve).coefficients ==
        std::vector<Rat>{1, make_rat(5, 3), 1, make_rat(1, 3)});
  Polytope point = polytope_from_vertices(2, {rv({3, 4})});
  CHECK(ehrhart_polynomial(point).coefficients == std::vector<Rat>{1});
  Polytope half = polytope_from_vertices(1, {rv({0}), RatVec{make_rat(1, 2)}});
  try {
    ehrhart_polynomial(half);
    FAIL("accepted a rational polytope");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
  CHECK_THROWS_AS(lattice_point_count(square, -1), Error);
}

TEST_CASE("Ehrhart counts, leading coefficient and volume on random lattice polytopes") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = t % 2 == 0 ? 2 : 3;
    std::vector<RatVec> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(to_rat(random_int_vec(rng, d, 0, 2)));
    Polytope p = polytope_from_vertices(d, pts);
    if (dim(p) != static_cast<long>(d)) continue;
    EhrhartPoly e = ehrhart_polynomial(p);
    std::vector<oracle::Vec> verts;
    for (const auto& v : p.vertices) verts.push_back(to_q(v));
    for (long k = 0; k <= 4; ++k) CHECK(e(Rat(k)) == Rat(oracle::brute_count(verts, k)));
    CHECK(e.coefficients.back() == volume(p));
    CHECK(e.coefficients.front() == 1);
  }
}
