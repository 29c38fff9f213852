#include "okzar/lattice.hpp"

#include <algorithm>
#include <set>

namespace okzar {
namespace {

std::vector<std::vector<std::size_t>> pulling_triangulation(std::size_t dim,
                                                            const std::vector<IntVec>& rays,
                                                            const std::vector<std::size_t>& subset) {
  std::vector<IntVec> vs;
  for (auto i : subset) vs.push_back(rays[i]);
  const std::size_t k = vs.empty() ? 0 : rank(Mat::from_rows(vs, dim));
  if (subset.size() == k) return {subset};

  const std::size_t apex = subset.front();
  ConeRep sub = cone_from_rays(dim, vs);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& h : sub.ineqs) {
    if (dot(h, rays[apex]) == 0) continue;
    std::vector<std::size_t> face;
    for (auto i : subset)
      if (dot(h, rays[i]) == 0) face.push_back(i);
    for (auto simplex : pulling_triangulation(dim, rays, face)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

// Odometer over the integer box [lo, hi].
template <class F>
void for_each_box_point(const IntVec& lo, const IntVec& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVec x = lo;
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

// Nonzero lattice points sum(lambda_i r_i) with 0 <= lambda_i < 1.
std::vector<IntVec> parallelepiped_points(std::size_t dim, const std::vector<IntVec>& simplex) {
  const std::size_t k = simplex.size();
  Mat gens = Mat::from_columns(simplex, dim);  // dim x k
  std::vector<std::size_t> pivot_rows;
  rref(gens.transpose(), &pivot_rows);
  Mat square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) square(i, j) = gens(pivot_rows[i], j);
  auto inv = inverse(square);
  require(inv.has_value(), ErrorKind::Internal, "degenerate simplicial cone");
  if (abs(determinant(square)) == 1) return {};

  IntVec lo(k, Int(0)), hi(k, Int(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Int& e = simplex[j][pivot_rows[i]];
      if (e < 0) lo[i] += e;
      else hi[i] += e;
    }
  std::vector<IntVec> out;
  for_each_box_point(lo, hi, [&](const IntVec& xp) {
    RatVec lambda = *inv * to_rat(xp);
    for (const auto& l : lambda)
      if (l < 0 || l >= 1) return;
    RatVec x = gens * lambda;
    if (!is_integral(x) || is_zero(x)) return;
    out.push_back(to_int(x));
  });
  return out;
}

}  // namespace

Rat EhrhartPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<std::vector<std::size_t>> triangulate(const ConeRep& c) {
  require(c.is_pointed(), ErrorKind::Unsupported, "triangulate: cone is not pointed");
  if (c.rays.empty()) return {};
  std::vector<std::size_t> all(c.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return pulling_triangulation(c.ambient_dim, c.rays, all);
}

HilbertBasis hilbert_basis(const ConeRep& c) {
  require(c.is_pointed(), ErrorKind::Unsupported, "hilbert_basis: cone is not pointed");
  HilbertBasis hb;
  hb.cone = c;
  std::set<IntVec> candidates(c.rays.begin(), c.rays.end());
  for (const auto& simplex : triangulate(c)) {
    std::vector<IntVec> gens;
    for (auto i : simplex) gens.push_back(c.rays[i]);
    for (auto& p : parallelepiped_points(c.ambient_dim, gens)) candidates.insert(std::move(p));
  }
  // x is reducible iff x - y is a nonzero cone point for some other candidate y.
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      IntVec diff = x - y;
      if (contains(c, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.elements.push_back(x);
  }
  return hb;
}

bool generators_are_hilbert_basis(const ConeRep& c) {
  return hilbert_basis(c).elements == c.rays;
}

Int lattice_point_count(const Polytope& p, long k) {
  require(k >= 0, ErrorKind::Input, "lattice_point_count: negative dilation factor");
  if (p.empty()) return 0;
  const std::size_t d = p.ambient_dim;
  const Rat scale(k);
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rat mn = p.vertices.front()[i], mx = mn;
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mn *= scale;
    mx *= scale;
    mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  Int count = 0;
  const Int kk(k);
  if (d == 0) return 1;
  for_each_box_point(lo, hi, [&](const IntVec& x) {
    for (const auto& e : p.eqs)
      if (dot(e.normal, x) + kk * e.offset != 0) return;
    for (const auto& h : p.ineqs)
      if (dot(h.normal, x) + kk * h.offset < 0) return;
    ++count;
  });
  return count;
}

EhrhartPoly ehrhart_polynomial(const Polytope& p) {
  require(!p.empty(), ErrorKind::Input, "ehrhart_polynomial: empty polytope");
  for (const auto& v : p.vertices)
    require(is_integral(v), ErrorKind::Unsupported,
            "ehrhart_polynomial: polytope has non-integral vertices");
  const auto d = static_cast<std::size_t>(dim(p));
  Mat vandermonde(d + 1, d + 1);
  RatVec counts(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    Rat power = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      vandermonde(k, j) = power;
      power *= static_cast<long>(k);
    }
    counts[k] = lattice_point_count(p, static_cast<long>(k));
  }
  auto coeffs = solve_exact(vandermonde, counts);
  require(coeffs.has_value(), ErrorKind::Internal, "ehrhart_polynomial: singular interpolation");
  EhrhartPoly poly{*coeffs};
  for (std::size_t k = d + 1; k <= 2 * d; ++k) {
    Int direct = lattice_point_count(p, static_cast<long>(k));
    require(poly(Rat(static_cast<long>(k))) == direct, ErrorKind::Internal,
            "ehrhart_polynomial: interpolated polynomial disagrees with a direct count at t = " +
                std::to_string(k));
  }
  return poly;
}

}  // namespace okzar
