#include "okzar/polyhedra.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace okzar {
namespace {

void check_dims(std::size_t dim, const std::vector<IntVec>& vs, const char* what) {
  for (const auto& v : vs)
    require(v.size() == dim, ErrorKind::Input,
            std::string(what) + ": vector of length " + std::to_string(v.size()) +
                " in ambient dimension " + std::to_string(dim));
}

std::vector<IntVec> to_primitive(const std::vector<RatVec>& vs) {
  std::vector<IntVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(primitive(v));
  return out;
}

void sort_unique(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Tight set of a ray against the processed inequalities.
std::vector<std::size_t> tight_set(const IntVec& r, const std::vector<IntVec>& processed) {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < processed.size(); ++j)
    if (dot(processed[j], r) == 0) z.push_back(j);
  return z;
}

bool includes_sorted(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Eliminates the lineality direction that is not annihilated by h. Returns
// false when h vanishes on the whole lineality space. On success `v` holds
// the removed direction, oriented so that h(v) > 0, and every remaining
// lineality vector and ray has been moved into ker(h) along v.
bool eliminate_lineality(const IntVec& h, std::vector<IntVec>& lineality, std::vector<IntVec>& rays,
                         IntVec& v) {
  auto it = std::find_if(lineality.begin(), lineality.end(),
                         [&](const IntVec& l) { return dot(h, l) != 0; });
  if (it == lineality.end()) return false;
  v = *it;
  lineality.erase(it);
  Int hv = dot(h, v);
  if (hv < 0) {
    for (auto& x : v) x = -x;
    hv = -hv;
  }
  for (auto& w : lineality) {
    Int hw = dot(h, w);
    if (hw != 0) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = hv * w[i] - hw * v[i];
      w = primitive(w);
    }
  }
  for (auto& r : rays) {
    Int hr = dot(h, r);
    if (hr != 0) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = hv * r[i] - hr * v[i];
      r = primitive(r);
    }
  }
  return true;
}

// Orthogonal projection of each vector onto the complement of span(basis),
// made primitive, zero vectors dropped.
std::vector<IntVec> project_all(const std::vector<IntVec>& vs, const std::vector<IntVec>& basis) {
  std::vector<RatVec> rat_basis;
  for (const auto& b : basis) rat_basis.push_back(to_rat(b));
  std::vector<IntVec> out;
  for (const auto& v : vs) {
    IntVec p = primitive(project_out(to_rat(v), rat_basis));
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  sort_unique(out);
  return out;
}

// Primitive rows of the reduced echelon form of span(vs).
std::vector<IntVec> echelon_basis(std::size_t dim, const std::vector<IntVec>& vs) {
  if (vs.empty()) return {};
  std::vector<std::size_t> pivots;
  Mat r = rref(Mat::from_rows(vs, dim), &pivots);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(primitive(r.row(i)));
  return out;
}

std::vector<IntVec> orthogonal_complement(std::size_t dim, const std::vector<IntVec>& vs) {
  if (vs.empty()) {
    std::vector<IntVec> all;
    for (std::size_t i = 0; i < dim; ++i) all.push_back(to_int(unit_vector(dim, i)));
    return all;
  }
  auto ns = nullspace(Mat::from_rows(vs, dim));
  return echelon_basis(dim, to_primitive(ns));
}

ConeRep canonical_from_generators(std::size_t dim, const Generators& gens) {
  // The dual cone's extreme rays are the facets; its lineality is the
  // orthogonal complement of the span.
  Generators dual = double_description(dim, gens.rays, gens.lineality);
  ConeRep c;
  c.ambient_dim = dim;
  c.lineality = echelon_basis(dim, gens.lineality);
  c.rays = project_all(gens.rays, c.lineality);
  std::vector<IntVec> span = c.rays;
  span.insert(span.end(), c.lineality.begin(), c.lineality.end());
  c.eqs = orthogonal_complement(dim, span);
  c.ineqs = project_all(dual.rays, c.eqs);
  return c;
}

}  // namespace

Generators double_description(std::size_t dim, const std::vector<IntVec>& ineqs,
                              const std::vector<IntVec>& eqs) {
  check_dims(dim, ineqs, "double_description");
  check_dims(dim, eqs, "double_description");
  Generators g;
  for (std::size_t i = 0; i < dim; ++i) g.lineality.push_back(to_int(unit_vector(dim, i)));

  for (const auto& e : eqs) {
    IntVec h = primitive(e);
    if (is_zero(h)) continue;
    IntVec v;
    eliminate_lineality(h, g.lineality, g.rays, v);
  }

  std::vector<IntVec> processed;
  for (const auto& raw : ineqs) {
    IntVec h = primitive(raw);
    if (is_zero(h)) continue;
    IntVec v;
    if (eliminate_lineality(h, g.lineality, g.rays, v)) {
      g.rays.push_back(std::move(v));
      processed.push_back(std::move(h));
      continue;
    }
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Int> values(g.rays.size());
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
      values[i] = dot(h, g.rays[i]);
      int s = sgn(values[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (neg.empty()) {
      processed.push_back(std::move(h));
      continue;
    }
    std::vector<std::vector<std::size_t>> tight(g.rays.size());
    for (std::size_t i = 0; i < g.rays.size(); ++i) tight[i] = tight_set(g.rays[i], processed);

    std::vector<IntVec> next;
    for (auto i : pos) next.push_back(g.rays[i]);
    for (auto i : zero) next.push_back(g.rays[i]);
    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<std::size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(), tight[n].end(),
                              std::back_inserter(common));
        bool adjacent = true;
        for (std::size_t k = 0; k < g.rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (includes_sorted(tight[k], common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec r(dim);
        for (std::size_t i = 0; i < dim; ++i)
          r[i] = values[p] * g.rays[n][i] - values[n] * g.rays[p][i];
        next.push_back(primitive(r));
      }
    }
    g.rays = std::move(next);
    processed.push_back(std::move(h));
  }
  sort_unique(g.rays);
  return g;
}

ConeRep cone_from_rays(std::size_t dim, const std::vector<IntVec>& rays,
                       const std::vector<IntVec>& lineality) {
  check_dims(dim, rays, "cone_from_rays");
  check_dims(dim, lineality, "cone_from_rays");
  Generators input;
  for (const auto& r : rays)
    if (!is_zero(r)) input.rays.push_back(primitive(r));
  for (const auto& l : lineality)
    if (!is_zero(l)) input.lineality.push_back(primitive(l));
  // Facets first, then regenerate a minimal generator system from them.
  Generators dual = double_description(dim, input.rays, input.lineality);
  Generators minimal = double_description(dim, dual.rays, dual.lineality);
  return canonical_from_generators(dim, minimal);
}

ConeRep cone_from_rays(std::size_t dim, const std::vector<RatVec>& rays,
                       const std::vector<RatVec>& lineality) {
  return cone_from_rays(dim, to_primitive(rays), to_primitive(lineality));
}

ConeRep cone_from_ineqs(std::size_t dim, const std::vector<IntVec>& ineqs,
                        const std::vector<IntVec>& eqs) {
  check_dims(dim, ineqs, "cone_from_ineqs");
  check_dims(dim, eqs, "cone_from_ineqs");
  return canonical_from_generators(dim, double_description(dim, ineqs, eqs));
}

ConeRep cone_from_ineqs(std::size_t dim, const std::vector<RatVec>& ineqs,
                        const std::vector<RatVec>& eqs) {
  return cone_from_ineqs(dim, to_primitive(ineqs), to_primitive(eqs));
}

ConeRep zero_cone(std::size_t dim) { return cone_from_rays(dim, std::vector<IntVec>{}); }

ConeRep orthant(std::size_t dim) {
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < dim; ++i) rays.push_back(to_int(unit_vector(dim, i)));
  return cone_from_rays(dim, rays);
}

std::vector<Face> facets(const ConeRep& c) {
  require(c.is_pointed(), ErrorKind::Unsupported, "facets: cone is not pointed");
  std::vector<Face> out;
  for (const auto& h : c.ineqs) {
    Face f;
    f.functional = h;
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
      if (dot(h, c.rays[i]) == 0) {
        f.generator_indices.push_back(i);
        f.generators.push_back(c.rays[i]);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

ConeRep intersect(const ConeRep& a, const ConeRep& b) {
  require(a.ambient_dim == b.ambient_dim, ErrorKind::Input, "intersect: dimension mismatch");
  std::vector<IntVec> ineqs = a.ineqs, eqs = a.eqs;
  ineqs.insert(ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  eqs.insert(eqs.end(), b.eqs.begin(), b.eqs.end());
  return cone_from_ineqs(a.ambient_dim, ineqs, eqs);
}

ConeRep preimage_linear(const ConeRep& c, const Mat& l) {
  require(l.rows() == c.ambient_dim, ErrorKind::Input,
          "preimage_linear: map target dimension does not match the cone");
  auto pull = [&](const std::vector<IntVec>& fs) {
    std::vector<RatVec> out;
    Mat lt = l.transpose();
    for (const auto& f : fs) out.push_back(lt * to_rat(f));
    return out;
  };
  return cone_from_ineqs(l.cols(), pull(c.ineqs), pull(c.eqs));
}

ConeRep image_linear(const ConeRep& c, const Mat& l) {
  require(l.cols() == c.ambient_dim, ErrorKind::Input,
          "image_linear: map source dimension does not match the cone");
  std::vector<RatVec> rays, lin;
  for (const auto& r : c.rays) rays.push_back(l * to_rat(r));
  for (const auto& r : c.lineality) lin.push_back(l * to_rat(r));
  return cone_from_rays(l.rows(), rays, lin);
}

ConeRep minkowski_sum(const ConeRep& a, const ConeRep& b) {
  require(a.ambient_dim == b.ambient_dim, ErrorKind::Input, "minkowski_sum: dimension mismatch");
  std::vector<IntVec> rays = a.rays, lin = a.lineality;
  rays.insert(rays.end(), b.rays.begin(), b.rays.end());
  lin.insert(lin.end(), b.lineality.begin(), b.lineality.end());
  return cone_from_rays(a.ambient_dim, rays, lin);
}

ConeRep product(const ConeRep& a, const ConeRep& b) {
  const std::size_t dim = a.ambient_dim + b.ambient_dim;
  auto pad = [&](const std::vector<IntVec>& vs, bool first) {
    std::vector<IntVec> out;
    for (const auto& v : vs) {
      IntVec w(dim, Int(0));
      std::copy(v.begin(), v.end(), w.begin() + (first ? 0 : static_cast<long>(a.ambient_dim)));
      out.push_back(std::move(w));
    }
    return out;
  };
  std::vector<IntVec> ineqs = pad(a.ineqs, true), eqs = pad(a.eqs, true);
  auto bi = pad(b.ineqs, false), be = pad(b.eqs, false);
  ineqs.insert(ineqs.end(), bi.begin(), bi.end());
  eqs.insert(eqs.end(), be.begin(), be.end());
  return cone_from_ineqs(dim, ineqs, eqs);
}

bool contains(const ConeRep& c, const RatVec& x) {
  require(x.size() == c.ambient_dim, ErrorKind::Input, "contains: dimension mismatch");
  for (const auto& e : c.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& h : c.ineqs)
    if (dot(h, x) < 0) return false;
  return true;
}

bool contains(const ConeRep& c, const IntVec& x) { return contains(c, to_rat(x)); }

bool contains_relative_interior(const ConeRep& c, const RatVec& x) {
  require(x.size() == c.ambient_dim, ErrorKind::Input, "contains: dimension mismatch");
  for (const auto& e : c.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& h : c.ineqs)
    if (dot(h, x) <= 0) return false;
  return true;
}

bool is_subcone(const ConeRep& inner, const ConeRep& outer) {
  require(inner.ambient_dim == outer.ambient_dim, ErrorKind::Input, "is_subcone: dimension mismatch");
  for (const auto& r : inner.rays)
    if (!contains(outer, r)) return false;
  for (const auto& l : inner.lineality) {
    if (!contains(outer, l)) return false;
    IntVec neg = l;
    for (auto& x : neg) x = -x;
    if (!contains(outer, neg)) return false;
  }
  return true;
}

std::size_t dim(const ConeRep& c) { return c.ambient_dim - c.eqs.size(); }

// ---------------------------------------------------------------------------
// Polytopes via homogenization: P = {y : (y, 1) in C}, C = cone over P.

namespace {

Polytope polytope_from_homogeneous(std::size_t dim, const ConeRep& hom) {
  Polytope p;
  p.ambient_dim = dim;
  bool has_finite = false;
  for (const auto& r : hom.rays)
    if (r[dim] > 0) has_finite = true;
  if (!has_finite) return p;
  require(hom.is_pointed(), ErrorKind::Unbounded, "slice is unbounded (lineality)");
  for (const auto& r : hom.rays) {
    require(r[dim] > 0, ErrorKind::Unbounded, "slice is unbounded");
    RatVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = make_rat(r[i], r[dim]);
    p.vertices.push_back(std::move(v));
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  auto affine = [&](const IntVec& h) {
    return AffineForm{IntVec(h.begin(), h.begin() + static_cast<long>(dim)), h[dim]};
  };
  IntVec t_nonneg = to_int(unit_vector(dim + 1, dim));
  for (const auto& h : hom.ineqs)
    if (h != t_nonneg) p.ineqs.push_back(affine(h));
  for (const auto& e : hom.eqs) p.eqs.push_back(affine(e));
  std::sort(p.ineqs.begin(), p.ineqs.end());
  std::sort(p.eqs.begin(), p.eqs.end());
  return p;
}

}  // namespace

Polytope fiber_slice(const ConeRep& c, const std::vector<std::size_t>& fixed_coords,
                     const RatVec& values) {
  require(fixed_coords.size() == values.size(), ErrorKind::Input,
          "fiber_slice: one value per fixed coordinate");
  std::vector<int> role(c.ambient_dim, -1);  // -1 free, else index into values
  for (std::size_t k = 0; k < fixed_coords.size(); ++k) {
    require(fixed_coords[k] < c.ambient_dim, ErrorKind::Input, "fiber_slice: coordinate out of range");
    require(role[fixed_coords[k]] == -1, ErrorKind::Input, "fiber_slice: coordinate fixed twice");
    role[fixed_coords[k]] = static_cast<int>(k);
  }
  const std::size_t free_dim = c.ambient_dim - fixed_coords.size();
  auto homogenize = [&](const IntVec& h) {
    RatVec out;
    Rat constant = 0;
    for (std::size_t i = 0; i < c.ambient_dim; ++i) {
      if (role[i] < 0)
        out.emplace_back(h[i]);
      else
        constant += h[i] * values[static_cast<std::size_t>(role[i])];
    }
    out.push_back(constant);
    return out;
  };
  std::vector<RatVec> ineqs, eqs;
  for (const auto& h : c.ineqs) ineqs.push_back(homogenize(h));
  for (const auto& e : c.eqs) eqs.push_back(homogenize(e));
  ineqs.push_back(unit_vector(free_dim + 1, free_dim));
  return polytope_from_homogeneous(free_dim, cone_from_ineqs(free_dim + 1, ineqs, eqs));
}

Polytope polytope_from_vertices(std::size_t dim, const std::vector<RatVec>& points) {
  std::vector<RatVec> rays;
  for (const auto& v : points) {
    require(v.size() == dim, ErrorKind::Input, "polytope_from_vertices: dimension mismatch");
    RatVec h(v);
    h.push_back(1);
    rays.push_back(std::move(h));
  }
  Polytope p = polytope_from_homogeneous(dim, cone_from_rays(dim + 1, rays));
  p.ambient_dim = dim;
  return p;
}

bool contains(const Polytope& p, const RatVec& x) {
  require(x.size() == p.ambient_dim, ErrorKind::Input, "contains: dimension mismatch");
  if (p.empty()) return false;
  for (const auto& e : p.eqs)
    if (dot(e.normal, x) + e.offset != 0) return false;
  for (const auto& h : p.ineqs)
    if (dot(h.normal, x) + h.offset < 0) return false;
  return true;
}

long dim(const Polytope& p) {
  if (p.empty()) return -1;
  std::vector<RatVec> diffs;
  for (const auto& v : p.vertices) diffs.push_back(v - p.vertices.front());
  return static_cast<long>(rank(Mat::from_rows(diffs, p.ambient_dim)));
}

Polytope translate(const Polytope& p, const RatVec& shift) {
  require(shift.size() == p.ambient_dim, ErrorKind::Input, "translate: dimension mismatch");
  std::vector<RatVec> moved;
  for (const auto& v : p.vertices) moved.push_back(v + shift);
  if (moved.empty()) return p;
  return polytope_from_vertices(p.ambient_dim, moved);
}

}  // namespace okzar
