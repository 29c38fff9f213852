#pragma once

// Rational polyhedral cones and polytopes in exact arithmetic.
//
// A cone is kept in both descriptions at once. The canonical form makes two
// equal cones compare equal member by member:
//   * lineality: primitive rows of the reduced echelon basis of the lineality space;
//   * rays: extreme rays of the pointed quotient, projected orthogonally onto
//     the complement of the lineality space, made primitive and sorted;
//   * eqs: primitive echelon basis of the orthogonal complement of the span;
//   * ineqs: facet functionals projected onto the span, made primitive and sorted.
// The cone is {x : e(x) = 0 for e in eqs, h(x) >= 0 for h in ineqs}
// = cone(rays) + span(lineality).

#include <cstddef>
#include <vector>

#include "okzar/exact.hpp"

namespace okzar {

struct ConeRep {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
  std::vector<IntVec> ineqs;
  std::vector<IntVec> eqs;

  std::size_t lineality_dim() const { return lineality.size(); }
  bool is_pointed() const { return lineality.empty(); }
  bool is_full_dimensional() const { return eqs.empty(); }
  bool operator==(const ConeRep&) const = default;
};

struct Face {
  IntVec functional;
  std::vector<std::size_t> generator_indices;  // into the parent's rays
  std::vector<IntVec> generators;
};

/// Affine functional: normal . y + offset >= 0 (or == 0 for equations).
struct AffineForm {
  IntVec normal;
  Int offset;
  bool operator==(const AffineForm&) const = default;
  auto operator<=>(const AffineForm& o) const {
    if (normal != o.normal) return normal < o.normal ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    if (offset == o.offset) return std::strong_ordering::equal;
    return offset < o.offset ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

struct Polytope {
  std::size_t ambient_dim = 0;
  std::vector<RatVec> vertices;  // sorted lexicographically
  std::vector<AffineForm> ineqs;
  std::vector<AffineForm> eqs;

  bool empty() const { return vertices.empty(); }
  bool operator==(const Polytope&) const = default;
};

/// Generators of {x : A x >= 0, E x = 0} by the double description method.
struct Generators {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};
Generators double_description(std::size_t dim, const std::vector<IntVec>& ineqs,
                              const std::vector<IntVec>& eqs = {});

ConeRep cone_from_rays(std::size_t dim, const std::vector<RatVec>& rays,
                       const std::vector<RatVec>& lineality = {});
ConeRep cone_from_rays(std::size_t dim, const std::vector<IntVec>& rays,
                       const std::vector<IntVec>& lineality = {});
ConeRep cone_from_ineqs(std::size_t dim, const std::vector<RatVec>& ineqs,
                        const std::vector<RatVec>& eqs = {});
ConeRep cone_from_ineqs(std::size_t dim, const std::vector<IntVec>& ineqs,
                        const std::vector<IntVec>& eqs = {});

ConeRep zero_cone(std::size_t dim);
ConeRep orthant(std::size_t dim);

/// One face per facet inequality. Requires a pointed cone.
std::vector<Face> facets(const ConeRep& c);

ConeRep intersect(const ConeRep& a, const ConeRep& b);
/// {x : L x in c}; L has c.ambient_dim rows.
ConeRep preimage_linear(const ConeRep& c, const Mat& l);
/// {L x : x in c}.
ConeRep image_linear(const ConeRep& c, const Mat& l);
ConeRep minkowski_sum(const ConeRep& a, const ConeRep& b);
/// {(x, y) : x in a, y in b}.
ConeRep product(const ConeRep& a, const ConeRep& b);

bool contains(const ConeRep& c, const RatVec& x);
bool contains(const ConeRep& c, const IntVec& x);
/// Strict interior relative to the linear span.
bool contains_relative_interior(const ConeRep& c, const RatVec& x);
bool is_subcone(const ConeRep& inner, const ConeRep& outer);
std::size_t dim(const ConeRep& c);

/// Slice of c obtained by fixing the listed coordinates. The result lives in
/// the remaining coordinates, in their original order. Throws Unbounded when
/// the slice is nonempty and unbounded.
Polytope fiber_slice(const ConeRep& c, const std::vector<std::size_t>& fixed_coords,
                     const RatVec& values);

Polytope polytope_from_vertices(std::size_t dim, const std::vector<RatVec>& points);
bool contains(const Polytope& p, const RatVec& x);
/// Dimension of the affine hull; -1 for the empty polytope.
long dim(const Polytope& p);
Polytope translate(const Polytope& p, const RatVec& shift);

}  // namespace okzar
