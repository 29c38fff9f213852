#pragma once

// Integer points of cones and polytopes.

#include <cstddef>
#include <vector>

#include "okzar/polyhedra.hpp"

namespace okzar {

struct HilbertBasis {
  ConeRep cone;
  std::vector<IntVec> elements;  // sorted lexicographically
};

struct EhrhartPoly {
  std::vector<Rat> coefficients;  // coefficients[i] multiplies t^i

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Rat operator()(const Rat& t) const;
};

/// Subsets of ray indices forming simplicial cones whose union is c.
std::vector<std::vector<std::size_t>> triangulate(const ConeRep& c);

/// Unique minimal generating set of the semigroup c ∩ Z^d. The cone must be pointed.
HilbertBasis hilbert_basis(const ConeRep& c);
bool generators_are_hilbert_basis(const ConeRep& c);

/// Number of integer points of k·p.
Int lattice_point_count(const Polytope& p, long k);
/// Requires integral vertices; interpolates on k = 0..d and verifies on k = d+1..2d.
EhrhartPoly ehrhart_polynomial(const Polytope& p);

}  // namespace okzar
