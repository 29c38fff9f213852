#pragma once

// Picard-lattice data of a Bott-Samelson variety and its chamber structure.
//
// Divisor classes are coordinate vectors in the effective basis E_1..E_n of
// the level they live on. Divisor indices (E_i, D_j, chamber supports) are
// 1-based throughout, matching the usual naming.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "okzar/polyhedra.hpp"

namespace okzar {

struct VarietyData {
  std::string name;
  std::size_t n = 0;
  /// Level k (k = 0..n-1) holds an (n-k)x(n-k) integer matrix whose column
  /// j is D_{j+1} of the level-k subvariety in that level's E-coordinates.
  std::vector<Mat> basis_change;
  /// Level k (k = 0..n-2): class of E_{n-k}|_{Y_{k+1}} in level-(k+1) E-coordinates.
  std::vector<IntVec> restriction;
  /// Named sub-cones of the level-0 Picard space, by generators.
  std::map<std::string, std::vector<RatVec>> subcones;
  /// Non-fatal findings recorded by load_variety.
  std::vector<std::string> warnings;

  std::size_t dim_at(std::size_t level) const { return n - level; }
  RatVec d_class(std::size_t j, std::size_t level = 0) const;  // D_j, 1-based
  RatVec e_class(std::size_t i, std::size_t level = 0) const;  // E_i, 1-based
  /// Matrix of D|_{Y_{level+1}} on level-`level` E-coordinates: identity on
  /// the first m-1 coordinates, last coordinate mapped to the restriction vector.
  Mat restriction_map(std::size_t level = 0) const;
  /// The variety Y_level of the horizontal flag with its own level data.
  VarietyData truncated(std::size_t level) const;
};

/// Validates every structural invariant; throws Data on violation.
VarietyData load_variety(VarietyData raw);

ConeRep eff_cone(const VarietyData& v, std::size_t level = 0);
ConeRep nef_cone(const VarietyData& v, std::size_t level = 0);
bool is_nef(const VarietyData& v, const RatVec& d, std::size_t level = 0);
bool is_effective(const VarietyData& v, const RatVec& d, std::size_t level = 0);
/// Coordinates of d in the D-basis of the level.
RatVec d_coordinates(const VarietyData& v, const RatVec& d, std::size_t level = 0);

/// True iff Cone(E_i : i in support) meets the nef cone only in 0.
bool fixed_support_test(const VarietyData& v, const std::vector<std::size_t>& support);

struct FacetPairing {
  Face distinguished;                     // F_1, separates no E_i
  std::map<std::size_t, Face> by_fixed;   // i -> F_i for i = 2..n
  /// D-indices (1-based) spanning a face.
  std::vector<std::size_t> d_indices(const Face& f) const;
  std::vector<std::size_t> nef_ray_to_d;  // nef cone ray index -> D index
};
FacetPairing facet_pairing(const VarietyData& v);

struct ZariskiChamber {
  std::vector<std::size_t> support;              // fixed E-indices
  std::vector<std::size_t> nef_face_generators;  // D-indices spanning the nef face
  std::vector<RatVec> generators;                // D's then E's, in that order
  std::vector<std::string> generator_names;
  ConeRep cone;
};

struct ZariskiDecomposition {
  RatVec positive;
  RatVec negative;
  std::vector<std::size_t> support;  // E-indices with nonzero coefficient in negative
  std::vector<std::size_t> chamber_support;
};

/// One chamber per fixed support (the empty support gives the nef cone),
/// sorted by support size, then lexicographically.
std::vector<ZariskiChamber> zariski_chambers(const VarietyData& v);

/// With `validate`, every chamber accepting d must produce the same split.
ZariskiDecomposition zariski_decompose(const VarietyData& v, const RatVec& d, bool validate = false);
ZariskiDecomposition zariski_decompose(const VarietyData& v,
                                       const std::vector<ZariskiChamber>& chambers,
                                       const RatVec& d, bool validate = false);
ZariskiChamber chamber_of(const VarietyData& v, const RatVec& d);

/// Linear combination such as "D1+2D3" or "1/2E2-E1"; "0" when all coefficients vanish.
std::string format_combination(const RatVec& coeffs, char symbol);

/// True iff every chamber's generators form a Z-basis of the Picard lattice.
bool integral_decomposition_check(const VarietyData& v);

}  // namespace okzar
