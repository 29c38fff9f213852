#pragma once

// Global Newton-Okounkov bodies for the horizontal flag.
//
// A body of an m-dimensional level lives in R^{2m} with coordinates
// (nu_1..nu_m, d_1..d_m), d in that level's E-coordinates.

#include <cstddef>
#include <string>
#include <vector>

#include "okzar/lattice.hpp"
#include "okzar/variety.hpp"

namespace okzar {

/// One inductive step from the body of Y_1 to the body of the level above it.
struct RecursionStep {
  std::size_t dim = 0;           // m, dimension of the upper level
  ConeRep lower_body;            // body of Y_1, in R^{2(m-1)}
  ConeRep restricted_nef;        // Cone(D_1|Y_1, .., D_m|Y_1) in R^{m-1}
  ConeRep restricted_semigroup;  // lower_body ∩ (R^{m-1} x restricted_nef)
  Mat q;                         // (x, d) -> ((x_2..x_m), d|Y_1)
  ConeRep preimage;              // q^{-1}(restricted_semigroup)
  ConeRep valuation_zero;        // q^{-1}(..) ∩ ({0} x R^{m-1}_{>=0} x Nef)
  ConeRep body;                  // valuation_zero + fixed-divisor rays
};

struct OkounkovBody {
  std::size_t level_dim = 0;
  ConeRep cone;
  /// steps[0] builds this body; steps[k] builds the body of Y_k.
  std::vector<RecursionStep> steps;
};

OkounkovBody global_body(const VarietyData& v);
/// Body cone before the fixed-divisor rays are added.
ConeRep cone_of_S(const VarietyData& v);
/// Valuation vector of the defining section of an effective class along
/// the horizontal flag: E_i contributes to coordinate m+1-i.
RatVec canonical_valuation(const RatVec& effective_class);

OkounkovBody restrict_body(const OkounkovBody& b, const ConeRep& subcone);
/// Slice over a divisor class; empty when d is not effective.
Polytope divisor_body(const OkounkovBody& b, const RatVec& d);

struct SlabResult {
  Rat a;
  Polytope direct;       // slice of the body at nu_1 = a over D, in (nu_2..nu_n)
  Polytope via_formula;  // Delta_{Y_1}(P_a|Y_1) + nu(N_a|Y_1)
  RatVec shift;
  ZariskiDecomposition decomposition;  // of D - a E_n
};
SlabResult slab(const VarietyData& v, const OkounkovBody& b, const RatVec& d, const Rat& a);

struct CoxGenerator {
  IntVec valuation;
  IntVec divisor;
  std::string label;
};
struct CoxReport {
  HilbertBasis basis;
  bool generators_form_hilbert_basis = false;
  std::vector<IntVec> extra_elements;  // Hilbert basis elements that are not rays
  std::vector<CoxGenerator> generators;
};
HilbertBasis body_hilbert_basis(const OkounkovBody& b);
CoxReport cox_report(const VarietyData& v, const OkounkovBody& b);

/// Readable name of a class: "D1", "E3", else an expression in the D-basis
/// when nef, else in the E-basis.
std::string divisor_label(const VarietyData& v, const RatVec& d);

}  // namespace okzar
