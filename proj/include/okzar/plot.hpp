#pragma once

// Hyperplane sections of the chamber fan.

#include <string>
#include <vector>

#include "okzar/document.hpp"
#include "okzar/variety.hpp"

namespace okzar {

struct SliceCell {
  std::vector<std::size_t> support;
  std::vector<std::string> generator_names;
  Polytope polygon;  // chamber ∩ {h . x = 1}, in E-coordinates
};

/// "1,1,1" or "1, 1/2, 2"
RatVec parse_hyperplane(const std::string& text, std::size_t dim);

/// Sections of all chambers with {h . x = 1}. Cells of dimension below n-1
/// are dropped. When the section of Eff is unbounded it is cut by
/// sum(x) <= B, B twice the largest sum(g)/(h.g) over E_i and chamber
/// generators g with h.g > 0.
std::vector<SliceCell> chamber_slices(const VarietyData& v, const RatVec& h);

/// Chambers are drawn through the central projection x -> x / sum(x) onto the
/// simplex spanned by E_1..E_n (a triangle for n = 3, a tetrahedron seen
/// obliquely for n = 4).
std::string render_svg(const VarietyData& v, const std::vector<SliceCell>& cells);
Json scene_json(const VarietyData& v, const RatVec& h, const std::vector<SliceCell>& cells);

std::string support_color(const std::vector<std::size_t>& support);

}  // namespace okzar
