#pragma once

#include <string>
#include <vector>

#include "okzar/document.hpp"
#include "okzar/okounkov.hpp"
#include "oracles/oracles.hpp"

namespace testsupport {

inline okzar::VarietyData fixture(const std::string& name) {
  return okzar::load_variety_file(std::string(OKZAR_DATA_DIR) + "/" + name + ".json");
}

inline okzar::IntVec iv(std::initializer_list<long> xs) {
  okzar::IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline okzar::RatVec rv(std::initializer_list<long> xs) {
  okzar::RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<okzar::IntVec> sorted(std::vector<okzar::IntVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<okzar::RatVec> sorted(std::vector<okzar::RatVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline oracle::Vec to_q(const okzar::IntVec& v) { return oracle::Vec(v.begin(), v.end()); }
inline oracle::Vec to_q(const okzar::RatVec& v) { return oracle::Vec(v.begin(), v.end()); }

/// Concatenation of a valuation vector and a divisor class.
inline okzar::IntVec body_point(okzar::IntVec nu, const okzar::IntVec& d) {
  nu.insert(nu.end(), d.begin(), d.end());
  return nu;
}

}  // namespace testsupport
