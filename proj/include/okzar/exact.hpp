#pragma once

// Exact scalars and dense rational linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okzar/error.hpp"

namespace okzar {

using Int = mpz_class;
/// mpq_class keeps every value in lowest terms with a positive denominator
/// after each arithmetic operation; make_rat canonicalizes raw fractions.
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // throws Input if a coordinate is fractional
bool is_integral(const RatVec& v);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

/// Positive multiple of v with coprime integer entries (zero maps to zero).
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& v);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);

RatVec unit_vector(std::size_t dim, std::size_t index);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static Mat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<RatVec>& cols, std::size_t rows);
  static Mat from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec column(std::size_t j) const;
  Mat transpose() const;
  bool is_integral() const;

  RatVec operator*(const RatVec& x) const;
  Mat operator*(const Mat& other) const;
  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form; pivot columns are appended to `pivots` when given.
Mat rref(Mat a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Mat& a);
/// Basis of {x : A x = 0}, one vector per free column of rref(A).
std::vector<RatVec> nullspace(const Mat& a);

/// Unique solution of A x = b when A has full column rank and the system is
/// consistent; nullopt otherwise.
std::optional<RatVec> solve_exact(const Mat& a, const RatVec& b);
Rat determinant(const Mat& a);
std::optional<Mat> inverse(const Mat& a);

/// True iff the n integer vectors form a Z-basis of Z^n.
bool is_lattice_basis(std::span<const RatVec> vectors);
bool is_lattice_basis(std::span<const IntVec> vectors);

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
RatVec project_out(const RatVec& v, const std::vector<RatVec>& basis);

}  // namespace okzar
