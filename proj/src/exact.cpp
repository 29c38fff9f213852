#include "okzar/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace okzar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input error";
    case ErrorKind::Data: return "data error";
    case ErrorKind::ModelViolation: return "model violation";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::Internal: return "internal consistency error";
  }
  return "error";
}

Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, ErrorKind::Input, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  require(!s.empty(), ErrorKind::Input, "empty number");
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size(); ++i) {
      char c = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-'))) ok = false;
    }
    require(ok && digits != "-", ErrorKind::Input, "malformed number '" + std::string(text) + "'");
    return Int(digits, 10);
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    require(x.get_den() == 1, ErrorKind::Input, "expected an integral vector");
    out.push_back(x.get_num());
  }
  return out;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive(const RatVec& v) {
  Int lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (lcm_den / x.get_den()));
  return primitive(out);
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return v;
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch in dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch");
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch");
  RatVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec operator*(const Rat& s, const RatVec& v) {
  RatVec out(v);
  for (auto& x : out) x *= s;
  return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch");
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorKind::Input, "dimension mismatch");
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec unit_vector(std::size_t dim, std::size_t index) {
  RatVec v(dim, Rat(0));
  v.at(index) = 1;
  return v;
}

// ---------------------------------------------------------------------------

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::Input, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::Input, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Mat Mat::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

RatVec Mat::row(std::size_t i) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVec Mat::column(std::size_t j) const {
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

RatVec Mat::operator*(const RatVec& x) const {
  require(x.size() == cols_, ErrorKind::Input, "matrix-vector dimension mismatch");
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

Mat Mat::operator*(const Mat& other) const {
  require(cols_ == other.rows_, ErrorKind::Input, "matrix product dimension mismatch");
  Mat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Mat rref(Mat a, std::vector<std::size_t>* pivots) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
    Rat inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(lead_row, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return a;
}

std::size_t rank(const Mat& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::vector<RatVec> nullspace(const Mat& a) {
  std::vector<std::size_t> pivots;
  Mat r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(a.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_exact(const Mat& a, const RatVec& b) {
  require(a.rows() == b.size(), ErrorKind::Input, "solve_exact: dimension mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  Mat r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // rank deficient
  RatVec x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = r(i, a.cols());
  return x;
}

Rat determinant(const Mat& a) {
  require(a.rows() == a.cols(), ErrorKind::Input, "determinant of a non-square matrix");
  Mat m = a;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rat f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& a) {
  require(a.rows() == a.cols(), ErrorKind::Input, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  Mat r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

bool is_lattice_basis(std::span<const RatVec> vectors) {
  const std::size_t n = vectors.size();
  for (const auto& v : vectors) {
    require(v.size() == n, ErrorKind::Input,
            "is_lattice_basis: need exactly as many vectors as the ambient dimension");
    require(is_integral(v), ErrorKind::Input, "is_lattice_basis: non-integral vector");
  }
  if (n == 0) return true;
  Rat det = determinant(Mat::from_columns(std::vector<RatVec>(vectors.begin(), vectors.end()), n));
  return abs(det) == 1;
}

bool is_lattice_basis(std::span<const IntVec> vectors) {
  std::vector<RatVec> rat;
  for (const auto& v : vectors) rat.push_back(to_rat(v));
  return is_lattice_basis(std::span<const RatVec>(rat));
}

RatVec project_out(const RatVec& v, const std::vector<RatVec>& basis) {
  if (basis.empty()) return v;
  Mat b = Mat::from_rows(basis, v.size());
  std::vector<std::size_t> pivots;
  Mat r = rref(b, &pivots);
  if (pivots.empty()) return v;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < pivots.size(); ++i) rows.push_back(r.row(i));
  Mat independent = Mat::from_rows(rows, v.size());
  Mat gram = independent * independent.transpose();
  auto coeffs = solve_exact(gram, independent * v);
  require(coeffs.has_value(), ErrorKind::Internal, "singular Gram matrix");
  return v - independent.transpose() * *coeffs;
}

}  // namespace okzar
