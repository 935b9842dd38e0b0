#pragma once

// Exact integer matrix kernel. Everything here works over arbitrary-precision
// integers (GMP); there is no floating point and no modular shortcut anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusrank {

using Int = mpz_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented input contract was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a self-check fails. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ColVec {
 public:
  ColVec() = default;
  explicit ColVec(std::size_t dim) : entries_(dim) {}
  explicit ColVec(std::vector<Int> entries) : entries_(std::move(entries)) {}
  ColVec(std::initializer_list<long> values);

  static ColVec unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const;

  Int& operator[](std::size_t i) { return entries_[i]; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  const std::vector<Int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ColVec& a, const ColVec& b) { return a.entries_ == b.entries_; }
  // Lexicographic; used for de-duplication and canonical enumeration order.
  friend bool operator<(const ColVec& a, const ColVec& b);

  friend ColVec operator+(const ColVec& a, const ColVec& b);
  friend ColVec operator-(const ColVec& a, const ColVec& b);
  friend ColVec operator*(const Int& k, const ColVec& v);

 private:
  std::vector<Int> entries_;
};

// Dense row-major integer matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Int>>& rows);
  static Mat from_columns(std::span<const ColVec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ColVec column(std::size_t c) const;
  void set_column(std::size_t c, const ColVec& v);
  Mat transpose() const;
  bool is_zero() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i <- a*row_i + b*row_j ; row_j <- c*row_i + d*row_j (simultaneously)
  void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                    const Int& d);
  void combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                    const Int& d);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

Mat operator*(const Mat& a, const Mat& b);
ColVec operator*(const Mat& a, const ColVec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);

Mat mat_mul(const Mat& a, const Mat& b);

// a + lambda*I
Mat shift_diagonal(const Mat& a, const Int& lambda);

// Fraction-free (Bareiss) determinant.
Int det(const Mat& a);

bool is_unimodular(const Mat& a);

// Exact inverse of a unimodular matrix. Throws PreconditionError otherwise.
Mat unimodular_inverse(const Mat& a);

// gcd of absolute values of all entries; 0 for the zero matrix.
Int gcd_entries(const Mat& a);
Int gcd_entries(const ColVec& v);
Int gcd_entries(std::span<const Int> values);

// Canonical extended gcd: s*a + t*b = g with g >= 0 (GMP's minimal cofactors).
struct Bezout {
  Int g;
  Int s;
  Int t;
};
Bezout extended_gcd(const Int& a, const Int& b);

std::string to_string(const Mat& a);
std::string to_string(const ColVec& v);
std::ostream& operator<<(std::ostream& os, const Mat& a);
std::ostream& operator<<(std::ostream& os, const ColVec& v);

}  // namespace torusrank
