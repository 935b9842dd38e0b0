#include "torusrank/exactmat.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace torusrank {

ColVec::ColVec(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

ColVec ColVec::unit(std::size_t dim, std::size_t index) {
  ColVec v(dim);
  v[index] = 1;
  return v;
}

bool ColVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return sgn(x) == 0; });
}

bool operator<(const ColVec& a, const ColVec& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

ColVec operator+(const ColVec& a, const ColVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: dimension mismatch");
  ColVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ColVec operator-(const ColVec& a, const ColVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: dimension mismatch");
  ColVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ColVec operator*(const Int& k, const ColVec& v) {
  ColVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(std::span<const ColVec> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("columns of unequal dimension");
    m.set_column(c, columns[c]);
  }
  return m;
}

ColVec Mat::column(std::size_t c) const {
  ColVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_column(std::size_t c, const ColVec& v) {
  if (v.size() != rows_) throw DimensionError("set_column: dimension mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return sgn(x) == 0; });
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void Mat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, i), (*this)(r, j));
}

void Mat::combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                       const Int& d) {
  Int x, y;
  for (std::size_t k = 0; k < cols_; ++k) {
    Int& ri = (*this)(i, k);
    Int& rj = (*this)(j, k);
    x = a * ri + b * rj;
    y = c * ri + d * rj;
    ri.swap(x);
    rj.swap(y);
  }
}

void Mat::combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                       const Int& d) {
  Int x, y;
  for (std::size_t k = 0; k < rows_; ++k) {
    Int& ci = (*this)(k, i);
    Int& cj = (*this)(k, j);
    x = a * ci + b * cj;
    y = c * ci + d * cj;
    ci.swap(x);
    cj.swap(y);
  }
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Mat p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

ColVec operator*(const Mat& a, const ColVec& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: dimension mismatch");
  ColVec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * v[k];
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
  Mat s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: shape mismatch");
  Mat s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) - b(i, j);
  return s;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat shift_diagonal(const Mat& a, const Int& lambda) {
  if (!a.is_square()) throw DimensionError("shift_diagonal: matrix is not square");
  Mat s = a;
  for (std::size_t i = 0; i < a.rows(); ++i) s(i, i) += lambda;
  return s;
}

Int det(const Mat& a) {
  if (!a.is_square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Mat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j).swap(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const Mat& a) {
  if (!a.is_square() || a.rows() == 0) return false;
  return abs(det(a)) == 1;
}

Mat unimodular_inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionError("unimodular_inverse: matrix is not square");
  const std::size_t n = a.rows();
  Mat m = a;
  Mat inv = Mat::identity(n);
  // Gauss-Jordan with unimodular 2x2 row combinations; pivots must end up +-1.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Bezout b = extended_gcd(m(c, c), m(r, c));
      Int u = m(c, c) / b.g;
      Int w = m(r, c) / b.g;
      m.combine_rows(c, r, b.s, b.t, -w, u);
      inv.combine_rows(c, r, b.s, b.t, -w, u);
    }
    if (abs(m(c, c)) != 1) throw PreconditionError("unimodular_inverse: matrix is not unimodular");
    if (sgn(m(c, c)) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = -m(c, j);
        inv(c, j) = -inv(c, j);
      }
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t r = 0; r < c; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Int q = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= q * m(c, j);
        inv(r, j) -= q * inv(c, j);
      }
    }
  }
  return inv;
}

Int gcd_entries(std::span<const Int> values) {
  Int g = 0;
  for (const Int& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Int gcd_entries(const Mat& a) {
  Int g = 0;
  for (std::size_t i = 0; i < a.rows() && g != 1; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
  return g;
}

Int gcd_entries(const ColVec& v) { return gcd_entries(std::span<const Int>(v.entries())); }

Bezout extended_gcd(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string to_string(const ColVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const ColVec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ']';
}

}  // namespace torusrank
