#include "torusrank/normal_form.hpp"

#include <algorithm>

namespace torusrank {

namespace {

// Zero d(i, t) against the pivot d(t, t) with a unimodular row combination.
void eliminate_row_entry(Mat& d, Mat& u, std::size_t t, std::size_t i) {
  const Int& p = d(t, t);
  const Int& q = d(i, t);
  if (sgn(p) != 0 && mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
    Int k = q / p;
    d.combine_rows(t, i, 1, 0, -k, 1);
    u.combine_rows(t, i, 1, 0, -k, 1);
    return;
  }
  Bezout b = extended_gcd(p, q);
  Int pg = p / b.g;
  Int qg = q / b.g;
  d.combine_rows(t, i, b.s, b.t, -qg, pg);
  u.combine_rows(t, i, b.s, b.t, -qg, pg);
}

void eliminate_col_entry(Mat& d, Mat& v, std::size_t t, std::size_t j) {
  const Int& p = d(t, t);
  const Int& q = d(t, j);
  if (sgn(p) != 0 && mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
    Int k = q / p;
    d.combine_cols(t, j, 1, 0, -k, 1);
    v.combine_cols(t, j, 1, 0, -k, 1);
    return;
  }
  Bezout b = extended_gcd(p, q);
  Int pg = p / b.g;
  Int qg = q / b.g;
  d.combine_cols(t, j, b.s, b.t, -qg, pg);
  v.combine_cols(t, j, b.s, b.t, -qg, pg);
}

}  // namespace

std::vector<Int> SmithDecomp::diagonal() const {
  std::vector<Int> diag;
  const std::size_t k = std::min(d.rows(), d.cols());
  diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) diag.push_back(d(i, i));
  return diag;
}

SmithDecomp smith_normal_form(const Mat& x) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  SmithDecomp out{Mat::identity(m), x, Mat::identity(n)};
  Mat& d = out.d;
  Mat& u = out.u;
  Mat& v = out.v;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        if (pr == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr == m) break;
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      for (;;) {
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0) eliminate_row_entry(d, u, t, i);
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0) eliminate_col_entry(d, v, t, j);
        bool column_clear = true;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0) column_clear = false;
        if (column_clear) break;
      }
      // Divisibility chain: fold an offending row into the pivot row and redo.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.combine_rows(t, bad, 1, 1, 0, 1);
      u.combine_rows(t, bad, 1, 1, 0, 1);
    }
    if (sgn(d(t, t)) < 0) {
      d(t, t) = -d(t, t);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return out;
}

bool HermiteForm::contains(const ColVec& v) const {
  if (v.size() != h.rows()) throw DimensionError("HermiteForm::contains: dimension mismatch");
  ColVec w = v;
  for (std::size_t c = 0; c < rank(); ++c) {
    const std::size_t r = pivot_rows[c];
    const Int& piv = h(r, c);
    if (!mpz_divisible_p(w[r].get_mpz_t(), piv.get_mpz_t())) return false;
    Int q = w[r] / piv;
    if (sgn(q) == 0) continue;
    for (std::size_t i = r; i < h.rows(); ++i) w[i] -= q * h(i, c);
  }
  return w.is_zero();
}

HermiteForm hermite_normal_form(const Mat& x) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  HermiteForm out{x, Mat::identity(n), {}};
  Mat& h = out.h;
  Mat& u = out.u;

  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < n; ++r) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(r, j)) == 0) continue;
      const Int p = h(r, c);
      const Int q = h(r, j);
      Bezout b = extended_gcd(p, q);
      Int pg = p / b.g;
      Int qg = q / b.g;
      h.combine_cols(c, j, b.s, b.t, -qg, pg);
      u.combine_cols(c, j, b.s, b.t, -qg, pg);
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      for (std::size_t i = 0; i < m; ++i) h(i, c) = -h(i, c);
      for (std::size_t i = 0; i < n; ++i) u(i, c) = -u(i, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t i = 0; i < m; ++i) h(i, j) -= q * h(i, c);
      for (std::size_t i = 0; i < n; ++i) u(i, j) -= q * u(i, c);
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  return out;
}

Mat extend_to_basis(const Mat& y) {
  const std::size_t n = y.rows();
  const std::size_t m = y.cols();
  if (m > n) throw PreconditionError("extend_to_basis: more columns than rows");
  SmithDecomp snf = smith_normal_form(y);
  for (std::size_t i = 0; i < m; ++i)
    if (snf.d(i, i) != 1)
      throw PreconditionError("extend_to_basis: columns cannot be extended (d_" +
                              std::to_string(i + 1) + " = " + snf.d(i, i).get_str() + ")");
  // y * V = U^{-1} * D, so U^{-1}'s leading columns span the same sublattice as y.
  Mat basis = unimodular_inverse(snf.u);
  for (std::size_t c = 0; c < m; ++c) basis.set_column(c, y.column(c));
  if (!is_unimodular(basis)) throw InternalError("extend_to_basis: completion is not unimodular");
  return basis;
}

}  // namespace torusrank
