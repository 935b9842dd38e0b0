#pragma once

#include "torusrank/exactmat.hpp"

#include <vector>

namespace torusrank {

// U * X * V = D, U and V unimodular, D diagonal with nonnegative entries and
// D(i,i) | D(i+1,i+1).
struct SmithDecomp {
  Mat u;
  Mat d;
  Mat v;

  // The diagonal of d (length min(rows, cols)).
  std::vector<Int> diagonal() const;
};

SmithDecomp smith_normal_form(const Mat& x);

// Column-style Hermite form: X * U = H with U unimodular. Pivot of column c
// sits at pivot_rows[c], is positive, and every entry to its left in the same
// row lies in [0, pivot). Columns past rank() are zero.
struct HermiteForm {
  Mat h;
  Mat u;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
  // True iff v lies in the column lattice of h.
  bool contains(const ColVec& v) const;
};

HermiteForm hermite_normal_form(const Mat& x);

// Square unimodular matrix whose leading columns are exactly the columns of y.
// Requires every determinantal divisor d_1(y) .. d_m(y) to be 1.
Mat extend_to_basis(const Mat& y);

}  // namespace torusrank
