#pragma once

// Integral-conjugation normal forms.
//
// Shapes (1-based entries, n >= 3):
//   H   first column vanishes below row 2: h(i,1) = 0 for i >= 3
//   H0  type H and h(1,1) = 0
//   HN  type H0 and gcd(h(2,1), h(1,n), ..., h(n,n)) = 1
//
// Every conjugation is stored as reduced = p * original * p_inv.

#include "torusrank/exactmat.hpp"

#include <string_view>
#include <vector>

namespace torusrank {

enum class TypeTag { General, H, H0, HN };

std::string_view to_string(TypeTag tag);

// Strongest tag by direct entry inspection. Requires a square matrix, n >= 3.
TypeTag classify(const Mat& a);

class UnimodChain {
 public:
  explicit UnimodChain(std::size_t n) : p_(Mat::identity(n)), p_inv_(Mat::identity(n)) {}

  // Checks p * p_inv = I.
  static UnimodChain from_pair(Mat p, Mat p_inv);
  // Ingests a conjugator t given in the form reduced = t^{-1} * a * t.
  static UnimodChain from_right_conjugator(const Mat& t);

  const Mat& p() const { return p_; }
  const Mat& p_inv() const { return p_inv_; }
  std::size_t dim() const { return p_.rows(); }
  bool is_identity() const { return p_ == Mat::identity(dim()); }

  // Append a conjugation by x (x_inv its inverse): p <- x p, p_inv <- p_inv x_inv.
  void append(const Mat& x, const Mat& x_inv);
  // Append a whole later chain.
  void append(const UnimodChain& later) { append(later.p_, later.p_inv_); }

  // The t with reduced = t^{-1} * original * t.
  const Mat& as_right_conjugator() const { return p_inv_; }

  Mat apply(const Mat& a) const { return p_ * a * p_inv_; }
  // Vectors of the reduced frame mapped back to the original frame.
  ColVec pull_back(const ColVec& w) const { return p_inv_ * w; }
  ColVec push_forward(const ColVec& v) const { return p_ * v; }

  friend bool operator==(const UnimodChain&, const UnimodChain&) = default;

 private:
  UnimodChain(Mat p, Mat p_inv) : p_(std::move(p)), p_inv_(std::move(p_inv)) {}

  Mat p_;
  Mat p_inv_;
};

struct Reduction {
  Mat reduced;
  UnimodChain chain;
};

// Conjugate a square integer matrix (n >= 3) into type H, keeping a(1,1).
// Rows k = 3..n are cleared in increasing order.
Reduction to_type_h(const Mat& a);

// k with gcd(v1, v3 + k*v2) = gcd(v1, v2, v3), plus the prime partition that
// produced it.
struct KChoice {
  Int k;
  Int gcd;              // gcd(v1, v2, v3)
  std::vector<Int> p1;  // primes of gcd(v1/d) dividing gcd(v3/d)
  std::vector<Int> p2;  // remaining primes dividing gcd(v2/d)
  std::vector<Int> p3;  // the rest; k is their product
  bool by_enumeration = false;
};

// Bound for the enumeration fallback used when factorization is refused.
inline constexpr long kChooseKSearchBound = 1000000;

KChoice choose_k_traced(const ColVec& v1, const ColVec& v2, const ColVec& v3);
Int choose_k(const ColVec& v1, const ColVec& v2, const ColVec& v3);

// Conjugate a type-H0 matrix with entry gcd 1 into type HN.
Reduction to_type_hn(const Mat& h0);

}  // namespace torusrank
