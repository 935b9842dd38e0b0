#include "torusrank/reduce.hpp"

#include "torusrank/factor.hpp"
#include "torusrank/normal_form.hpp"

namespace torusrank {

std::string_view to_string(TypeTag tag) {
  switch (tag) {
    case TypeTag::General: return "GENERAL";
    case TypeTag::H: return "H";
    case TypeTag::H0: return "H0";
    case TypeTag::HN: return "HN";
  }
  return "?";
}

TypeTag classify(const Mat& a) {
  if (!a.is_square()) throw DimensionError("classify: matrix is not square");
  const std::size_t n = a.rows();
  if (n < 3) throw PreconditionError("classify: matrix types are defined for n >= 3");
  for (std::size_t i = 2; i < n; ++i)
    if (sgn(a(i, 0)) != 0) return TypeTag::General;
  if (sgn(a(0, 0)) != 0) return TypeTag::H;
  Int g = a(1, 0);
  for (std::size_t i = 0; i < n; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, n - 1).get_mpz_t());
  return g == 1 ? TypeTag::HN : TypeTag::H0;
}

UnimodChain UnimodChain::from_pair(Mat p, Mat p_inv) {
  if (!p.is_square() || p.rows() != p_inv.rows() || !p_inv.is_square())
    throw DimensionError("UnimodChain: shape mismatch");
  if (p * p_inv != Mat::identity(p.rows()))
    throw PreconditionError("UnimodChain: p * p_inv is not the identity");
  return UnimodChain(std::move(p), std::move(p_inv));
}

UnimodChain UnimodChain::from_right_conjugator(const Mat& t) {
  return UnimodChain(unimodular_inverse(t), t);
}

void UnimodChain::append(const Mat& x, const Mat& x_inv) {
  p_ = x * p_;
  p_inv_ = p_inv_ * x_inv;
}

namespace {

// Conjugate by the signed swap of coordinates 2 and k (0-based: 1 and k).
void conjugate_swap(Mat& a, UnimodChain& chain, std::size_t k) {
  const std::size_t n = a.rows();
  Mat x = Mat::identity(n);
  x(1, 1) = 0;
  x(k, k) = 0;
  x(1, k) = 1;
  x(k, 1) = -1;
  Mat x_inv = x.transpose();
  a = x * a * x_inv;
  chain.append(x, x_inv);
}

// Conjugate by the Bezout block on coordinates 2 and k, moving
// gcd(a(2,1), a(k,1)) to (2,1) and clearing (k,1).
void conjugate_bezout(Mat& a, UnimodChain& chain, std::size_t k) {
  const std::size_t n = a.rows();
  const Int a21 = a(1, 0);
  const Int ak1 = a(k, 0);
  Bezout b = extended_gcd(a21, ak1);
  Mat y = Mat::identity(n);
  y(1, 1) = b.s;
  y(1, k) = b.t;
  y(k, 1) = -ak1 / b.g;
  y(k, k) = a21 / b.g;
  Mat y_inv = Mat::identity(n);
  y_inv(1, 1) = a21 / b.g;
  y_inv(1, k) = -b.t;
  y_inv(k, 1) = ak1 / b.g;
  y_inv(k, k) = b.s;
  a = y * a * y_inv;
  chain.append(y, y_inv);
}

Int gcd3(const ColVec& a, const ColVec& b, const ColVec& c) {
  Int g = gcd_entries(a);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gcd_entries(b).get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gcd_entries(c).get_mpz_t());
  return g;
}

Int gcd_pair(const ColVec& a, const ColVec& b) {
  Int g = gcd_entries(a);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gcd_entries(b).get_mpz_t());
  return g;
}

bool divides(const Int& p, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

}  // namespace

Reduction to_type_h(const Mat& a) {
  if (!a.is_square()) throw DimensionError("to_type_h: matrix is not square");
  const std::size_t n = a.rows();
  if (n < 3) throw PreconditionError("to_type_h: requires n >= 3");
  Reduction out{a, UnimodChain(n)};
  for (std::size_t k = 2; k < n; ++k) {
    if (sgn(out.reduced(k, 0)) == 0) continue;
    if (sgn(out.reduced(1, 0)) == 0) {
      conjugate_swap(out.reduced, out.chain, k);
      continue;  // (k,1) now holds -a(2,1) = 0
    }
    conjugate_bezout(out.reduced, out.chain, k);
  }
  return out;
}

KChoice choose_k_traced(const ColVec& v1, const ColVec& v2, const ColVec& v3) {
  if (v1.size() != v2.size() || v1.size() != v3.size())
    throw DimensionError("choose_k: vectors of unequal dimension");
  if (v1.is_zero()) throw PreconditionError("choose_k: v1 must be nonzero");

  KChoice out;
  out.gcd = gcd3(v1, v2, v3);
  const Int& d = out.gcd;  // nonzero since v1 is
  const Int g1 = gcd_entries(v1) / d;
  const Int g2 = gcd_entries(v2) / d;
  const Int g3 = gcd_entries(v3) / d;

  try {
    out.k = 1;
    for (const Int& p : prime_divisors(g1)) {
      if (divides(p, g3)) {
        out.p1.push_back(p);
      } else if (divides(p, g2)) {
        out.p2.push_back(p);
      } else {
        out.p3.push_back(p);
        out.k *= p;
      }
    }
  } catch (const FactorCapError&) {
    out.p1.clear();
    out.p2.clear();
    out.p3.clear();
    out.by_enumeration = true;
    bool found = false;
    for (long m = 0; m <= kChooseKSearchBound && !found; ++m) {
      for (long k : {m, -m}) {
        if (gcd_pair(v1, v3 + Int(k) * v2) == d) {
          out.k = k;
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw PreconditionError("choose_k: factorization refused and no k with |k| <= " +
                              std::to_string(kChooseKSearchBound) + " found");
  }
  if (gcd_pair(v1, v3 + out.k * v2) != d)
    throw InternalError("choose_k: constructed k does not preserve the gcd");
  return out;
}

Int choose_k(const ColVec& v1, const ColVec& v2, const ColVec& v3) {
  return choose_k_traced(v1, v2, v3).k;
}

Reduction to_type_hn(const Mat& h0) {
  const TypeTag tag = classify(h0);
  if (tag != TypeTag::H0 && tag != TypeTag::HN)
    throw PreconditionError("to_type_hn: input is of type " + std::string(to_string(tag)) +
                            ", expected H0");
  if (gcd_entries(h0) != 1) throw PreconditionError("to_type_hn: entry gcd must be 1");
  const std::size_t n = h0.rows();
  if (tag == TypeTag::HN) return {h0, UnimodChain(n)};

  const ColVec v1 = h0.column(0);
  Mat t = Mat::identity(n);
  if (v1.is_zero()) {
    // Smith form of the trailing columns has a leading 1; rotating the
    // transformed columns puts that unit vector (pulled back) in the last column.
    Mat tail(n, n - 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 1; c < n; ++c) tail(r, c - 1) = h0(r, c);
    SmithDecomp snf = smith_normal_form(tail);
    Mat rotate(n - 1, n - 1);
    rotate(0, n - 2) = 1;
    for (std::size_t i = 1; i < n - 1; ++i) rotate(i, i - 1) = 1;
    Mat cd = snf.v * rotate;
    for (std::size_t r = 0; r < n - 1; ++r)
      for (std::size_t c = 0; c < n - 1; ++c) t(r + 1, c + 1) = cd(r, c);
  } else {
    if (sgn(v1[1]) == 0) throw InternalError("to_type_hn: nonzero first column off row 2");
    // k_3..k_n chain the columns so that gcd(v1, last) = gcd of all columns.
    std::vector<Int> ks(n, Int(0));
    ColVec running = h0.column(1);
    for (std::size_t j = 2; j < n; ++j) {
      const ColVec vj = h0.column(j);
      ks[j] = choose_k(v1, running, vj);
      running = vj + ks[j] * running;
    }
    for (std::size_t i = 1; i < n; ++i) {
      Int prod = 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        prod *= ks[j];
        t(i, j) = prod;
      }
    }
  }
  Reduction out{Mat(), UnimodChain::from_right_conjugator(t)};
  out.reduced = out.chain.apply(h0);
  if (classify(out.reduced) != TypeTag::HN) throw InternalError("to_type_hn: result is not of type HN");
  return out;
}

}  // namespace torusrank
