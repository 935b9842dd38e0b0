#include "torusrank/witness.hpp"

#include "torusrank/factor.hpp"
#include "torusrank/normal_form.hpp"

namespace torusrank {

std::string_view to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::I: return "I";
    case WitnessCase::II: return "II";
    case WitnessCase::IIIc1Zero: return "III-c1zero";
    case WitnessCase::IIICase1: return "III-case1";
    case WitnessCase::IIICase2: return "III-case2";
  }
  return "?";
}

Int WitnessTrace::minors_gcd() const {
  Int g = 0;
  for (const auto& m : minors) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.value.get_mpz_t());
  return g;
}

namespace {

// Entry accessors in 1-based notation to keep the case analysis readable.
struct HnView {
  const Mat& a;
  std::size_t n;
  const Int& at(std::size_t i, std::size_t j) const { return a(i - 1, j - 1); }
  const Int& a21() const { return at(2, 1); }
  const Int& a1n() const { return at(1, n); }
  const Int& a2n() const { return at(2, n); }
  const Int& ann() const { return at(n, n); }
  // a(j, n) for j = 2 .. n-1 all zero
  bool middle_of_last_column_zero() const {
    for (std::size_t j = 2; j < n; ++j)
      if (sgn(at(j, n)) != 0) return false;
    return true;
  }
};

Int gcd_of(std::initializer_list<Int> values) {
  Int g = 0;
  for (const Int& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

bool divides(const Int& p, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

// s0 with a_nn*s0 - a_1n = +-1, when it exists.
std::optional<Int> case_one_s(const HnView& v) {
  if (sgn(v.ann()) == 0) {
    if (abs(v.a1n()) == 1) return Int(0);
    return std::nullopt;
  }
  for (long eps : {1L, -1L}) {
    Int num = v.a1n() + eps;
    if (divides(v.ann(), num)) return Int(num / v.ann());
  }
  return std::nullopt;
}

void record_k_primes(WitnessTrace& trace, const KChoice& kc) {
  trace.prime_sets.push_back({"P1", kc.p1});
  trace.prime_sets.push_back({"P2", kc.p2});
  trace.prime_sets.push_back({"P3", kc.p3});
}

}  // namespace

std::vector<NamedValue> witness_minors(const Mat& a, const Int& s, const Int& t) {
  const HnView v{a, a.rows()};
  std::vector<NamedValue> minors;
  minors.push_back({"f1", v.a21() * s * s + v.a2n() * s * t});
  minors.push_back({"f1'", -(v.a21() * s * t + v.a2n() * t * t)});
  minors.push_back({"f2", v.ann() * s * t - v.a1n() * t * t});
  for (std::size_t j = 3; j < v.n; ++j) {
    const std::string idx = std::to_string(j);
    minors.push_back({"f" + idx, v.at(j, v.n) * s * t});
    minors.push_back({"f" + idx + "'", -v.at(j, v.n) * t * t});
  }
  return minors;
}

WitnessTrace select_st(const Mat& a) {
  if (classify(a) != TypeTag::HN) throw PreconditionError("select_st: matrix is not of type HN");
  const std::size_t n = a.rows();
  const HnView v{a, n};
  WitnessTrace trace;

  if (sgn(v.a21()) == 0 && v.middle_of_last_column_zero()) {
    auto s0 = case_one_s(v);
    if (!s0)
      throw PreconditionError(
          "select_st: outside the witness hypotheses (a21 = a2n = ... = a(n-1)n = 0 but "
          "a1n is not +-1 modulo ann)");
    trace.case_label = WitnessCase::I;
    trace.s = *s0;
    trace.t = 1;
  } else if (sgn(v.a21()) == 0) {
    Int d = 0;
    for (std::size_t j = 2; j < n; ++j) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), v.at(j, n).get_mpz_t());
    const KChoice kc = choose_k_traced(ColVec(std::vector<Int>{d}), ColVec(std::vector<Int>{v.ann()}),
                                       ColVec(std::vector<Int>{Int(-v.a1n())}));
    trace.case_label = WitnessCase::II;
    trace.s = kc.k;
    trace.t = 1;
    trace.c_values.push_back({"d", d});
    record_k_primes(trace, kc);
  } else if (sgn(v.a1n()) == 0 && sgn(v.a2n()) == 0) {
    trace.case_label = WitnessCase::IIIc1Zero;
    trace.s = 1;
    trace.t = 1;
  } else {
    const Bezout kl = extended_gcd(v.a1n(), v.a2n());
    const Int& c1 = kl.g;
    const Int& k = kl.s;
    const Int& l = kl.t;
    const Int c2 = l * v.a21() - k * v.ann();
    const Int num = v.a1n() * v.a21() + v.a2n() * v.ann();
    if (!divides(c1, num)) throw InternalError("select_st: c1 does not divide a1n*a21 + a2n*ann");
    const Int c3 = num / c1;
    Int c4 = 0;
    for (std::size_t j = 3; j < n; ++j) mpz_gcd(c4.get_mpz_t(), c4.get_mpz_t(), v.at(j, n).get_mpz_t());
    trace.c_values = {{"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"k", k}, {"l", l}};

    if (sgn(c3) == 0 && sgn(c4) == 0) {
      const Bezout st0 = extended_gcd(c1, c2);
      if (st0.g != 1) throw InternalError("select_st: gcd(c1, c2) != 1 with c3 = c4 = 0");
      const Int& t0 = st0.s;
      const Int& s0 = st0.t;
      const KChoice kc = choose_k_traced(ColVec(std::vector<Int>{v.a21()}), ColVec(std::vector<Int>{c2}),
                                         ColVec(std::vector<Int>{t0}));
      trace.case_label = WitnessCase::IIICase1;
      trace.s = s0 - kc.k * c1;
      trace.t = t0 + kc.k * c2;
      trace.c_values.push_back({"s0", s0});
      trace.c_values.push_back({"t0", t0});
      trace.c_values.push_back({"k'", kc.k});
      record_k_primes(trace, kc);
    } else {
      NamedPrimes p1{"P1", {}}, p2{"P2", {}}, p3{"P3", {}};
      Int s = 1, t = 1;
      for (const Int& p : prime_divisors(gcd_of({c3, c4}))) {
        if (!divides(p, c1)) {
          p1.primes.push_back(p);
          s *= p;
        } else if (!divides(p, v.a21())) {
          p2.primes.push_back(p);
          t *= p;
        } else {
          p3.primes.push_back(p);
        }
      }
      trace.case_label = WitnessCase::IIICase2;
      trace.s = s;
      trace.t = t;
      trace.prime_sets = {p1, p2, p3};
    }
  }

  trace.minors = witness_minors(a, trace.s, trace.t);
  if (trace.minors_gcd() != 1)
    throw InternalError("select_st: case " + std::string(to_string(trace.case_label)) +
                        " produced minors with gcd " + trace.minors_gcd().get_str());
  return trace;
}

OrbitWitness build_orbit_witness(const Mat& a, bool verify) {
  WitnessTrace trace = select_st(a);
  const std::size_t n = a.rows();
  ColVec v(n);
  v[0] = trace.s;
  v[n - 1] = trace.t;
  const ColVec av = a * v;
  const std::vector<ColVec> pair = {v, av};
  Mat basis;
  try {
    basis = extend_to_basis(Mat::from_columns(pair));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("build_orbit_witness: [v, Av] not extendable: ") + e.what());
  }
  std::vector<ColVec> vectors = {v};
  for (std::size_t c = 2; c < n; ++c) vectors.push_back(basis.column(c));
  OrbitWitness out{OrbitSet(std::move(vectors)), std::move(trace)};
  if (verify && !is_generating(a, out.set))
    throw InternalError("build_orbit_witness: witness failed the generation check");
  return out;
}

PipelineWitness full_pipeline_witness(const Mat& a, bool verify) {
  if (!a.is_square()) throw DimensionError("full_pipeline_witness: matrix is not square");
  const std::size_t n = a.rows();
  if (n < 3) throw PreconditionError("full_pipeline_witness: requires n >= 3");
  if (!is_unimodular(a)) throw PreconditionError("full_pipeline_witness: matrix is not in GL_n(Z)");
  const Int shift = a(0, 0);
  const Int d = gcd_entries(shift_diagonal(a, -shift));
  if (d != 1)
    throw PreconditionError("full_pipeline_witness: gcd(A - a11*I) = " + d.get_str() + ", expected 1");

  Reduction to_h = to_type_h(a);
  if (to_h.reduced(0, 0) != shift) throw InternalError("full_pipeline_witness: (1,1) entry moved");
  const Mat h0 = shift_diagonal(to_h.reduced, -shift);
  if (gcd_entries(h0) != 1) throw InternalError("full_pipeline_witness: shift lost gcd 1");
  Reduction to_hn = to_type_hn(h0);
  const Mat& hn = to_hn.reduced;

  // Degenerate branch: only case I can apply, and unimodularity guarantees it does.
  const HnView view{hn, n};
  if (sgn(view.a21()) == 0 && view.middle_of_last_column_zero() && !case_one_s(view))
    throw InternalError("full_pipeline_witness: degenerate HN matrix violates a1n = +-1 mod ann");

  OrbitWitness w = build_orbit_witness(hn, verify);
  UnimodChain chain = to_h.chain;
  chain.append(to_hn.chain);

  std::vector<ColVec> pulled;
  pulled.reserve(w.set.size());
  for (const ColVec& x : w.set) pulled.push_back(chain.pull_back(x));
  PipelineWitness out{OrbitSet(std::move(pulled)), std::move(w.trace), std::move(chain), hn, shift, false};
  if (verify) {
    if (!is_generating(a, out.set))
      throw InternalError("full_pipeline_witness: pulled-back witness failed the generation check");
    out.verified = true;
  }
  return out;
}

}  // namespace torusrank
