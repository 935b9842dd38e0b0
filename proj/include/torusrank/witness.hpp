#pragma once

// Constructive generating orbit sets of size n-1.
//
// For a type-HN matrix A the vector v = (s, 0, ..., 0, t) is chosen so that
// the 2x2 minors of Y = [v, Av] are coprime. Then {v, Av} extends to a basis
// {v, Av, u_3, ..., u_n} of Z^n and {v, u_3, ..., u_n} generates under A.

#include "torusrank/exactmat.hpp"
#include "torusrank/oracle.hpp"
#include "torusrank/reduce.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torusrank {

enum class WitnessCase { I, II, IIIc1Zero, IIICase1, IIICase2 };

std::string_view to_string(WitnessCase c);

struct NamedValue {
  std::string name;
  Int value;
};

struct NamedPrimes {
  std::string name;
  std::vector<Int> primes;
};

struct WitnessTrace {
  WitnessCase case_label = WitnessCase::I;
  Int s;
  Int t;
  // f1, f1', f2, then f_j, f'_j for j = 3 .. n-1: every 2x2 minor of Y that
  // is not identically zero.
  std::vector<NamedValue> minors;
  // c1..c4 (and the Bezout pair k, l) in case III with c1 != 0.
  std::vector<NamedValue> c_values;
  std::vector<NamedPrimes> prime_sets;

  Int minors_gcd() const;
};

// The 2x2 minors of [v, Av] for v = (s, 0, ..., 0, t) and A of type HN.
std::vector<NamedValue> witness_minors(const Mat& a, const Int& s, const Int& t);

// Pick (s, t) for a type-HN matrix. Checks the cases in order I, II, III and
// rejects matrices that satisfy none of them.
WitnessTrace select_st(const Mat& a);

struct OrbitWitness {
  OrbitSet set;
  WitnessTrace trace;
};

// {v, u_3, ..., u_n}; re-verified with is_generating unless verify is false.
OrbitWitness build_orbit_witness(const Mat& a, bool verify = true);

struct PipelineWitness {
  OrbitSet set;          // generating orbit set of the input, size n-1
  WitnessTrace trace;    // selection made on the type-HN matrix
  UnimodChain chain;     // hn + a11*I = chain.p * input * chain.p_inv
  Mat hn;                // the shifted type-HN matrix the witness was built on
  Int shift;             // a(1,1)
  bool verified = false; // is_generating replay against the input
};

// Witness for A in GL_n(Z), n >= 3, with gcd(A - a11*I) = 1.
PipelineWitness full_pipeline_witness(const Mat& a, bool verify = true);

}  // namespace torusrank
