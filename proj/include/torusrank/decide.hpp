#pragma once

// Full-rank decision for Z^n x|_A Z.
//
// With d = gcd(A - a11*I) and n >= 3, the mapping torus has rank n+1 exactly
// when d != 1. A FULL_RANK answer carries the congruence A = a11*I (mod d);
// a NOT_FULL_RANK answer carries a verified generating orbit set of size n-1.

#include "torusrank/exactmat.hpp"
#include "torusrank/witness.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace torusrank {

enum class Verdict { FullRank, NotFullRank };

// "FULL_RANK" / "NOT_FULL_RANK"; these strings are part of the output format.
std::string_view to_string(Verdict v);

struct ModDObstruction {
  Int d;  // d = 0 means A = a11*I outright
};

struct Decision {
  Verdict verdict;
  Int d;
  std::size_t n;
  std::variant<ModDObstruction, PipelineWitness> certificate;
  std::string verification_hash;  // empty for FULL_RANK

  std::string rank_statement() const;
  const PipelineWitness* witness() const { return std::get_if<PipelineWitness>(&certificate); }
};

struct DecideOptions {
  // Replay is_generating on the emitted witness. Turning this off is only
  // meant for timing runs; the result is marked unverified.
  bool verify = true;
};

// Requires a square unimodular matrix with n = 1 or n >= 3.
Decision decide_full_rank(const Mat& a, DecideOptions options = {});

// gcd(A - a11*I).
Int criterion_gcd(const Mat& a);

// Entrywise A = a11*I (mod d); for d = 0, exact equality.
bool check_mod_d_obstruction(const Mat& a, const Int& d);

// FNV-1a digest (16 hex digits) binding a witness to its matrix.
std::string witness_hash(const Mat& a, const OrbitSet& s);

// Some v in [-bound, bound]^n with |det [v, Av, ..., A^{n-1}v]| = 1, which
// makes {v} a generating orbit set. Absence proves nothing.
std::optional<ColVec> cyclic_search(const Mat& a, long bound);

}  // namespace torusrank
