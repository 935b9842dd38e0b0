#include "torusrank/decide.hpp"

#include "torusrank/oracle.hpp"

#include <cstdint>
#include <cstdio>

namespace torusrank {

std::string_view to_string(Verdict v) {
  return v == Verdict::FullRank ? "FULL_RANK" : "NOT_FULL_RANK";
}

std::string Decision::rank_statement() const {
  const std::string lhs = "rank(Z^" + std::to_string(n) + "⋊Z)";
  if (verdict == Verdict::FullRank) return lhs + " = " + std::to_string(n + 1);
  return lhs + " ≤ " + std::to_string(n);
}

Int criterion_gcd(const Mat& a) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("criterion_gcd: matrix is not square");
  return gcd_entries(shift_diagonal(a, -a(0, 0)));
}

bool check_mod_d_obstruction(const Mat& a, const Int& d) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("check_mod_d_obstruction: not square");
  const Mat diff = shift_diagonal(a, -a(0, 0));
  for (std::size_t i = 0; i < diff.rows(); ++i)
    for (std::size_t j = 0; j < diff.cols(); ++j) {
      if (sgn(d) == 0) {
        if (sgn(diff(i, j)) != 0) return false;
      } else if (!mpz_divisible_p(diff(i, j).get_mpz_t(), d.get_mpz_t())) {
        return false;
      }
    }
  return true;
}

std::string witness_hash(const Mat& a, const OrbitSet& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& text) {
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  feed(to_string(a));
  for (const ColVec& v : s) feed(";" + to_string(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Decision decide_full_rank(const Mat& a, DecideOptions options) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("decide_full_rank: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 2)
    throw PreconditionError("decide_full_rank: the gcd criterion requires n >= 3 (n = 2 is not decided)");
  if (!is_unimodular(a)) throw PreconditionError("decide_full_rank: matrix is not unimodular");

  const Int d = criterion_gcd(a);
  if (d != 1) {
    if (!check_mod_d_obstruction(a, d)) throw InternalError("decide_full_rank: mod-d congruence fails");
    return Decision{Verdict::FullRank, d, n, ModDObstruction{d}, {}};
  }
  PipelineWitness w = full_pipeline_witness(a, options.verify);
  std::string hash = witness_hash(a, w.set);
  return Decision{Verdict::NotFullRank, d, n, std::move(w), std::move(hash)};
}

std::optional<ColVec> cyclic_search(const Mat& a, long bound) {
  if (!a.is_square() || a.rows() == 0) throw DimensionError("cyclic_search: matrix is not square");
  if (!is_unimodular(a)) throw PreconditionError("cyclic_search: matrix is not unimodular");
  const std::size_t n = a.rows();
  for (const ColVec& v : candidate_vectors(n, bound)) {
    std::vector<ColVec> krylov = {v};
    for (std::size_t k = 1; k < n; ++k) krylov.push_back(a * krylov.back());
    if (abs(det(Mat::from_columns(krylov))) == 1) return v;
  }
  return std::nullopt;
}

}  // namespace torusrank
