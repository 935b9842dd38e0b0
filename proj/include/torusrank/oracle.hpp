#pragma once

// Independent verification: orbit subgroups as lattices, generation checks
// and a bounded exhaustive search for small generating orbit sets.

#include "torusrank/exactmat.hpp"
#include "torusrank/normal_form.hpp"

#include <optional>
#include <vector>

namespace torusrank {

// A finite, nonempty, duplicate-free list of vectors of one dimension.
class OrbitSet {
 public:
  explicit OrbitSet(std::vector<ColVec> vectors);

  std::size_t size() const { return vectors_.size(); }
  std::size_t dim() const { return vectors_.front().size(); }
  const std::vector<ColVec>& vectors() const { return vectors_; }
  const ColVec& operator[](std::size_t i) const { return vectors_[i]; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  // Copy with w appended (w may already be present).
  OrbitSet with(const ColVec& w) const;

 private:
  std::vector<ColVec> vectors_;
};

// Columns A^k v for k = 0 .. powers-1 and v in s, grouped by v.
Mat orbit_matrix(const Mat& a, const OrbitSet& s, std::size_t powers);

// Hermite form of the orbit matrix with n powers per vector. Because the
// characteristic polynomial is monic with integer coefficients, its column
// lattice is the whole orbit subgroup.
HermiteForm orbit_subgroup_basis(const Mat& a, const OrbitSet& s);

bool is_generating(const Mat& a, const OrbitSet& s);

struct BruteOptions {
  // Skip subtrees that cannot span F_p^n for a small prime p. The bound uses
  // the degree of the minimal polynomial of A mod p and is a necessary
  // condition, so it never hides a generating set.
  bool prune = true;
};

struct BruteFind {
  std::size_t size;
  OrbitSet set;
};

// Smallest generating set (size <= max_size, entries in [-bound, bound]).
// Vectors are taken up to sign. Absence only means nothing was found within
// the bounds; it is not a statement about the true minimum.
std::optional<BruteFind> brute_min_upper(const Mat& a, long entry_bound, std::size_t max_size,
                                         BruteOptions options = {});

// Nonzero vectors with entries in [-bound, bound], first nonzero entry
// positive. Ordered by sup norm, then support size, then position of the
// leading entry, then lexicographically; e_1 always comes first.
std::vector<ColVec> candidate_vectors(std::size_t n, long bound);

// Degree of the minimal polynomial of a mod p (p prime, p < 2^31).
std::size_t min_poly_degree_mod(const Mat& a, long p);

}  // namespace torusrank
