#pragma once

// Seeded random elements of GL_n(Z), built as products of elementary matrices
// (row addition with coefficient in [-3, 3], row swap, row negation).
// Output depends only on the seed: draws use std::mt19937_64, whose sequence
// is fixed by the standard, reduced by plain modulo.

#include "torusrank/exactmat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace torusrank {

class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  long in_range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

Mat random_unimodular(std::size_t n, std::size_t ops, CorpusRng& rng);

std::vector<Mat> random_corpus(std::size_t n, std::size_t ops, std::uint64_t seed, std::size_t count);

// Random integer matrix with entries in [lo, hi] (not necessarily invertible).
Mat random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi, CorpusRng& rng);

}  // namespace torusrank
