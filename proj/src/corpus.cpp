#include "torusrank/corpus.hpp"

namespace torusrank {

Mat random_unimodular(std::size_t n, std::size_t ops, CorpusRng& rng) {
  Mat m = Mat::identity(n);
  for (std::size_t step = 0; step < ops; ++step) {
    const std::uint64_t kind = n == 1 ? 2 : rng.below(3);
    if (kind == 0) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      const Int c = rng.in_range(-3, 3);
      m.combine_rows(i, j, 1, c, 0, 1);  // row_i += c * row_j
    } else if (kind == 1) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      m.swap_rows(i, j);
    } else {
      const std::size_t i = rng.below(n);
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
    }
  }
  return m;
}

std::vector<Mat> random_corpus(std::size_t n, std::size_t ops, std::uint64_t seed, std::size_t count) {
  CorpusRng rng(seed);
  std::vector<Mat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_unimodular(n, ops, rng));
  return out;
}

Mat random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi, CorpusRng& rng) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.in_range(lo, hi);
  return m;
}

}  // namespace torusrank
