#include "torusrank/oracle.hpp"

#include "torusrank/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace torusrank {

OrbitSet::OrbitSet(std::vector<ColVec> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw PreconditionError("OrbitSet: must be nonempty");
  const std::size_t n = vectors_.front().size();
  if (n == 0) throw PreconditionError("OrbitSet: vectors must have positive dimension");
  std::set<ColVec> seen;
  for (const ColVec& v : vectors_) {
    if (v.size() != n) throw DimensionError("OrbitSet: vectors of unequal dimension");
    if (!seen.insert(v).second) throw PreconditionError("OrbitSet: duplicate vector " + to_string(v));
  }
}

OrbitSet OrbitSet::with(const ColVec& w) const {
  if (std::find(vectors_.begin(), vectors_.end(), w) != vectors_.end()) return *this;
  std::vector<ColVec> v = vectors_;
  v.push_back(w);
  return OrbitSet(std::move(v));
}

Mat orbit_matrix(const Mat& a, const OrbitSet& s, std::size_t powers) {
  if (!a.is_square()) throw DimensionError("orbit_matrix: matrix is not square");
  if (s.dim() != a.rows()) throw DimensionError("orbit_matrix: vector dimension mismatch");
  std::vector<ColVec> cols;
  cols.reserve(s.size() * powers);
  for (const ColVec& v : s) {
    ColVec w = v;
    for (std::size_t k = 0; k < powers; ++k) {
      if (k > 0) w = a * w;
      cols.push_back(w);
    }
  }
  return Mat::from_columns(cols);
}

HermiteForm orbit_subgroup_basis(const Mat& a, const OrbitSet& s) {
  return hermite_normal_form(orbit_matrix(a, s, a.rows()));
}

bool is_generating(const Mat& a, const OrbitSet& s) {
  const HermiteForm hf = orbit_subgroup_basis(a, s);
  if (hf.rank() != a.rows()) return false;
  for (std::size_t c = 0; c < hf.rank(); ++c)
    if (hf.h(hf.pivot_rows[c], c) != 1) return false;
  return true;
}

namespace {

using Residues = std::vector<std::int64_t>;

std::int64_t mod_of(const Int& x, long p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Row-echelon span over F_p, grown one vector at a time.
class ModSpan {
 public:
  ModSpan(std::size_t dim, long p) : dim_(dim), p_(p) {}

  std::size_t rank() const { return basis_.size(); }

  // Returns true if v was independent of the current span.
  bool insert(Residues v) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::int64_t c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] = ((v[j] - c * basis_[i][j]) % p_ + p_) % p_;
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const std::int64_t inv = inverse_mod(v[piv], p_);
    for (auto& x : v) x = x * inv % p_;
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  std::size_t dim_;
  std::int64_t p_;
  std::vector<Residues> basis_;
  std::vector<std::size_t> pivots_;
};

struct PrimeFilter {
  long p;
  std::size_t mu;                       // min poly degree of A mod p
  std::vector<std::vector<Residues>> krylov;  // per candidate: v, Av, ..., A^{n-1}v mod p
};

std::vector<long> filter_primes(const Mat& a) {
  std::set<long> primes = {2, 3, 5, 7};
  // Primes dividing every entry of A - a(1,1)I are where the orbit span
  // collapses fastest; adding them only speeds the search up.
  const Int g = gcd_entries(shift_diagonal(a, -a(0, 0)));
  if (g > 1) {
    try {
      for (const Int& p : prime_divisors(g))
        if (p < Int(1L << 31)) primes.insert(p.get_si());
    } catch (const FactorCapError&) {
    }
  }
  return {primes.begin(), primes.end()};
}

class Search {
 public:
  Search(const Mat& a, std::vector<ColVec> candidates, std::vector<PrimeFilter> filters)
      : a_(a), n_(a.rows()), candidates_(std::move(candidates)), filters_(std::move(filters)) {}

  std::optional<OrbitSet> run(std::size_t size) {
    std::vector<ModSpan> spans;
    for (const auto& f : filters_) spans.emplace_back(n_, f.p);
    chosen_.clear();
    return descend(size, 0, spans);
  }

 private:
  std::optional<OrbitSet> descend(std::size_t size, std::size_t start,
                                  const std::vector<ModSpan>& spans) {
    const std::size_t remaining = size - chosen_.size();
    for (std::size_t f = 0; f < filters_.size(); ++f)
      if (spans[f].rank() + remaining * filters_[f].mu < n_) return std::nullopt;
    if (remaining == 0) {
      OrbitSet s(chosen_);
      if (is_generating(a_, s)) return s;
      return std::nullopt;
    }
    for (std::size_t i = start; i + remaining <= candidates_.size(); ++i) {
      std::vector<ModSpan> next = spans;
      for (std::size_t f = 0; f < filters_.size(); ++f)
        for (const Residues& r : filters_[f].krylov[i]) {
          if (next[f].rank() == n_) break;
          next[f].insert(r);
        }
      chosen_.push_back(candidates_[i]);
      if (auto found = descend(size, i + 1, next)) return found;
      chosen_.pop_back();
    }
    return std::nullopt;
  }

  const Mat& a_;
  std::size_t n_;
  std::vector<ColVec> candidates_;
  std::vector<PrimeFilter> filters_;
  std::vector<ColVec> chosen_;
};

}  // namespace

std::vector<ColVec> candidate_vectors(std::size_t n, long bound) {
  if (n == 0 || bound < 1) throw PreconditionError("candidate_vectors: empty search box");
  struct Keyed {
    long norm;
    std::size_t support;
    std::size_t lead;
    ColVec v;
  };
  std::vector<Keyed> keyed;
  std::vector<long> cur(n, -bound);
  for (;;) {
    std::size_t lead = 0;
    while (lead < n && cur[lead] == 0) ++lead;
    if (lead < n && cur[lead] > 0) {
      Keyed k{0, 0, lead, ColVec(n)};
      for (std::size_t i = 0; i < n; ++i) {
        k.v[i] = cur[i];
        k.norm = std::max(k.norm, cur[i] < 0 ? -cur[i] : cur[i]);
        k.support += cur[i] != 0;
      }
      keyed.push_back(std::move(k));
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound) cur[--i] = -bound;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    if (x.support != y.support) return x.support < y.support;
    return x.lead < y.lead;
  });
  std::vector<ColVec> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.v));
  return out;
}

std::size_t min_poly_degree_mod(const Mat& a, long p) {
  if (!a.is_square()) throw DimensionError("min_poly_degree_mod: matrix is not square");
  const std::size_t n = a.rows();
  ModSpan span(n * n, p);
  Mat power = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Residues flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = mod_of(power(i, j), p);
        power(i, j) = flat[i * n + j];  // keep entries small
      }
    if (!span.insert(std::move(flat))) return k;
    power = power * a;
  }
  return n;  // unreachable by Cayley-Hamilton
}

std::optional<BruteFind> brute_min_upper(const Mat& a, long entry_bound, std::size_t max_size,
                                         BruteOptions options) {
  if (!a.is_square()) throw DimensionError("brute_min_upper: matrix is not square");
  if (entry_bound < 1 || max_size < 1)
    throw PreconditionError("brute_min_upper: bounds must be positive");
  const std::size_t n = a.rows();
  std::vector<ColVec> candidates = candidate_vectors(n, entry_bound);

  std::vector<PrimeFilter> filters;
  if (options.prune) {
    for (long p : filter_primes(a)) {
      PrimeFilter f{p, min_poly_degree_mod(a, p), {}};
      f.krylov.reserve(candidates.size());
      for (const ColVec& v : candidates) {
        std::vector<Residues> orbit;
        ColVec w = v;
        for (std::size_t k = 0; k < n; ++k) {
          if (k > 0) w = a * w;
          Residues r(n);
          for (std::size_t i = 0; i < n; ++i) r[i] = mod_of(w[i], p);
          orbit.push_back(std::move(r));
        }
        f.krylov.push_back(std::move(orbit));
      }
      filters.push_back(std::move(f));
    }
  }

  Search search(a, std::move(candidates), std::move(filters));
  for (std::size_t size = 1; size <= max_size; ++size)
    if (auto found = search.run(size)) return BruteFind{size, std::move(*found)};
  return std::nullopt;
}

}  // namespace torusrank
