#include "torusrank/factor.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace torusrank {

namespace {

constexpr unsigned kDefaultCapBits = 128;
constexpr unsigned long kTrialLimit = 10000;

// Miller-Rabin with the first 13 prime bases is exact below 3.3e24.
constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Int& n) {
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  const Int n_minus_1 = n - 1;
  Int x;
  for (unsigned long a : kWitnesses) {
    if (n == a) return true;
    Int base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int f = pollard_brent(n);
  split(f, out);
  split(n / f, out);
}

}  // namespace

unsigned factor_cap_bits() {
  const char* env = std::getenv("TORUSRANK_FACTOR_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCapBits;
  unsigned bits = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, bits);
  if (ec != std::errc() || ptr != end || bits == 0) return kDefaultCapBits;
  return bits;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
  static const Int exact_limit("3317044064679887385961981");
  if (n < exact_limit) return miller_rabin(n);
  // Beyond the deterministic range GMP's BPSW + Miller-Rabin test is used.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Int> factorize(const Int& n) {
  if (n < 1) throw PreconditionError("factorize: input must be positive");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > factor_cap_bits())
    throw FactorCapError("factorize: " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                         "-bit input exceeds the " + std::to_string(factor_cap_bits()) +
                         "-bit factorization cap");
  std::vector<Int> out;
  Int rest = n;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.emplace_back(p);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest > 1) split(rest, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  if (n == 0) throw PreconditionError("prime_divisors: every prime divides 0");
  std::vector<Int> primes = factorize(abs(n));
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace torusrank
