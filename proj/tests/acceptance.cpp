// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Every count, bound and time limit is
// fixed below.

#include "oracles.hpp"
#include "torusrank/certificate.hpp"
#include "torusrank/corpus.hpp"
#include "torusrank/decide.hpp"
#include "torusrank/matrix_io.hpp"
#include "torusrank/normal_form.hpp"
#include "torusrank/oracle.hpp"
#include "torusrank/reduce.hpp"
#include "torusrank/witness.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace torusrank;
using namespace torusrank::testing;
using nlohmann::json;

namespace {

// Criterion 1 and 2 corpus.
constexpr std::size_t kGL3Count = 1000;
constexpr std::size_t kGL4Count = 300;
constexpr std::size_t kMaxOps = 20;
constexpr double kSweepSecondsLimit = 60.0;
// Criterion 2 search.
constexpr long kObstructionBound = 3;
// Criterion 3.
constexpr std::size_t kSmallSampleCount = 200;
constexpr long kSmallEntryBound = 2;
constexpr long kCrossCheckBound = 4;
constexpr std::size_t kCrossCheckMaxSize = 2;
// Criterion 4 and 5.
constexpr std::size_t kConjugationPairs = 100;
constexpr std::size_t kShiftSamples = 100;
constexpr long kShiftRange = 5;
// Criterion 6.
constexpr std::size_t kReductionCount = 500;
// Criterion 7.
constexpr std::size_t kChooseKTriples = 1000;
constexpr long kChooseKEntryBound = 50;
constexpr long kChooseKEnumBound = 10000;
// Criterion 8.
constexpr std::size_t kKernelCount = 300;
constexpr std::size_t kKernelMaxDim = 6;
// Criterion 9.
constexpr std::size_t kCertificatesPerDim = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Sample {
  Mat a;
  std::size_t ops;
  std::uint64_t seed;
};

// Seeded corpus built with the same generator as `torusrank random`.
std::vector<Sample> sweep_corpus(std::size_t n, std::size_t count, std::uint64_t seed_base) {
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t ops = i % (kMaxOps + 1);
    const std::uint64_t seed = seed_base + i;
    out.push_back({random_corpus(n, ops, seed, 1).front(), ops, seed});
  }
  return out;
}

std::vector<Sample> full_corpus() {
  auto c3 = sweep_corpus(3, kGL3Count, 1000);
  auto c4 = sweep_corpus(4, kGL4Count, 5000);
  c3.insert(c3.end(), c4.begin(), c4.end());
  return c3;
}

Outcome criterion1(const std::vector<Sample>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t tested = 0, failed = 0;
  std::string first_failure;
  for (const Sample& s : corpus) {
    if (gcd_of_all_entries(shift_diagonal(s.a, -s.a(0, 0))) != 1) continue;
    ++tested;
    bool ok = false;
    try {
      const PipelineWitness w = full_pipeline_witness(s.a);
      ok = w.set.size() == s.a.rows() - 1 && is_generating(s.a, w.set);
    } catch (const std::exception& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
    if (!ok) {
      ++failed;
      if (first_failure.empty()) first_failure = "seed " + std::to_string(s.seed) + ": " + to_string(s.a);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << tested << " inputs with d = 1, " << failed << " failures, " << secs << " s (limit " << kSweepSecondsLimit
    << " s)";
  if (!first_failure.empty()) d << "; first failure: " << first_failure;
  return {failed == 0 && tested > 0 && secs < kSweepSecondsLimit, d.str()};
}

Outcome criterion2(const std::vector<Sample>& corpus) {
  std::size_t tested = 0, congruence_fail = 0, search_hits = 0;
  for (const Sample& s : corpus) {
    const Mat diff = shift_diagonal(s.a, -s.a(0, 0));
    const Int d = gcd_of_all_entries(diff);
    if (d == 1) continue;
    ++tested;
    bool congruent = true;
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j) {
        const bool ok = sgn(d) == 0 ? sgn(diff(i, j)) == 0
                                    : mpz_divisible_p(diff(i, j).get_mpz_t(), d.get_mpz_t()) != 0;
        congruent = congruent && ok;
      }
    if (!congruent) ++congruence_fail;
    if (brute_min_upper(s.a, kObstructionBound, s.a.rows() - 1)) ++search_hits;
  }
  std::ostringstream d;
  d << tested << " inputs with d != 1, " << congruence_fail << " congruence failures, " << search_hits
    << " generating sets found (bound " << kObstructionBound << ", size <= n-1)";
  return {tested > 0 && congruence_fail == 0 && search_hits == 0, d.str()};
}

Outcome criterion3() {
  CorpusRng rng(3003);
  std::size_t sampled = 0, found_small = 0, obstructed = 0, contradictions = 0;
  std::string first;
  while (sampled < kSmallSampleCount) {
    const Mat a = random_integer_matrix(3, 3, -kSmallEntryBound, kSmallEntryBound, rng);
    if (abs(cofactor_det(a)) != 1) continue;
    ++sampled;
    const Int d = gcd_of_all_entries(shift_diagonal(a, -a(0, 0)));
    // The unpruned search shares nothing with the criterion beyond HNF.
    const auto found = brute_min_upper(a, kCrossCheckBound, kCrossCheckMaxSize, {.prune = false});
    if (found) ++found_small;
    if (d != 1) ++obstructed;
    // "found implies d = 1" and "d != 1 implies nothing found" are the same test.
    if (found && d != 1) {
      ++contradictions;
      if (first.empty()) first = to_string(a);
    }
  }
  std::ostringstream d;
  d << sampled << " GL3 samples, " << found_small << " with a set of size <= 2, " << obstructed
    << " with d != 1, " << contradictions << " contradictions";
  if (!first.empty()) d << "; first: " << first;
  return {contradictions == 0, d.str()};
}

Outcome criterion4() {
  CorpusRng rng(4004);
  std::size_t mismatches = 0, full = 0;
  for (std::size_t i = 0; i < kConjugationPairs; ++i) {
    const std::size_t n = 3 + rng.below(2);
    // Few operations keep a healthy share of FULL_RANK inputs.
    const Mat a = random_unimodular(n, rng.below(kMaxOps + 1), rng);
    const Mat x = random_unimodular(n, 1 + rng.below(kMaxOps), rng);
    const Mat b = x * a * unimodular_inverse(x);
    const Verdict va = decide_full_rank(a).verdict;
    const Verdict vb = decide_full_rank(b).verdict;
    if (va != vb) ++mismatches;
    if (va == Verdict::FullRank) ++full;
  }
  std::ostringstream d;
  d << kConjugationPairs << " pairs (" << full << " FULL_RANK), " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome criterion5() {
  CorpusRng rng(5005);
  std::size_t mismatches = 0, nontrivial = 0;
  for (std::size_t i = 0; i < kShiftSamples; ++i) {
    const std::size_t n = 3 + rng.below(3);
    Mat a = random_integer_matrix(n, n, -9, 9, rng);
    if (i % 2 == 0) {
      // a11*I + m*B has criterion gcd divisible by m
      const long m = rng.in_range(0, 6);
      const long c = rng.in_range(-4, 4);
      Mat b = random_integer_matrix(n, n, -3, 3, rng);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) b(r, k) = m * b(r, k) + (r == k ? c : 0);
      b(0, 0) = c;
      a = b;
    }
    const long lambda = rng.in_range(-kShiftRange, kShiftRange);
    const Int direct = gcd_entries(shift_diagonal(a, -a(0, 0)));
    const Mat shifted = shift_diagonal(a, lambda);
    const Int after = gcd_entries(shift_diagonal(shifted, -shifted(0, 0)));
    if (direct != after) ++mismatches;
    if (direct != 1) ++nontrivial;
  }
  std::ostringstream d;
  d << kShiftSamples << " samples (" << nontrivial << " with gcd != 1), " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome criterion6() {
  CorpusRng rng(6006);
  std::size_t h_fail = 0, hn_checked = 0, hn_fail = 0;
  std::string first;
  auto note = [&](const std::string& what, const Mat& a) {
    if (first.empty()) first = what + " on " + to_string(a);
  };
  for (std::size_t i = 0; i < kReductionCount; ++i) {
    const std::size_t n = 3 + rng.below(3);
    Mat a = random_integer_matrix(n, n, -6, 6, rng);
    if (i % 3 == 0) a(0, 0) = 0;  // make some inputs land directly in H0
    try {
      const Reduction r = to_type_h(a);
      bool ok = r.chain.p() * a * r.chain.p_inv() == r.reduced && r.reduced(0, 0) == a(0, 0) &&
                abs(cofactor_det(r.chain.p())) == 1 && r.chain.p() * r.chain.p_inv() == Mat::identity(n);
      for (std::size_t k = 2; k < n; ++k) ok = ok && sgn(r.reduced(k, 0)) == 0;
      if (!ok) {
        ++h_fail;
        note("to_type_h", a);
        continue;
      }
      // The H0 inputs: the reduced matrix itself when h11 = 0, and its shift otherwise.
      const Mat h0 = shift_diagonal(r.reduced, -r.reduced(0, 0));
      if (gcd_of_all_entries(h0) != 1) continue;
      ++hn_checked;
      const Reduction s = to_type_hn(h0);
      bool hn_ok = s.chain.p() * h0 * s.chain.p_inv() == s.reduced && abs(cofactor_det(s.chain.p())) == 1;
      for (std::size_t k = 2; k < n; ++k) hn_ok = hn_ok && sgn(s.reduced(k, 0)) == 0;
      hn_ok = hn_ok && sgn(s.reduced(0, 0)) == 0;
      Int g = s.reduced(1, 0);
      for (std::size_t k = 0; k < n; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.reduced(k, n - 1).get_mpz_t());
      hn_ok = hn_ok && g == 1;
      if (!hn_ok) {
        ++hn_fail;
        note("to_type_hn", h0);
      }
    } catch (const std::exception& e) {
      ++h_fail;
      note(std::string("exception ") + e.what(), a);
    }
  }
  std::ostringstream d;
  d << kReductionCount << " matrices, " << h_fail << " type-H failures, " << hn_checked << " H0 inputs with "
    << hn_fail << " type-HN failures";
  if (!first.empty()) d << "; first: " << first;
  return {h_fail == 0 && hn_fail == 0 && hn_checked > 0, d.str()};
}

Outcome criterion7() {
  CorpusRng rng(7007);
  std::size_t wrong = 0, enum_miss = 0;
  for (std::size_t i = 0; i < kChooseKTriples; ++i) {
    const std::size_t dim = 1 + rng.below(5);
    auto draw = [&] {
      ColVec v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = rng.in_range(-kChooseKEntryBound, kChooseKEntryBound);
      return v;
    };
    ColVec v1 = draw();
    while (v1.is_zero()) v1 = draw();
    const ColVec v2 = draw();
    const ColVec v3 = draw();
    const Int target = gcd_of_vectors({&v1, &v2, &v3});
    const Int k = choose_k(v1, v2, v3);
    ColVec w(dim);
    for (std::size_t j = 0; j < dim; ++j) w[j] = v3[j] + k * v2[j];
    if (gcd_of_vectors({&v1, &w}) != target) ++wrong;
    if (!enumerate_k(v1, v2, v3, kChooseKEnumBound)) ++enum_miss;
  }
  std::ostringstream d;
  d << kChooseKTriples << " triples, " << wrong << " wrong k, " << enum_miss << " not confirmed by enumeration";
  return {wrong == 0 && enum_miss == 0, d.str()};
}

Outcome criterion8() {
  CorpusRng rng(8008);
  std::size_t divisor_fail = 0, unimod_fail = 0, member_fail = 0;
  for (std::size_t i = 0; i < kKernelCount; ++i) {
    const std::size_t m = 1 + rng.below(kKernelMaxDim);
    const std::size_t n = 1 + rng.below(kKernelMaxDim);
    Mat x = random_integer_matrix(m, n, -8, 8, rng);
    if (i % 4 == 0 && n > 1) x.set_column(n - 1, x.column(0) + x.column(0));  // rank-deficient sample
    const SmithDecomp s = smith_normal_form(x);
    if (abs(cofactor_det(s.u)) != 1 || abs(cofactor_det(s.v)) != 1 || s.u * x * s.v != s.d) ++unimod_fail;
    Int running = 1;
    const auto diag = s.diagonal();
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      running *= diag[k - 1];
      if (running != determinantal_divisor(x, k)) {
        ++divisor_fail;
        break;
      }
    }
    const HermiteForm hf = hermite_normal_form(x);
    if (abs(cofactor_det(hf.u)) != 1 || x * hf.u != hf.h) ++unimod_fail;
    bool members = true;
    for (std::size_t c = 0; c < n; ++c) members = members && hf.contains(x.column(c));
    ColVec comb(m);
    for (std::size_t c = 0; c < n; ++c) comb = comb + Int(rng.in_range(-5, 5)) * x.column(c);
    members = members && hf.contains(comb);
    // A vector off the lattice: perturb the first pivot row by less than the pivot.
    if (hf.rank() > 0 && hf.h(hf.pivot_rows[0], 0) > 1) {
      ColVec off = hf.h.column(0);
      off[hf.pivot_rows[0]] += 1;
      members = members && !hf.contains(off);
    }
    if (!members) ++member_fail;
  }
  std::ostringstream d;
  d << kKernelCount << " matrices, " << divisor_fail << " divisor mismatches, " << unimod_fail
    << " transform failures, " << member_fail << " membership failures";
  return {divisor_fail == 0 && unimod_fail == 0 && member_fail == 0, d.str()};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TORUSRANK_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string run_cli_capture(const std::string& args, int& code) {
  const std::string cmd = std::string("\"") + TORUSRANK_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Flip one decimal digit of a witness entry at the byte level.
std::string tamper_digit(std::string entry) {
  for (char& ch : entry)
    if (ch >= '0' && ch <= '9') {
      ch = ch == '9' ? '0' : static_cast<char>(ch + 1);
      return entry;
    }
  return entry;
}

Outcome criterion9() {
  const fs::path dir = fs::temp_directory_path() / ("torusrank_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::size_t emitted = 0, verified = 0, tampers = 0, tamper_caught = 0;
  std::string first;
  for (std::size_t n : {3u, 4u}) {
    const auto corpus = random_corpus(n, kMaxOps / 2, 9000 + n, kCertificatesPerDim);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const fs::path mpath = dir / ("m" + std::to_string(n) + "_" + std::to_string(i) + ".txt");
      std::ofstream(mpath) << format_matrix_text(corpus[i]);
      int code = 0;
      const std::string cert = run_cli_capture("decide --json \"" + mpath.string() + "\"", code);
      if (code != 0 && code != 1) {
        if (first.empty()) first = "decide exit " + std::to_string(code) + " on " + to_string(corpus[i]);
        continue;
      }
      ++emitted;
      const fs::path cpath = dir / "cert.json";
      std::ofstream(cpath) << cert;
      if (run_cli("verify \"" + mpath.string() + "\" \"" + cpath.string() + "\"") == 0)
        ++verified;
      else if (first.empty())
        first = "verify rejected its own certificate for " + to_string(corpus[i]);

      const json doc = json::parse(cert);
      if (doc.at("verdict") != "NOT_FULL_RANK") continue;
      const auto& vectors = doc.at("witness_vectors");
      for (std::size_t v = 0; v < vectors.size(); ++v)
        for (std::size_t e = 0; e < vectors[v].size(); ++e) {
          json bad = doc;
          bad["witness_vectors"][v][e] = tamper_digit(vectors[v][e].get<std::string>());
          const fs::path tpath = dir / "tampered.json";
          std::ofstream(tpath) << bad.dump(2);
          ++tampers;
          if (run_cli("verify \"" + mpath.string() + "\" \"" + tpath.string() + "\"") == 1)
            ++tamper_caught;
          else if (first.empty())
            first = "tamper accepted for " + to_string(corpus[i]);
        }
    }
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << emitted << " certificates emitted, " << verified << " verified in a separate process; " << tamper_caught
    << "/" << tampers << " tampered certificates rejected";
  if (!first.empty()) d << "; first issue: " << first;
  return {emitted == 2 * kCertificatesPerDim && verified == emitted && tampers > 0 && tamper_caught == tampers,
          d.str()};
}

}  // namespace

int main() {
  const std::vector<Sample> corpus = full_corpus();
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [&] { return criterion1(corpus); }},
      {2, [&] { return criterion2(corpus); }},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
  };
  int failures = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
