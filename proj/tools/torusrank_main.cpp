// torusrank: certified full-rank decisions for mapping tori Z^n x|_A Z.
//
// Exit codes
//   decide   0 FULL_RANK, 1 NOT_FULL_RANK
//   verify   0 certificate replays, 1 it does not
//   oracle   3 search contradicts the decision
//   all      2 input or precondition error, 4 internal consistency failure

#include "torusrank/certificate.hpp"
#include "torusrank/corpus.hpp"
#include "torusrank/decide.hpp"
#include "torusrank/matrix_io.hpp"
#include "torusrank/oracle.hpp"
#include "torusrank/reduce.hpp"
#include "torusrank/witness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace tr = torusrank;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitInternal = 4;

void print_set(const tr::OrbitSet& s) {
  for (const auto& v : s) std::cout << "witness: " << v << '\n';
}

int cmd_decide(const std::string& path, bool as_json, bool no_verify) {
  const tr::Mat a = tr::read_matrix_file(path);
  const tr::Decision dec = tr::decide_full_rank(a, {.verify = !no_verify});
  const int code = dec.verdict == tr::Verdict::FullRank ? 0 : 1;
  if (as_json) {
    std::cout << tr::certificate_json(a, dec).dump(2) << '\n';
    return code;
  }
  std::cout << "verdict: " << tr::to_string(dec.verdict) << '\n'
            << "d: " << dec.d << '\n'
            << "rank: " << dec.rank_statement() << '\n';
  if (const auto* w = dec.witness()) {
    std::cout << "certificate: orbit_witness (" << w->set.size() << " vectors)\n";
    print_set(w->set);
    std::cout << "case: " << tr::to_string(w->trace.case_label) << " s=" << w->trace.s << " t=" << w->trace.t
              << '\n'
              << "hash: " << dec.verification_hash << '\n'
              << "verified: " << (w->verified ? "yes" : "no (--no-verify; benchmarking only)") << '\n';
  } else if (sgn(dec.d) == 0) {
    std::cout << "certificate: mod_d (A = a11*I, every orbit is a single line)\n";
  } else {
    std::cout << "certificate: mod_d (A = a11*I mod " << dec.d << ")\n";
  }
  return code;
}

int cmd_witness(const std::string& path, bool as_json) {
  const tr::Mat a = tr::read_matrix_file(path);
  const tr::PipelineWitness w = tr::full_pipeline_witness(a);
  if (as_json) {
    json vectors = json::array();
    for (const auto& v : w.set) vectors.push_back(tr::vector_to_json(v));
    json doc = {{"input_matrix", tr::rows_to_json(a)},
                {"witness_vectors", vectors},
                {"conjugator_chain", tr::chain_json(w.chain)},
                {"type_hn_matrix", tr::rows_to_json(w.hn)},
                {"shift", w.shift.get_str()},
                {"trace", tr::trace_json(w.trace)},
                {"verified", w.verified}};
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  print_set(w.set);
  std::cout << "case: " << tr::to_string(w.trace.case_label) << " s=" << w.trace.s << " t=" << w.trace.t << '\n';
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& target, bool as_json) {
  const tr::Mat a = tr::read_matrix_file(path);
  tr::Reduction r = [&] {
    if (target == "h") return tr::to_type_h(a);
    return tr::to_type_hn(a);
  }();
  if (r.chain.apply(a) != r.reduced) throw tr::InternalError("reduce: conjugation replay failed");
  if (as_json) {
    std::cout << tr::reduction_json(a, r, target).dump(2) << '\n';
    return 0;
  }
  std::cout << "type: " << tr::to_string(tr::classify(r.reduced)) << '\n'
            << "reduced:\n"
            << tr::format_matrix_text(r.reduced) << "P:\n"
            << tr::format_matrix_text(r.chain.p()) << "P_inv:\n"
            << tr::format_matrix_text(r.chain.p_inv());
  return 0;
}

int cmd_verify(const std::string& matrix_path, const std::string& cert_path) {
  const tr::Mat a = tr::read_matrix_file(matrix_path);
  json cert;
  try {
    cert = json::parse(tr::read_file(cert_path));
  } catch (const json::exception& e) {
    throw tr::ParseError(std::string("malformed certificate: ") + e.what());
  }
  const tr::VerifyResult res = tr::verify_certificate(a, cert);
  std::cout << (res.ok ? "OK: " : "FAILED: ") << res.reason << '\n';
  return res.ok ? 0 : 1;
}

int cmd_random(std::size_t n, std::size_t ops, std::uint64_t seed, std::size_t count, const std::string& out_dir) {
  if (n < 1) throw tr::PreconditionError("random: n must be at least 1");
  const auto corpus = tr::random_corpus(n, ops, seed, count);
  if (out_dir.empty()) {
    for (std::size_t i = 0; i < corpus.size(); ++i) std::cout << (i ? "\n" : "") << tr::format_matrix_text(corpus[i]);
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[96];
    std::snprintf(name, sizeof name, "rand_n%zu_ops%zu_seed%llu_%04zu.txt", n, ops,
                  static_cast<unsigned long long>(seed), i);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << tr::format_matrix_text(corpus[i]);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    std::cout << path.string() << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& path, long bound, std::size_t max_size, bool as_json) {
  const tr::Mat a = tr::read_matrix_file(path);
  const std::size_t n = a.rows();
  const auto found = tr::brute_min_upper(a, bound, max_size);
  std::optional<tr::Decision> dec;
  std::string decide_note;
  try {
    dec = tr::decide_full_rank(a);
  } catch (const tr::PreconditionError& e) {
    decide_note = e.what();
  }
  // FULL_RANK means m_A = n, so any smaller generating set refutes it.
  const bool contradiction = dec && found && dec->verdict == tr::Verdict::FullRank && found->size < n;

  if (as_json) {
    json doc = {{"input_matrix", tr::rows_to_json(a)}, {"bound", bound}, {"max_size", max_size}};
    if (found) {
      json vectors = json::array();
      for (const auto& v : found->set) vectors.push_back(tr::vector_to_json(v));
      doc["found_size"] = found->size;
      doc["found_set"] = vectors;
    } else {
      doc["found_size"] = nullptr;
    }
    doc["verdict"] = dec ? json(std::string(tr::to_string(dec->verdict))) : json(nullptr);
    if (dec) doc["d"] = dec->d.get_str();
    if (!decide_note.empty()) doc["decide_error"] = decide_note;
    doc["contradiction"] = contradiction;
    std::cout << doc.dump(2) << '\n';
  } else {
    if (found) {
      std::cout << "search: generating set of size " << found->size << " (upper bound on m_A)\n";
      for (const auto& v : found->set) std::cout << "  " << v << '\n';
    } else {
      std::cout << "search: nothing within bound " << bound << ", size <= " << max_size
                << " (inconclusive)\n";
    }
    if (dec)
      std::cout << "decide: " << tr::to_string(dec->verdict) << " (d = " << dec->d << ")\n";
    else
      std::cout << "decide: unavailable (" << decide_note << ")\n";
    std::cout << (contradiction ? "CONTRADICTION\n" : "consistent\n");
  }
  return contradiction ? kExitContradiction : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified full-rank decisions for mapping tori Z^n x| Z"};
  app.require_subcommand(1);

  std::string path, cert_path, target, out_dir;
  bool as_json = false, no_verify = false;
  long bound = 3;
  std::size_t max_size = 2, n = 3, ops = 10, count = 1;
  std::uint64_t seed = 1;

  auto* decide = app.add_subcommand("decide", "Decide whether rank(Z^n x|_A Z) = n+1");
  decide->add_option("matrix", path, "Matrix file (text or JSON)")->required();
  decide->add_flag("--json", as_json, "Emit the JSON certificate");
  decide->add_flag("--no-verify", no_verify, "Skip witness replay (benchmarking only)");

  auto* witness = app.add_subcommand("witness", "Build a generating orbit set of size n-1");
  witness->add_option("matrix", path, "Matrix file")->required();
  witness->add_flag("--json", as_json, "JSON output");

  auto* reduce = app.add_subcommand("reduce", "Conjugate to type H or HN");
  reduce->add_option("matrix", path, "Matrix file")->required();
  reduce->add_option("--target", target, "h or hn")->required()->check(CLI::IsMember({"h", "hn"}));
  reduce->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Replay a certificate against a matrix");
  verify->add_option("matrix", path, "Matrix file")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON")->required();

  auto* random = app.add_subcommand("random", "Generate seeded random unimodular matrices");
  random->add_option("n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("ops", ops, "Number of elementary factors")->required();
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--count", count, "Number of matrices");
  random->add_option("--out-dir", out_dir, "Write one file per matrix here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Bounded search for small generating orbit sets");
  oracle->add_option("matrix", path, "Matrix file")->required();
  oracle->add_option("--bound", bound, "Entry bound")->check(CLI::PositiveNumber);
  oracle->add_option("--max-size", max_size, "Largest set size to try")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*decide) return cmd_decide(path, as_json, no_verify);
    if (*witness) return cmd_witness(path, as_json);
    if (*reduce) return cmd_reduce(path, target, as_json);
    if (*verify) return cmd_verify(path, cert_path);
    if (*random) return cmd_random(n, ops, seed, count, out_dir);
    if (*oracle) return cmd_oracle(path, bound, max_size, as_json);
  } catch (const tr::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
