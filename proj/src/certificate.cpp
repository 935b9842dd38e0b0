#include "torusrank/certificate.hpp"

#include "torusrank/matrix_io.hpp"
#include "torusrank/oracle.hpp"

namespace torusrank {

using nlohmann::json;

json trace_json(const WitnessTrace& trace) {
  json minors = json::array();
  for (const auto& m : trace.minors) minors.push_back({{"name", m.name}, {"value", m.value.get_str()}});
  json cvals = json::array();
  for (const auto& c : trace.c_values) cvals.push_back({{"name", c.name}, {"value", c.value.get_str()}});
  json primes = json::array();
  for (const auto& p : trace.prime_sets) {
    json list = json::array();
    for (const Int& x : p.primes) list.push_back(x.get_str());
    primes.push_back({{"name", p.name}, {"primes", list}});
  }
  return {{"case_label", std::string(to_string(trace.case_label))},
          {"s", trace.s.get_str()},
          {"t", trace.t.get_str()},
          {"minors", minors},
          {"c_values", cvals},
          {"prime_sets", primes}};
}

json chain_json(const UnimodChain& chain) {
  return {{"P", rows_to_json(chain.p())}, {"P_inv", rows_to_json(chain.p_inv())}};
}

json certificate_json(const Mat& a, const Decision& decision) {
  json doc = {{"format", kCertificateFormat},
              {"n", a.rows()},
              {"input_matrix", rows_to_json(a)},
              {"verdict", std::string(to_string(decision.verdict))},
              {"d", decision.d.get_str()},
              {"rank_statement", decision.rank_statement()}};
  if (const PipelineWitness* w = decision.witness()) {
    json vectors = json::array();
    for (const ColVec& v : w->set) vectors.push_back(vector_to_json(v));
    doc["certificate_kind"] = "orbit_witness";
    doc["witness_vectors"] = vectors;
    doc["verification_hash"] = decision.verification_hash;
    doc["conjugator_chain"] = chain_json(w->chain);
    doc["shift"] = w->shift.get_str();
    doc["type_hn_matrix"] = rows_to_json(w->hn);
    doc["trace"] = trace_json(w->trace);
    doc["verified"] = w->verified;
    if (!w->verified) doc["note"] = "witness replay skipped (--no-verify); for benchmarking only";
  } else {
    doc["certificate_kind"] = "mod_d";
    doc["obstruction"] = {
        {"modulus", decision.d.get_str()},
        {"claim", sgn(decision.d) == 0 ? "A = a11*I exactly (gcd(0) = 0)"
                                       : "every entry of A - a11*I is divisible by d"}};
    doc["verified"] = true;
  }
  return doc;
}

json reduction_json(const Mat& a, const Reduction& r, std::string_view target) {
  return {{"input_matrix", rows_to_json(a)},
          {"target", std::string(target)},
          {"reduced_matrix", rows_to_json(r.reduced)},
          {"type", std::string(to_string(classify(r.reduced)))},
          {"conjugator_chain", chain_json(r.chain)},
          {"replayed", r.chain.apply(a) == r.reduced}};
}

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("certificate is missing key '") + key + "'");
  return doc.at(key);
}

std::string require_string(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_string()) throw ParseError(std::string("certificate key '") + key + "' must be a string");
  return v.get<std::string>();
}

VerifyResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

VerifyResult verify_certificate(const Mat& a, const json& cert) {
  const Mat claimed_input = rows_from_json(require(cert, "input_matrix"));
  const std::string verdict = require_string(cert, "verdict");
  const Int claimed_d = parse_int(require_string(cert, "d"));
  const std::string kind = require_string(cert, "certificate_kind");
  const json& verified = require(cert, "verified");
  if (!verified.is_boolean()) throw ParseError("certificate key 'verified' must be a boolean");
  if (verdict != "FULL_RANK" && verdict != "NOT_FULL_RANK") throw ParseError("unknown verdict '" + verdict + "'");

  if (!(claimed_input == a)) return fail("certificate was issued for a different matrix");
  if (!a.is_square()) return fail("matrix is not square");
  const std::size_t n = a.rows();
  if (!is_unimodular(a)) return fail("matrix is not unimodular");
  const Int d = criterion_gcd(a);
  if (claimed_d != d) return fail("claimed d = " + claimed_d.get_str() + " but gcd(A - a11*I) = " + d.get_str());

  if (verdict == "FULL_RANK") {
    if (kind != "mod_d") return fail("FULL_RANK must carry a mod_d certificate");
    if (d == 1) return fail("d = 1 does not obstruct");
    if (n == 2) return fail("n = 2 is outside the criterion");
    if (!check_mod_d_obstruction(a, d)) return fail("A is not congruent to a11*I modulo d");
    return {true, "A = a11*I (mod " + d.get_str() + ") holds entrywise"};
  }

  if (kind != "orbit_witness") return fail("NOT_FULL_RANK must carry an orbit_witness certificate");
  if (!verified.get<bool>()) return fail("certificate is marked unverified");
  const json& vectors = require(cert, "witness_vectors");
  if (!vectors.is_array()) throw ParseError("'witness_vectors' must be an array");
  std::vector<ColVec> vs;
  for (const auto& v : vectors) vs.push_back(vector_from_json(v));
  if (n < 3) return fail("orbit witnesses require n >= 3");
  if (vs.size() != n - 1)
    return fail("witness has " + std::to_string(vs.size()) + " vectors, expected " + std::to_string(n - 1));
  for (const ColVec& v : vs)
    if (v.size() != n) return fail("witness vector of wrong dimension");
  std::optional<OrbitSet> set;
  try {
    set.emplace(vs);
  } catch (const PreconditionError& e) {
    return fail(e.what());
  }
  if (!is_generating(a, *set)) return fail("witness vectors do not generate Z^n under A");
  if (cert.contains("verification_hash")) {
    if (!cert.at("verification_hash").is_string()) throw ParseError("'verification_hash' must be a string");
    if (cert.at("verification_hash").get<std::string>() != witness_hash(a, *set))
      return fail("verification hash does not match the witness");
  }
  if (cert.contains("conjugator_chain") && !cert.at("conjugator_chain").is_null()) {
    const json& chain = cert.at("conjugator_chain");
    const Mat p = rows_from_json(require(chain, "P"));
    const Mat p_inv = rows_from_json(require(chain, "P_inv"));
    if (p.rows() != n || p_inv.rows() != n || !p.is_square() || !p_inv.is_square() ||
        !(p * p_inv == Mat::identity(n)))
      return fail("conjugator chain is not a unimodular pair");
  }
  return {true, "witness of size " + std::to_string(n - 1) + " generates Z^" + std::to_string(n)};
}

}  // namespace torusrank
