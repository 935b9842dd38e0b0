#pragma once

// JSON certificate documents and their independent replay.

#include "torusrank/decide.hpp"
#include "torusrank/reduce.hpp"

#include <json.hpp>

#include <string>

namespace torusrank {

inline constexpr const char* kCertificateFormat = "torusrank-certificate/1";

nlohmann::json certificate_json(const Mat& a, const Decision& decision);
nlohmann::json trace_json(const WitnessTrace& trace);
nlohmann::json chain_json(const UnimodChain& chain);

nlohmann::json reduction_json(const Mat& a, const Reduction& r, std::string_view target);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

// Replays a certificate against a matrix: the mod-d congruence for FULL_RANK,
// generation and size n-1 for NOT_FULL_RANK. Malformed documents raise
// ParseError; claims that do not replay return ok = false.
VerifyResult verify_certificate(const Mat& a, const nlohmann::json& cert);

}  // namespace torusrank
