#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pg/pipeline.hpp"

namespace pg {

struct VerifyOptions {
  uint64_t seed = 0;
  uint64_t budget = kDefaultBudget;
  std::string fixtures_dir = "fixtures";
  std::string cache_dir;
  size_t samples = 50000;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  std::string strategy;
  bool pass = false;
  nlohmann::ordered_json evidence;
  double elapsed_seconds = 0.0;
};

/// Runs the full claim suite V1..V8: the exact mu and component structure of
/// PGL(2,49), the complement identification, the fixed-point-free certificates,
/// the Frobenius family graphs, the almost-simple graph equalities, the
/// order-15 elimination witnesses, and the unrecognizability witness pair.
/// Claims are independent: a failure is recorded and the suite continues.
std::vector<ClaimResult> run_paper_claims(const VerifyOptions& options);

/// Deterministic report serialization: {claims:[{id,statement,strategy,
/// outcome,evidence}],seed,version}. Timing stays out of the canonical bytes.
nlohmann::ordered_json verification_report(const std::vector<ClaimResult>& claims, uint64_t seed);

/// The prime graph every comparison targets: divisor closure of {7,48,50}.
PrimeGraph reference_pgl249_graph();

}  // namespace pg
