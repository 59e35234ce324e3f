#pragma once

#include <cstdint>
#include <string>

#include "pg/cache.hpp"
#include "pg/catalog.hpp"
#include "pg/prime_graph.hpp"

namespace pg {

struct PipelineOptions {
  uint64_t budget = kDefaultBudget;
  std::string fixtures_dir = "fixtures";
  std::string cache_dir;        // empty = caching disabled
  size_t samples = 50000;       // randomized strategy sample count
  uint64_t seed = 0;
};

struct SpectrumResult {
  GroupSpec spec;
  uint64_t order = 0;
  Spectrum spectrum;
  std::set<uint64_t> mu;
  bool from_cache = false;
};

/// Strategy selection rule: exhaustive when the group materializes within the
/// budget; otherwise the fixture's mu is authoritative when present; otherwise
/// a seeded randomized lower bound. Exhaustive and fixture results go through
/// the cache (hits re-validate the group order first).
SpectrumResult spectrum_for(const GroupSpec& spec, const PipelineOptions& options);

PrimeGraph graph_for(const GroupSpec& spec, const PipelineOptions& options);

}  // namespace pg
