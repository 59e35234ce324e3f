#include "pg/pipeline.hpp"

#include "pg/version.hpp"

namespace pg {

namespace {

Strategy strategy_from_name(const std::string& name) {
  if (name == "exhaustive") return Strategy::exhaustive;
  if (name == "randomized") return Strategy::randomized;
  return Strategy::fixture;
}

Spectrum spectrum_from_mu(const std::set<uint64_t>& mu_set, Strategy strategy, uint64_t order) {
  std::set<uint64_t> orders;
  for (uint64_t m : mu_set) {
    auto ds = divisors(m);
    orders.insert(ds.begin(), ds.end());
  }
  return {std::move(orders), strategy, order};
}

}  // namespace

SpectrumResult spectrum_for(const GroupSpec& spec, const PipelineOptions& options) {
  CatalogEntry entry = catalog(spec, CatalogOptions{options.budget, options.fixtures_dir});

  SpectrumResult result;
  result.spec = spec;
  result.order = entry.order;

  const std::string spec_str = spec.to_string();
  if (auto cached = cache_load(options.cache_dir, spec_str)) {
    // Orders are cheap (stabilizer chain or construction formula); a stale
    // record that disagrees with the freshly computed order is a miss.
    if (cached->order == entry.order && cached->strategy != "randomized") {
      result.spectrum =
          spectrum_from_mu(cached->mu, strategy_from_name(cached->strategy), entry.order);
      result.mu = cached->mu;
      result.from_cache = true;
      return result;
    }
  }

  if (entry.frobenius) {
    result.spectrum = entry.frobenius->spectrum;
  } else if (entry.group) {
    result.spectrum = compute_spectrum(*entry.group);
  } else if (entry.fixture) {
    result.spectrum = spectrum_from_fixture(*entry.fixture);
  } else if (entry.bsgs) {
    result.spectrum = randomized_spectrum(*entry.bsgs, options.samples, options.seed);
  } else {
    throw Error("catalog entry for " + spec_str + " supports no spectrum strategy");
  }
  result.mu = mu(result.spectrum);

  if (result.spectrum.strategy != Strategy::randomized) {
    cache_store(options.cache_dir, CacheRecord{spec_str, entry.order, result.mu,
                                               strategy_name(result.spectrum.strategy),
                                               kToolVersion});
  }
  return result;
}

PrimeGraph graph_for(const GroupSpec& spec, const PipelineOptions& options) {
  return graph_from_spectrum(spectrum_for(spec, options).spectrum);
}

}  // namespace pg
