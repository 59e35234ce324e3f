#include "pg/spectrum.hpp"

namespace pg {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::randomized: return "randomized";
    case Strategy::fixture: return "fixture";
  }
  return "?";
}

std::set<uint64_t> divisors(uint64_t n) {
  std::set<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.insert(d);
      out.insert(n / d);
    }
  }
  return out;
}

bool is_antichain(const std::set<uint64_t>& values) {
  for (uint64_t a : values)
    for (uint64_t b : values)
      if (a != b && b % a == 0) return false;
  return true;
}

Spectrum compute_spectrum(const EnumeratedGroup& group) {
  std::set<uint64_t> orders;
  for (uint64_t i = 0; i < group.order(); ++i)
    orders.insert(element_order(group.element(i)));
  return {std::move(orders), Strategy::exhaustive, group.order()};
}

Spectrum randomized_spectrum(const Bsgs& group, size_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<uint64_t> seen;
  for (size_t i = 0; i < samples; ++i) seen.insert(group.random_element(rng).order());
  std::set<uint64_t> orders;
  for (uint64_t n : seen) {
    auto ds = divisors(n);
    orders.insert(ds.begin(), ds.end());
  }
  return {std::move(orders), Strategy::randomized, group.order()};
}

Spectrum spectrum_from_fixture(const SpectrumFixture& fixture) {
  if (fixture.mu.empty())
    throw MalformedFixture("fixture " + fixture.name + " carries no mu data");
  if (!is_antichain(fixture.mu))
    throw MalformedFixture("fixture " + fixture.name + " mu is not an antichain");
  for (uint64_t m : fixture.mu)
    if (m == 0 || fixture.order % m != 0)
      throw MalformedFixture("fixture " + fixture.name + " mu member " + std::to_string(m) +
                             " does not divide the declared order");
  std::set<uint64_t> orders;
  for (uint64_t m : fixture.mu) {
    auto ds = divisors(m);
    orders.insert(ds.begin(), ds.end());
  }
  return {std::move(orders), Strategy::fixture, fixture.order};
}

std::set<uint64_t> mu(const Spectrum& spec) {
  std::set<uint64_t> out;
  for (uint64_t n : spec.orders) {
    bool maximal = true;
    for (uint64_t m : spec.orders) {
      if (m != n && m % n == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(n);
  }
  return out;
}

}  // namespace pg
