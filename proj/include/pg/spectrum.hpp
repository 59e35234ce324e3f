#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "pg/bsgs.hpp"
#include "pg/enumerate.hpp"

namespace pg {

enum class Strategy { exhaustive, randomized, fixture };

std::string strategy_name(Strategy s);

/// The set of element orders of a group. Always divisor-closed and contains 1.
/// The strategy records what the set means: exhaustive spectra are exact,
/// randomized ones are lower bounds from sampling, fixture ones are the
/// divisor closure of cited literature data.
struct Spectrum {
  std::set<uint64_t> orders;
  Strategy strategy;
  uint64_t group_order;
};

/// Literature record for a group too large to enumerate: its order, the
/// divisibility-maximal element orders, and where those values come from.
struct SpectrumFixture {
  std::string name;
  uint64_t order = 0;
  std::set<uint64_t> mu;
  std::string source;
};

/// Exact spectrum by evaluating element_order over every element.
Spectrum compute_spectrum(const EnumeratedGroup& group);

/// Divisor closure of the orders of `samples` uniform random elements.
/// Deterministic given the seed.
Spectrum randomized_spectrum(const Bsgs& group, size_t samples, uint64_t seed);

/// Divisor closure of the fixture's mu. Throws MalformedFixture when mu is not
/// an antichain or a member does not divide the order.
Spectrum spectrum_from_fixture(const SpectrumFixture& fixture);

/// Maximal elements of the spectrum under divisibility (an antichain).
std::set<uint64_t> mu(const Spectrum& spec);

/// All divisors of n, ascending.
std::set<uint64_t> divisors(uint64_t n);

bool is_antichain(const std::set<uint64_t>& values);

}  // namespace pg
