#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "pg/cache.hpp"
#include "pg/catalog.hpp"
#include "pg/spectrum.hpp"
#include "pg/version.hpp"
#include "support/oracles.hpp"

using namespace pg;

TEST_CASE("compute_spectrum: trivial group") {
  EnumeratedGroup t = generate({Permutation::identity(3)});
  Spectrum s = compute_spectrum(t);
  CHECK(s.orders == std::set<uint64_t>{1});
  CHECK(s.strategy == Strategy::exhaustive);
  CHECK(s.group_order == 1);
}

TEST_CASE("compute_spectrum: SL(2,5) matches the raw-integer oracle") {
  std::set<uint64_t> expected = oracle::sl25_spectrum();
  CHECK(expected == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 10});
  CatalogEntry e = catalog(GroupSpec::parse("SL(2,5)"));
  CHECK(compute_spectrum(*e.group).orders == expected);
}

TEST_CASE("compute_spectrum: PGL(2,49) equals the divisor closure of {7,48,50}") {
  CatalogEntry e = catalog(GroupSpec::parse("PGL(2,49)"));
  REQUIRE(e.group.has_value());
  Spectrum s = compute_spectrum(*e.group);
  std::set<uint64_t> expected;
  for (uint64_t m : {7, 48, 50}) {
    auto d = divisors(m);
    expected.insert(d.begin(), d.end());
  }
  CHECK(s.orders == expected);
  CHECK(mu(s) == std::set<uint64_t>{7, 48, 50});
}

TEST_CASE("randomized_spectrum is a lower bound and deterministic in the seed") {
  CatalogEntry e = catalog(GroupSpec::parse("S(7)"));
  Spectrum full = compute_spectrum(*e.group);
  for (uint64_t seed : {1ull, 2ull, 12345ull}) {
    Spectrum sampled = randomized_spectrum(*e.bsgs, 500, seed);
    CHECK(sampled.strategy == Strategy::randomized);
    CHECK(std::includes(full.orders.begin(), full.orders.end(), sampled.orders.begin(),
                        sampled.orders.end()));
  }
  CHECK(randomized_spectrum(*e.bsgs, 500, 7).orders == randomized_spectrum(*e.bsgs, 500, 7).orders);

  Bsgs trivial({Permutation::identity(4)});
  CHECK(randomized_spectrum(trivial, 10, 1).orders == std::set<uint64_t>{1});
}

TEST_CASE("mu: antichain of maximal orders") {
  Spectrum one{{1}, Strategy::exhaustive, 1};
  CHECK(mu(one) == std::set<uint64_t>{1});

  // oracle: exhaustive scan of all 5040 permutations
  std::set<uint64_t> s7 = oracle::symmetric_spectrum(7);
  CHECK(oracle::maximal_under_divisibility(s7) == std::set<uint64_t>{7, 10, 12});
  CatalogEntry e = catalog(GroupSpec::parse("S(7)"));
  Spectrum s = compute_spectrum(*e.group);
  CHECK(s.orders == s7);
  CHECK(mu(s) == std::set<uint64_t>{7, 10, 12});
}

TEST_CASE("mu is always an antichain") {
  for (const char* spec : {"S(6)", "A(7)", "SL(2,5)", "PSL(2,8)"}) {
    Spectrum s = compute_spectrum(*catalog(GroupSpec::parse(spec)).group);
    CHECK(is_antichain(mu(s)));
  }
}

TEST_CASE("spectrum_from_fixture: validation and closure") {
  CHECK_THROWS_AS(spectrum_from_fixture(SpectrumFixture{"bad", 8, {4, 2}, "test"}),
                  MalformedFixture);
  CHECK_THROWS_AS(spectrum_from_fixture(SpectrumFixture{"bad", 9, {4}, "test"}),
                  MalformedFixture);  // 4 does not divide 9
  CHECK_THROWS_AS(spectrum_from_fixture(SpectrumFixture{"bad", 9, {}, "test"}), MalformedFixture);

  Spectrum s = spectrum_from_fixture(SpectrumFixture{"O8+(2)-ish", 174182400, {15}, "test"});
  CHECK(s.orders == std::set<uint64_t>{1, 3, 5, 15});
  CHECK(s.strategy == Strategy::fixture);

  // {7,48,50} at order 117600 reproduces the exhaustive PGL(2,49) spectrum
  Spectrum fixture = spectrum_from_fixture(SpectrumFixture{"PGL(2,49)", 117600, {7, 48, 50}, "test"});
  Spectrum exact = compute_spectrum(*catalog(GroupSpec::parse("PGL(2,49)")).group);
  CHECK(fixture.orders == exact.orders);
}

TEST_CASE("round trip: fixture from mu reproduces every enumerable spectrum") {
  for (const char* spec : {"S(5)", "S(7)", "SL(2,5)", "A(6)", "PSL(2,7)"}) {
    Spectrum s = compute_spectrum(*catalog(GroupSpec::parse(spec)).group);
    SpectrumFixture f{spec, s.group_order, mu(s), "round-trip"};
    CHECK(spectrum_from_fixture(f).orders == s.orders);  // pi_e is divisor-closed
  }
}

TEST_CASE("spectra are divisor-closed and Lagrange-compatible") {
  for (const char* spec : {"S(7)", "SL(2,5)", "A(7)", "PGL(2,9)"}) {
    Spectrum s = compute_spectrum(*catalog(GroupSpec::parse(spec)).group);
    for (uint64_t n : s.orders) {
      CHECK(s.group_order % n == 0);
      for (uint64_t d : divisors(n)) CHECK(s.orders.count(d) == 1);
    }
  }
}

TEST_CASE("cache: store, load, re-validate") {
  std::string dir = (std::filesystem::temp_directory_path() / "pg_cache_test").string();
  std::filesystem::remove_all(dir);

  CHECK(!cache_load(dir, "S(7)").has_value());
  cache_store(dir, CacheRecord{"S(7)", 5040, {7, 10, 12}, "exhaustive", kToolVersion});
  auto rec = cache_load(dir, "S(7)");
  REQUIRE(rec.has_value());
  CHECK(rec->order == 5040);
  CHECK(rec->mu == std::set<uint64_t>{7, 10, 12});
  CHECK(rec->strategy == "exhaustive");

  // records from another tool version are misses
  cache_store(dir, CacheRecord{"A(5)", 60, {5}, "exhaustive", "0.0.0"});
  CHECK(!cache_load(dir, "A(5)").has_value());

  std::filesystem::remove_all(dir);
}
