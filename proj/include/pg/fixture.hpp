#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pg/permutation.hpp"
#include "pg/spectrum.hpp"

namespace pg {

/// On-disk record for a permutation-generator fixture: JSON with fields
/// name, degree, order, generators (image-list notation), optional mu,
/// and a source citation for the declared values.
struct FixtureFile {
  std::string name;
  unsigned degree = 0;
  uint64_t order = 0;
  std::vector<Permutation> generators;
  std::optional<std::set<uint64_t>> mu;
  std::string source;

  SpectrumFixture spectrum_fixture() const;
};

FixtureFile load_fixture(const std::string& path);
void save_fixture(const FixtureFile& fixture, const std::string& path);

/// Resolves fixture:NAME under the fixtures directory as NAME.json.
std::string fixture_path(const std::string& fixtures_dir, const std::string& name);

}  // namespace pg
