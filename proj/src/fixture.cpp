#include "pg/fixture.hpp"

#include <fstream>

#include <json.hpp>

namespace pg {

SpectrumFixture FixtureFile::spectrum_fixture() const {
  if (!mu) throw MalformedFixture("fixture " + name + " carries no mu data");
  return SpectrumFixture{name, order, *mu, source};
}

FixtureFile load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFixture("fixture file not found: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedFixture("fixture " + path + " is not valid JSON: " + e.what());
  }
  FixtureFile f;
  try {
    f.name = j.at("name").get<std::string>();
    f.degree = j.at("degree").get<unsigned>();
    f.order = j.at("order").get<uint64_t>();
    f.source = j.at("source").get<std::string>();
    for (const auto& gen : j.at("generators")) {
      std::vector<uint16_t> img;
      for (const auto& v : gen) img.push_back(v.get<uint16_t>());
      if (img.size() != f.degree)
        throw MalformedFixture("fixture " + f.name + ": generator length != degree");
      f.generators.emplace_back(std::move(img));
    }
    if (j.contains("mu")) {
      std::set<uint64_t> mu;
      for (const auto& v : j.at("mu")) mu.insert(v.get<uint64_t>());
      f.mu = std::move(mu);
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedFixture("fixture " + path + " has missing or ill-typed fields: " + e.what());
  }
  if (f.generators.empty()) throw MalformedFixture("fixture " + f.name + " has no generators");
  if (f.mu) {
    if (!is_antichain(*f.mu))
      throw MalformedFixture("fixture " + f.name + " mu is not an antichain");
    for (uint64_t m : *f.mu)
      if (m == 0 || f.order % m != 0)
        throw MalformedFixture("fixture " + f.name + " mu member does not divide order");
  }
  return f;
}

void save_fixture(const FixtureFile& fixture, const std::string& path) {
  nlohmann::ordered_json j;
  j["name"] = fixture.name;
  j["degree"] = fixture.degree;
  j["order"] = fixture.order;
  j["source"] = fixture.source;
  if (fixture.mu) j["mu"] = *fixture.mu;
  auto& gens = j["generators"] = nlohmann::ordered_json::array();
  for (const Permutation& g : fixture.generators) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (unsigned i = 0; i < g.degree(); ++i) row.push_back(g(i));
    gens.push_back(std::move(row));
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write fixture file: " + path);
  out << j.dump(1) << "\n";
}

std::string fixture_path(const std::string& fixtures_dir, const std::string& name) {
  return fixtures_dir + "/" + name + ".json";
}

}  // namespace pg
