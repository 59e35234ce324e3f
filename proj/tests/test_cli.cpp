#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pg/fixture.hpp"

namespace fs = std::filesystem;

namespace {

std::string pgtool() {
  const char* env = std::getenv("PGTOOL");
  REQUIRE_MESSAGE(env != nullptr, "PGTOOL env var must point at the pgtool binary");
  return env;
}

std::string fixtures_dir() {
  const char* env = std::getenv("PG_FIXTURES");
  return env ? env : "fixtures";
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("pg_cli_out_" + std::to_string(counter++) + ".txt");
  std::string cmd = "\"" + pgtool() + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out);
  return {WEXITSTATUS(rc), ss.str()};
}

std::string q(const std::string& s) { return "\"" + s + "\""; }

std::string scratch_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("pg_cli_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d.string();
}

}  // namespace

TEST_CASE("cli: spectrum output") {
  std::string cache = scratch_dir("cache_spec");
  auto r = run("spectrum " + q("S(7)") + " --cache-dir " + q(cache));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order: 5040") != std::string::npos);
  CHECK(r.out.find("mu: 7 10 12") != std::string::npos);
  CHECK(r.out.find("strategy: exhaustive") != std::string::npos);
  fs::remove_all(cache);
}

TEST_CASE("cli: graph json bytes") {
  std::string cache = scratch_dir("cache_graph");
  auto r = run("graph " + q("PGL(2,49)") + " --format json --cache-dir " + q(cache));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"vertices\":[2,3,5,7],\"edges\":[[2,3],[2,5]]}\n");

  auto sl = run("graph " + q("SL(2,5)") + " --format json --cache-dir " + q(cache));
  CHECK(sl.out == "{\"vertices\":[2,3,5],\"edges\":[[2,3],[2,5]]}\n");

  auto a8 = run("graph " + q("A(8)") + " --format json --cache-dir " + q(cache));
  CHECK(a8.out.find("[3,5]") != std::string::npos);

  auto dot = run("graph " + q("PGL(2,49)") + " --format dot --cache-dir " + q(cache));
  CHECK(dot.out.find("graph prime_graph {") == 0);
  CHECK(dot.out.find("2 -- 5;") != std::string::npos);
  fs::remove_all(cache);
}

TEST_CASE("cli: cache coherence, warm bytes equal cold bytes") {
  std::string cache = scratch_dir("cache_coherent");
  std::string cmd = "graph " + q("S(7)") + " --format json --cache-dir " + q(cache);
  auto cold = run(cmd);
  CHECK(cold.exit_code == 0);
  CHECK(fs::directory_iterator(cache) != fs::directory_iterator{});  // populated
  auto warm = run(cmd);
  CHECK(warm.out == cold.out);
  // spectrum then reuses the cached mu
  auto spec = run("spectrum " + q("S(7)") + " --cache-dir " + q(cache));
  CHECK(spec.out.find("mu: 7 10 12") != std::string::npos);
  fs::remove_all(cache);
}

TEST_CASE("cli: compare exit codes and difference output") {
  std::string cache = scratch_dir("cache_cmp");
  auto equal = run("compare " + q("S(7)") + " " + q("PGL(2,49)") + " --cache-dir " + q(cache));
  CHECK(equal.exit_code == 0);
  CHECK(equal.out.find("equal: yes") != std::string::npos);

  auto frob = run("compare " + q("frobenius(1)") + " " + q("PGL(2,49)") + " --cache-dir " + q(cache));
  CHECK(frob.exit_code == 0);

  // A(8) differs in two edges: it has {3,5} (an order-15 element) and lacks
  // {2,5} (no order-10 element in A8)
  auto differ = run("compare " + q("A(8)") + " " + q("PGL(2,49)") + " --cache-dir " + q(cache));
  CHECK(differ.exit_code == 3);
  CHECK(differ.out.find("equal: no") != std::string::npos);
  CHECK(differ.out.find("{3,5}") != std::string::npos);
  fs::remove_all(cache);
}

TEST_CASE("cli: usage and budget exit codes") {
  CHECK(run("spectrum " + q("Q(8)")).exit_code == 2);
  CHECK(run("spectrum " + q("fixture:nope") + " --fixtures /nonexistent").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("spectrum").exit_code == 2);
  // SL(2,5) cannot materialize inside a budget of 50 elements
  CHECK(run("spectrum " + q("SL(2,5)") + " --max-enumerate 50").exit_code == 4);
}

TEST_CASE("cli: verify fails loudly on a corrupted fixture") {
  // Injected fault: drop 10 from the U4(3).2 mu, killing the {2,5} edge.
  std::string bad_fixtures = scratch_dir("bad_fixtures");
  for (const auto& entry : fs::directory_iterator(fixtures_dir()))
    fs::copy_file(entry.path(), fs::path(bad_fixtures) / entry.path().filename());
  pg::FixtureFile u432 = pg::load_fixture(pg::fixture_path(fixtures_dir(), "U4(3).2"));
  REQUIRE(u432.mu.has_value());
  u432.mu->erase(10);
  pg::save_fixture(u432, pg::fixture_path(bad_fixtures, "U4(3).2"));

  std::string cache = scratch_dir("cache_badfix");
  fs::path report = fs::temp_directory_path() / "pg_bad_report.json";
  auto r = run("verify paper --seed 7 --samples 2000 --fixtures " + q(bad_fixtures) +
               " --cache-dir " + q(cache) + " --report " + q(report.string()));
  CHECK(r.exit_code == 1);

  std::ifstream in(report);
  nlohmann::json j;
  in >> j;
  bool v6_failed = false;
  for (const auto& claim : j.at("claims"))
    if (claim.at("id") == "V6") v6_failed = claim.at("outcome") == "fail";
  CHECK(v6_failed);
  fs::remove(report);
  fs::remove_all(bad_fixtures);
  fs::remove_all(cache);
}

TEST_CASE("cli: verify under a tiny budget degrades V5 to the decomposition route") {
  std::string cache = scratch_dir("cache_budget_verify");
  fs::path report = fs::temp_directory_path() / "pg_budget_report.json";
  auto r = run("verify paper --seed 3 --samples 2000 --max-enumerate 1000 --fixtures " +
               q(fixtures_dir()) + " --cache-dir " + q(cache) + " --report " + q(report.string()));
  // claims that require exhaustive scans cannot pass at this budget
  CHECK(r.exit_code == 1);
  std::ifstream in(report);
  nlohmann::json j;
  in >> j;
  for (const auto& claim : j.at("claims")) {
    if (claim.at("id") == "V1") CHECK(claim.at("outcome") == "fail");
    if (claim.at("id") == "V5") {
      CHECK(claim.at("outcome") == "pass");
      for (const auto& row : claim.at("evidence").at("family"))
        CHECK(row.at("mode") == "frobenius-decomposition");
    }
  }
  fs::remove(report);
  fs::remove_all(cache);
}

TEST_CASE("cli: verify report is byte-deterministic for a fixed seed") {
  std::string cache = scratch_dir("cache_verify_det");
  std::string base = "verify paper --seed 31337 --samples 2000 --fixtures " + q(fixtures_dir()) +
                     " --cache-dir " + q(cache);
  auto first = run(base);
  CHECK(first.exit_code == 0);
  auto second = run(base);  // warm cache this time
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);

  auto parsed = nlohmann::json::parse(first.out);
  CHECK(parsed.at("seed") == 31337);
  CHECK(parsed.at("claims").size() == 8);
  fs::remove_all(cache);
}
