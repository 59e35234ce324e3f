#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pg/pipeline.hpp"
#include "pg/verify.hpp"
#include "pg/version.hpp"

namespace {

// Exit codes are a stable contract:
//   0 success / graphs equal, 1 verification failure, 2 usage or spec error,
//   3 graphs differ, 4 enumeration budget exceeded.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kGraphsDiffer = 3;
constexpr int kBudget = 4;

struct CommonFlags {
  uint64_t budget = pg::kDefaultBudget;
  uint64_t seed = 0;
  size_t samples = 50000;
  std::string cache_dir;
  std::string fixtures_dir = "fixtures";

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-enumerate", budget, "largest group materialized in full");
    cmd->add_option("--seed", seed, "seed for randomized sampling");
    cmd->add_option("--samples", samples, "random elements drawn per randomized spectrum");
    cmd->add_option("--cache-dir", cache_dir, "spectrum cache directory");
    cmd->add_option("--fixtures", fixtures_dir, "directory holding fixture files");
  }

  pg::PipelineOptions pipeline() const {
    return pg::PipelineOptions{budget, fixtures_dir, resolved_cache(), samples, seed};
  }

  std::string resolved_cache() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("PG_CACHE_DIR")) return env;
    return ".pgcache";
  }
};

std::string join_orders(const std::set<uint64_t>& values) {
  std::string out;
  for (uint64_t v : values) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

int run_spectrum(const std::string& spec_text, const CommonFlags& flags) {
  pg::SpectrumResult r = pg::spectrum_for(pg::GroupSpec::parse(spec_text), flags.pipeline());
  std::cout << "spec: " << r.spec.to_string() << "\n";
  std::cout << "strategy: " << pg::strategy_name(r.spectrum.strategy) << "\n";
  std::cout << "order: " << r.order << "\n";
  std::cout << (r.spectrum.strategy == pg::Strategy::randomized ? "pi_e (lower bound): "
                                                                : "pi_e: ")
            << join_orders(r.spectrum.orders) << "\n";
  std::cout << "mu: " << join_orders(r.mu) << "\n";
  if (r.from_cache) std::cerr << "(cache hit)\n";
  return kOk;
}

int run_graph(const std::string& spec_text, const std::string& format, const CommonFlags& flags) {
  pg::PrimeGraph g = pg::graph_for(pg::GroupSpec::parse(spec_text), flags.pipeline());
  std::cout << pg::export_graph(g, format);
  if (format == "json") std::cout << "\n";
  return kOk;
}

int run_compare(const std::string& a_text, const std::string& b_text, const CommonFlags& flags) {
  auto opts = flags.pipeline();
  pg::PrimeGraph a = pg::graph_for(pg::GroupSpec::parse(a_text), opts);
  pg::PrimeGraph b = pg::graph_for(pg::GroupSpec::parse(b_text), opts);
  std::cout << "a: " << a_text << " " << pg::export_graph(a, "json") << "\n";
  std::cout << "b: " << b_text << " " << pg::export_graph(b, "json") << "\n";
  if (pg::graphs_equal(a, b)) {
    std::cout << "equal: yes\n";
    return kOk;
  }
  std::cout << "equal: no\n";
  std::string diff;
  for (const auto& [p, q] : pg::edge_difference(a, b)) {
    if (!diff.empty()) diff += " ";
    diff += "{" + std::to_string(p) + "," + std::to_string(q) + "}";
  }
  std::cout << "edge difference: " << diff << "\n";
  return kGraphsDiffer;
}

int run_verify(const CommonFlags& flags, const std::string& report_path) {
  pg::VerifyOptions options{flags.seed, flags.budget, flags.fixtures_dir, flags.resolved_cache(),
                            flags.samples};
  std::vector<pg::ClaimResult> claims = pg::run_paper_claims(options);
  bool all_pass = true;
  std::string failed;
  for (const pg::ClaimResult& c : claims) {
    std::fprintf(stderr, "%s %s (%.2fs): %s\n", c.id.c_str(), c.pass ? "pass" : "FAIL",
                 c.elapsed_seconds, c.statement.c_str());
    if (!c.pass) {
      all_pass = false;
      failed += (failed.empty() ? "" : ", ") + c.id;
    }
  }
  std::string report = pg::verification_report(claims, flags.seed).dump(1);
  if (report_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(report_path);
    out << report << "\n";
  }
  if (!all_pass) std::fprintf(stderr, "failed claims: %s\n", failed.c_str());
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element-order spectra and prime graphs of finite groups"};
  app.set_version_flag("--version", pg::kToolVersion);
  app.require_subcommand(1);

  CommonFlags flags;

  std::string spec_text, spec_b, format = "json", verify_what, report_path;

  CLI::App* spectrum = app.add_subcommand("spectrum", "order, pi_e and mu of a group");
  spectrum->add_option("spec", spec_text, "group spec, e.g. \"PGL(2,49)\"")->required();
  flags.attach(spectrum);

  CLI::App* graph = app.add_subcommand("graph", "prime graph of a group");
  graph->add_option("spec", spec_text)->required();
  graph->add_option("--format", format, "dot or json");
  flags.attach(graph);

  CLI::App* compare = app.add_subcommand("compare", "compare two prime graphs");
  compare->add_option("a", spec_text)->required();
  compare->add_option("b", spec_b)->required();
  flags.attach(compare);

  CLI::App* verify = app.add_subcommand("verify", "run the built-in claim suite");
  verify->add_option("what", verify_what, "claim suite name (\"paper\")")->required();
  verify->add_option("--report", report_path, "write the JSON report to this file");
  flags.attach(verify);
  verify->get_option("--seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spec_text, flags);
    if (graph->parsed()) return run_graph(spec_text, format, flags);
    if (compare->parsed()) return run_compare(spec_text, spec_b, flags);
    if (verify->parsed()) {
      if (verify_what != "paper") {
        std::cerr << "unknown claim suite: " << verify_what << "\n";
        return kUsage;
      }
      return run_verify(flags, report_path);
    }
  } catch (const pg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const pg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
