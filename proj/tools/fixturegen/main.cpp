// Regenerates the fixture files shipped under fixtures/. Each builder
// constructs the group from first principles, verifies the advertised order
// through a stabilizer chain, and (where feasible) enumerates the exact
// element-order set that becomes the fixture's mu.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixturegen.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fixture data generator"};
  std::string out_dir = "fixtures";
  std::vector<std::string> only;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--only", only, "subset of fixture names to rebuild");
  CLI11_PARSE(app, argc, argv);

  auto wanted = [&](const std::string& name) {
    if (only.empty()) return true;
    for (const std::string& o : only)
      if (o == name) return true;
    return false;
  };
  auto emit = [&](pg::FixtureFile f) {
    std::string path = pg::fixture_path(out_dir, f.name);
    pg::save_fixture(f, path);
    std::fprintf(stderr, "wrote %s (degree %u, order %llu)\n", path.c_str(), f.degree,
                 static_cast<unsigned long long>(f.order));
  };

  try {
    if (wanted("U3(3)")) emit(fg::build_u3_fixture(3));
    if (wanted("U3(5)")) emit(fg::build_u3_fixture(5));
    if (wanted("U3(5).2")) emit(fg::build_u3_5_ext_fixture());
    if (wanted("U4(3).2"))
      for (auto& f : fg::build_u4_3_ext_fixtures()) emit(std::move(f));
    if (wanted("S6(2)")) emit(fg::build_s6_2_fixture());
    if (wanted("J2")) emit(fg::build_j2_fixture());
    if (wanted("L2(7)")) emit(fg::build_psl2_fixture(7, "L2(7)"));
    if (wanted("L2(8)")) emit(fg::build_psl2_fixture(8, "L2(8)"));
    if (wanted("L3(4)")) emit(fg::build_l3_4_fixture());
    if (wanted("S4(7)")) emit(fg::build_s4_7_fixture());
    if (wanted("O8+(2)")) emit(fg::build_o8_plus_2_fixture(true));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fixturegen failed: %s\n", e.what());
    return 1;
  }
  return 0;
}
