#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pg/catalog.hpp"
#include "pg/prime_graph.hpp"
#include "pg/verify.hpp"

using namespace pg;

namespace {

std::string fixtures_dir() {
  const char* env = std::getenv("PG_FIXTURES");
  return env ? env : "fixtures";
}

CatalogOptions opts() { return CatalogOptions{kDefaultBudget, fixtures_dir()}; }

}  // namespace

TEST_CASE("GroupSpec: parse and round-trip") {
  for (const char* text : {"S(7)", "A(10)", "PSL(2,49)", "PGL(2,8)", "SL(2,5)", "frobenius(2)",
                           "fixture:U4(3).2", "perm:/tmp/some file.json"}) {
    CHECK(GroupSpec::parse(text).to_string() == text);
  }
  for (const char* text : {"", "S()", "S(x)", "A(2)", "PGL(2,6)", "PSL(2,0)", "frobenius(0)",
                           "fixture:", "perm:", "Q(8)", "S(7) "}) {
    CHECK_THROWS_AS(GroupSpec::parse(text), UnknownSpec);
  }
}

TEST_CASE("build_complement over GF(49): the SL(2,5) evidence bundle") {
  ComplementEvidence ev;
  EnumeratedGroup c = build_complement(FiniteField::get(7, 2), &ev);
  CHECK(c.order() == 120);
  CHECK(ev.identified);
  CHECK(ev.order == 120);
  CHECK(ev.center_order == 2);
  CHECK(ev.involution_count == 1);
  CHECK(ev.quotient_order == 60);
  CHECK(ev.quotient_simple);
  CHECK(ev.spectrum == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 10});
  CHECK(ev.y_order == 10);
  CHECK(!ev.y_fifth_power_is_identity);  // the claimed relation y^5 = 1 fails
}

TEST_CASE("build_complement rejects fields without the needed roots") {
  CHECK_THROWS_AS(build_complement(FiniteField::get(7, 1)), FieldLacksRoots);
  CHECK_THROWS_AS(build_complement(FiniteField::get(7, 3)), FieldLacksRoots);
  CHECK_THROWS_AS(build_complement(FiniteField::get(5, 2)), FieldLacksRoots);  // wrong characteristic
}

TEST_CASE("build_complement over GF(7^4) has the same spectrum") {
  ComplementEvidence ev;
  build_complement(FiniteField::get(7, 4), &ev);
  CHECK(ev.spectrum == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 10});
  CHECK(ev.identified);
}

TEST_CASE("build_frobenius(1): full enumeration") {
  FrobeniusGroup fr = build_frobenius(1);
  CHECK(fr.order == 288120);  // 49^2 * 120
  CHECK(fr.enumerated);
  CHECK(fr.witness.kernel_order == 2401);
  CHECK(fr.witness.complement_order == 120);
  CHECK(fr.witness.fpf.fixed_point_free);
  CHECK(fr.spectrum.orders == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 7, 10});
  CHECK(fr.spectrum.strategy == Strategy::exhaustive);
  CHECK(graphs_equal(graph_from_spectrum(fr.spectrum), reference_pgl249_graph()));
}

TEST_CASE("build_frobenius(2): witness mode beyond the budget") {
  FrobeniusGroup fr = build_frobenius(2);
  CHECK(fr.order == 691776120ull);  // 7^8 * 120
  CHECK(!fr.enumerated);
  CHECK(!fr.group.has_value());
  CHECK(fr.spectrum.orders == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 7, 10});
  CHECK(graphs_equal(graph_from_spectrum(fr.spectrum), reference_pgl249_graph()));
}

TEST_CASE("build_frobenius(1) degrades to witness mode under a tiny budget") {
  FrobeniusGroup fr = build_frobenius(1, 1000);
  CHECK(!fr.enumerated);
  CHECK(fr.order == 288120);
  CHECK(fr.spectrum.orders == std::set<uint64_t>{1, 2, 3, 4, 5, 6, 7, 10});
}

TEST_CASE("catalog: standard families") {
  CHECK(catalog(GroupSpec::parse("S(7)")).order == 5040);
  CHECK(catalog(GroupSpec::parse("A(8)")).order == 20160);
  CHECK(catalog(GroupSpec::parse("SL(2,5)")).order == 120);
  CHECK(catalog(GroupSpec::parse("PSL(2,49)")).order == 58800);
  CHECK(catalog(GroupSpec::parse("PSL(2,8)")).order == 504);
  CHECK(catalog(GroupSpec::parse("PSL(2,7)")).order == 168);

  CatalogEntry pgl = catalog(GroupSpec::parse("PGL(2,49)"));
  CHECK(pgl.order == 117600);  // q(q-1)(q+1)
  REQUIRE(pgl.bsgs.has_value());
  CHECK(pgl.bsgs->degree() == 50);

  Spectrum a8 = compute_spectrum(*catalog(GroupSpec::parse("A(8)")).group);
  CHECK(a8.orders.count(15) == 1);
}

TEST_CASE("catalog: fixtures load, validate, and enumerate within budget") {
  CatalogEntry u35 = catalog(GroupSpec::parse("fixture:U3(5)"), opts());
  CHECK(u35.order == 126000);
  CHECK(u35.bsgs->degree() == 126);
  REQUIRE(u35.group.has_value());  // 126000 <= default budget
  REQUIRE(u35.fixture.has_value());
  CHECK(u35.fixture->mu == std::set<uint64_t>{6, 7, 8, 10});

  CatalogEntry u432 = catalog(GroupSpec::parse("fixture:U4(3).2"), opts());
  CHECK(u432.order == 6531840);
  CHECK(!u432.group.has_value());  // beyond the default budget
  REQUIRE(u432.fixture.has_value());

  CHECK_THROWS_AS(catalog(GroupSpec::parse("fixture:nope"), opts()), MissingFixture);
}

TEST_CASE("catalog: perm:FILE and fixture validation failures") {
  namespace fs = std::filesystem;
  const std::string dir = (fs::temp_directory_path() / "pg_fixture_test").string();
  fs::remove_all(dir);
  fs::create_directories(dir);

  // perm:FILE uses the same format, addressed by path
  FixtureFile good = load_fixture(fixture_path(fixtures_dir(), "L2(7)"));
  save_fixture(good, dir + "/copy.json");
  CatalogEntry byfile = catalog(GroupSpec::parse("perm:" + dir + "/copy.json"), opts());
  CHECK(byfile.order == 168);

  FixtureFile bad_order = good;
  bad_order.order = 169;
  bad_order.mu.reset();  // keep load-time mu validation out of the way
  save_fixture(bad_order, dir + "/bad_order.json");
  CHECK_THROWS_AS(catalog(GroupSpec::parse("perm:" + dir + "/bad_order.json"), opts()),
                  FixtureOrderMismatch);

  FixtureFile bad_mu = good;
  bad_mu.mu = std::set<uint64_t>{4, 2};  // not an antichain
  save_fixture(bad_mu, dir + "/bad_mu.json");
  CHECK_THROWS_AS(catalog(GroupSpec::parse("perm:" + dir + "/bad_mu.json"), opts()),
                  MalformedFixture);

  std::ofstream(dir + "/garbage.json") << "not json";
  CHECK_THROWS_AS(catalog(GroupSpec::parse("perm:" + dir + "/garbage.json"), opts()),
                  MalformedFixture);

  fs::remove_all(dir);
}

TEST_CASE("fixed-point-freeness is re-proved per field, m in {1,2,3}") {
  for (unsigned m = 1; m <= 3; ++m) {
    EnumeratedGroup c = build_complement(FiniteField::get(7, 2 * m));
    auto res = is_fixed_point_free(c);
    CHECK(res.fixed_point_free);
    CHECK(!res.witness.has_value());
  }
}

TEST_CASE("Lemma-style graph equalities from the shipped fixtures") {
  PrimeGraph target = reference_pgl249_graph();
  for (const char* name : {"fixture:U3(5)", "fixture:U3(5).2"}) {
    CatalogEntry e = catalog(GroupSpec::parse(name), opts());
    REQUIRE(e.group.has_value());
    CHECK(graphs_equal(graph_from_spectrum(compute_spectrum(*e.group)), target));
  }
  CatalogEntry u432 = catalog(GroupSpec::parse("fixture:U4(3).2"), opts());
  CHECK(graphs_equal(graph_from_spectrum(spectrum_from_fixture(*u432.fixture)), target));
}

TEST_CASE("order-15 witnesses in the fixture-backed groups") {
  for (const char* name : {"fixture:J2", "fixture:S6(2)", "fixture:O8+(2)"}) {
    CatalogEntry e = catalog(GroupSpec::parse(name), opts());
    Spectrum s = randomized_spectrum(*e.bsgs, 20000, 424242);
    CHECK(s.orders.count(15) == 1);
  }
}
