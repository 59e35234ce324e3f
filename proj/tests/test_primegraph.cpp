#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "pg/catalog.hpp"
#include "pg/prime_graph.hpp"

using namespace pg;

namespace {

Spectrum spectrum_of(const char* spec) {
  return compute_spectrum(*catalog(GroupSpec::parse(spec)).group);
}

PrimeGraph graph_of(const char* spec) { return graph_from_spectrum(spectrum_of(spec)); }

}  // namespace

TEST_CASE("graph_from_spectrum") {
  Spectrum trivial{{1}, Strategy::exhaustive, 1};
  PrimeGraph empty = graph_from_spectrum(trivial);
  CHECK(empty.vertices.empty());
  CHECK(empty.edges.empty());

  PrimeGraph pgl = graph_of("PGL(2,49)");
  CHECK(pgl.vertices == std::set<uint64_t>{2, 3, 5, 7});
  CHECK(pgl.edges == std::set<std::pair<uint64_t, uint64_t>>{{2, 3}, {2, 5}});

  PrimeGraph sl = graph_of("SL(2,5)");
  CHECK(sl.vertices == std::set<uint64_t>{2, 3, 5});
  CHECK(sl.edges == std::set<std::pair<uint64_t, uint64_t>>{{2, 3}, {2, 5}});
}

TEST_CASE("components") {
  CHECK(components(PrimeGraph{}).empty());
  auto expected = std::vector<std::vector<uint64_t>>{{2, 3, 5}, {7}};
  CHECK(components(graph_of("PGL(2,49)")) == expected);
  CHECK(components(graph_of("S(7)")) == expected);
  CHECK(components(graph_of("PGL(2,49)")).size() == 2);  // t(G) = 2
}

TEST_CASE("graphs_equal is labeled equality") {
  PrimeGraph pgl = graph_of("PGL(2,49)");
  CHECK(graphs_equal(pgl, pgl));
  CHECK(graphs_equal(graph_of("S(7)"), pgl));
  CHECK(!graphs_equal(graph_of("A(8)"), pgl));  // A(8) has the {3,5} edge from order 15
  CHECK(graph_of("A(8)").edges.count({3, 5}) == 1);

  // same shape, different labels: {2,3} vs {2,5} are different graphs
  PrimeGraph a{{2, 3}, {{2, 3}}};
  PrimeGraph b{{2, 5}, {{2, 5}}};
  CHECK(!graphs_equal(a, b));
}

TEST_CASE("graphs_equal is an equivalence relation on catalog graphs") {
  std::vector<PrimeGraph> graphs{graph_of("S(7)"), graph_of("PGL(2,49)"), graph_of("A(8)"),
                                 graph_of("SL(2,5)"), graph_of("A(7)")};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const PrimeGraph& a = graphs[rng() % graphs.size()];
    const PrimeGraph& b = graphs[rng() % graphs.size()];
    const PrimeGraph& c = graphs[rng() % graphs.size()];
    CHECK(graphs_equal(a, a));
    CHECK(graphs_equal(a, b) == graphs_equal(b, a));
    if (graphs_equal(a, b) && graphs_equal(b, c)) CHECK(graphs_equal(a, c));
  }
}

TEST_CASE("independence_sets") {
  PrimeGraph pgl = graph_of("PGL(2,49)");
  auto singletons = independence_sets(pgl, 1);
  CHECK(singletons == std::vector<std::vector<uint64_t>>{{2}, {3}, {5}, {7}});

  auto pairs = independence_sets(pgl, 2);
  CHECK(std::find(pairs.begin(), pairs.end(), std::vector<uint64_t>{2, 7}) != pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), std::vector<uint64_t>{3, 5}) != pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), std::vector<uint64_t>{2, 3}) == pairs.end());

  auto triples = independence_sets(pgl, 3);
  CHECK(triples == std::vector<std::vector<uint64_t>>{{3, 5, 7}});

  CHECK(independence_sets(pgl, 5).empty());
}

TEST_CASE("components form a partition with no cross edges") {
  for (const char* spec : {"PGL(2,49)", "S(7)", "A(8)", "SL(2,5)", "A(10)"}) {
    PrimeGraph g = graph_of(spec);
    auto parts = components(g);
    std::set<uint64_t> covered;
    for (const auto& part : parts)
      for (uint64_t v : part) CHECK(covered.insert(v).second);  // disjoint
    CHECK(covered == g.vertices);                               // covering
    // no edges between different parts
    std::map<uint64_t, size_t> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
      for (uint64_t v : parts[i]) part_of[v] = i;
    for (const auto& [p, q] : g.edges) CHECK(part_of[p] == part_of[q]);
    // internal connectivity: components of the induced subgraph of each part
    // must come back as a single part
    for (const auto& part : parts) {
      PrimeGraph induced;
      induced.vertices.insert(part.begin(), part.end());
      for (const auto& e : g.edges)
        if (induced.vertices.count(e.first) && induced.vertices.count(e.second))
          induced.edges.insert(e);
      CHECK(components(induced).size() == 1);
    }
  }
}

TEST_CASE("vertices are exactly the primes dividing the order (exhaustive spectra)") {
  for (const char* spec : {"S(7)", "SL(2,5)", "A(6)", "PSL(2,7)", "PGL(2,49)"}) {
    Spectrum s = spectrum_of(spec);
    PrimeGraph g = graph_from_spectrum(s);
    std::set<uint64_t> expected;
    uint64_t n = s.group_order;
    for (uint64_t d = 2; d * d <= n; ++d)
      while (n % d == 0) {
        expected.insert(d);
        n /= d;
      }
    if (n > 1) expected.insert(n);
    CHECK(g.vertices == expected);
  }
}

TEST_CASE("every edge {p,q} has pq in the source spectrum") {
  for (const char* spec : {"S(7)", "A(8)", "A(10)", "PGL(2,49)"}) {
    Spectrum s = spectrum_of(spec);
    for (const auto& [p, q] : graph_from_spectrum(s).edges) CHECK(s.orders.count(p * q) == 1);
  }
}

TEST_CASE("export: byte-exact formats") {
  CHECK(export_graph(PrimeGraph{}, "json") == "{\"vertices\":[],\"edges\":[]}");
  PrimeGraph pgl = graph_of("PGL(2,49)");
  CHECK(export_graph(pgl, "json") == "{\"vertices\":[2,3,5,7],\"edges\":[[2,3],[2,5]]}");
  CHECK(export_graph(pgl, "dot") ==
        "graph prime_graph {\n  2;\n  3;\n  5;\n  7;\n  2 -- 3;\n  2 -- 5;\n}\n");
  CHECK(export_graph(pgl, "json") == export_graph(pgl, "json"));
  CHECK(export_graph(pgl, "dot") == export_graph(pgl, "dot"));
  CHECK_THROWS_AS(export_graph(pgl, "yaml"), UnknownFormat);
}

TEST_CASE("edge_difference") {
  PrimeGraph a = graph_of("A(8)");
  PrimeGraph b = graph_of("PGL(2,49)");
  auto diff = edge_difference(a, b);
  CHECK(diff.count({3, 5}) == 1);
  CHECK(edge_difference(b, b).empty());
}
