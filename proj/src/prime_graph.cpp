#include "pg/prime_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pg {

namespace {

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

PrimeGraph graph_from_spectrum(const Spectrum& spec) {
  PrimeGraph g;
  for (uint64_t n : spec.orders)
    for (uint64_t p : prime_divisors(n)) g.vertices.insert(p);
  for (uint64_t p : g.vertices)
    for (uint64_t q : g.vertices)
      if (p < q && spec.orders.count(p * q)) g.edges.emplace(p, q);
  return g;
}

bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b) { return a == b; }

std::vector<std::vector<uint64_t>> components(const PrimeGraph& g) {
  std::map<uint64_t, uint64_t> root;
  for (uint64_t v : g.vertices) root[v] = v;
  // Tiny union-find over the vertex map.
  std::function<uint64_t(uint64_t)> find = [&](uint64_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [p, q] : g.edges) root[find(p)] = find(q);
  std::map<uint64_t, std::vector<uint64_t>> parts;
  for (uint64_t v : g.vertices) parts[find(v)].push_back(v);
  std::vector<std::vector<uint64_t>> out;
  for (auto& [r, part] : parts) {
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<uint64_t>> independence_sets(const PrimeGraph& g, size_t size) {
  std::vector<uint64_t> verts(g.vertices.begin(), g.vertices.end());
  std::vector<std::vector<uint64_t>> out;
  std::vector<uint64_t> current;
  // Depth-first subset enumeration in ascending vertex order keeps the output
  // canonically sorted without a final sort.
  std::function<void(size_t)> rec = [&](size_t start) {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (size_t i = start; i < verts.size(); ++i) {
      uint64_t v = verts[i];
      bool ok = true;
      for (uint64_t u : current) {
        auto e = std::minmax(u, v);
        if (g.edges.count({e.first, e.second})) {
          ok = false;
          break;
        }
      }
      if (ok) {
        current.push_back(v);
        rec(i + 1);
        current.pop_back();
      }
    }
  };
  if (size <= verts.size()) rec(0);
  return out;
}

std::string export_graph(const PrimeGraph& g, const std::string& format) {
  if (format == "json") {
    std::string out = "{\"vertices\":[";
    bool first = true;
    for (uint64_t v : g.vertices) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += "],\"edges\":[";
    first = true;
    for (const auto& [p, q] : g.edges) {
      if (!first) out += ",";
      out += "[" + std::to_string(p) + "," + std::to_string(q) + "]";
      first = false;
    }
    out += "]}";
    return out;
  }
  if (format == "dot") {
    std::string out = "graph prime_graph {\n";
    for (uint64_t v : g.vertices) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [p, q] : g.edges)
      out += "  " + std::to_string(p) + " -- " + std::to_string(q) + ";\n";
    out += "}\n";
    return out;
  }
  throw UnknownFormat(format);
}

std::set<std::pair<uint64_t, uint64_t>> edge_difference(const PrimeGraph& a, const PrimeGraph& b) {
  std::set<std::pair<uint64_t, uint64_t>> out;
  for (const auto& e : a.edges)
    if (!b.edges.count(e)) out.insert(e);
  for (const auto& e : b.edges)
    if (!a.edges.count(e)) out.insert(e);
  return out;
}

}  // namespace pg
