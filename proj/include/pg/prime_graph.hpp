#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pg/spectrum.hpp"

namespace pg {

/// Prime graph: vertices are the primes appearing in a spectrum, an edge
/// {p, q} means the group has an element of order p*q. Labeled graph:
/// equality compares actual primes, never isomorphism classes.
struct PrimeGraph {
  std::set<uint64_t> vertices;
  std::set<std::pair<uint64_t, uint64_t>> edges;  // stored with first < second

  bool operator==(const PrimeGraph&) const = default;
};

PrimeGraph graph_from_spectrum(const Spectrum& spec);

bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b);

/// Connected components as a canonical partition: parts sorted internally and
/// by their smallest member.
std::vector<std::vector<uint64_t>> components(const PrimeGraph& g);

/// All pairwise-nonadjacent vertex subsets of the given size, canonically
/// sorted. Brute force; prime graphs here have at most a handful of vertices.
std::vector<std::vector<uint64_t>> independence_sets(const PrimeGraph& g, size_t size);

/// Byte-deterministic serializations. Formats: "dot", "json".
std::string export_graph(const PrimeGraph& g, const std::string& format);

/// Edges in exactly one of the two graphs (for compare diagnostics).
std::set<std::pair<uint64_t, uint64_t>> edge_difference(const PrimeGraph& a, const PrimeGraph& b);

}  // namespace pg
