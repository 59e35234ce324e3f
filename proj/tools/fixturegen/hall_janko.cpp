// Builds the Hall-Janko group on 100 points from scratch:
//
//   1. materialize U3(3) = SU(3,3) as 6048 matrices over GF(9);
//   2. locate an L2(7) subgroup (order-168 closure of an involution and an
//      order-3 element) and form the 36-point coset action, plus the 63-point
//      action on nonisotropic points of the Hermitian form;
//   3. wire the rank-3 graph on 1 + 36 + 63 vertices from the orbital data,
//      keeping whichever choice verifies srg(100, 36, 14, 12) exactly;
//   4. find one extra graph automorphism moving the distinguished vertex by
//      individualization-refinement backtracking, so the group grows past the
//      point stabilizer;
//   5. take the derived subgroup if the search landed on the full automorphism
//      group, leaving the simple group of order 604800.

#include <bitset>
#include <cassert>
#include <cstdio>
#include <optional>

#include "fixturegen.hpp"
#include "pg/enumerate.hpp"

namespace fg {

using namespace pg;

namespace {

constexpr unsigned kVertices = 100;
using Bits = std::bitset<kVertices>;

// ---- small matrix-closure helper -------------------------------------------

// Order of <a, b> up to cap; cap+1 means "bigger than cap".
uint64_t closure_order(const Matrix& a, const Matrix& b, uint64_t cap) {
  ElementCodec codec{GroupElement(a)};
  std::set<std::vector<uint8_t>> seen;
  std::vector<Matrix> queue{Matrix::identity(a.field(), a.dim())};
  seen.insert(codec.key(GroupElement(queue[0])));
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Matrix* g : {&a, &b}) {
      Matrix next = queue[head] * *g;
      if (seen.insert(codec.key(GroupElement(next))).second) {
        if (seen.size() > cap) return cap + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<Matrix> closure_elements(const std::vector<Matrix>& gens) {
  ElementCodec codec{GroupElement(gens[0])};
  std::set<std::vector<uint8_t>> seen;
  std::vector<Matrix> queue{Matrix::identity(gens[0].field(), gens[0].dim())};
  seen.insert(codec.key(GroupElement(queue[0])));
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Matrix& g : gens) {
      Matrix next = queue[head] * g;
      if (seen.insert(codec.key(GroupElement(next))).second) queue.push_back(std::move(next));
    }
  return queue;
}

// ---- graph assembly ---------------------------------------------------------

struct Graph {
  std::vector<Bits> adj;
  Graph() : adj(kVertices) {}
  void add_edge(unsigned u, unsigned v) {
    adj[u].set(v);
    adj[v].set(u);
  }
  bool is_srg_100_36_14_12() const {
    for (unsigned v = 0; v < kVertices; ++v) {
      if (adj[v].test(v)) return false;
      if (adj[v].count() != 36) return false;
    }
    for (unsigned u = 0; u < kVertices; ++u)
      for (unsigned v = u + 1; v < kVertices; ++v) {
        size_t common = (adj[u] & adj[v]).count();
        if (adj[u].test(v) ? common != 14 : common != 12) return false;
      }
    return true;
  }
};

// Orbit of seed pairs under a diagonal generator action, added as edges.
void close_pairs(Graph& graph, const std::vector<Permutation>& gens,
                 const std::vector<std::pair<unsigned, unsigned>>& seeds) {
  std::set<std::pair<unsigned, unsigned>> seen;
  std::vector<std::pair<unsigned, unsigned>> queue;
  auto ordered = [](unsigned a, unsigned b) {
    return a < b ? std::pair<unsigned, unsigned>{a, b} : std::pair<unsigned, unsigned>{b, a};
  };
  for (auto [u, v] : seeds) {
    auto key = ordered(u, v);
    if (seen.insert(key).second) queue.push_back(key);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [u, v] = queue[head];
    graph.add_edge(u, v);
    for (const Permutation& g : gens) {
      auto key = ordered(g(u), g(v));
      if (seen.insert(key).second) queue.push_back(key);
    }
  }
}

// Partition of `points` into orbits under a set of permutations (given as a
// subgroup's full element action on the domain through `apply`).
std::vector<std::vector<unsigned>> orbits_under(
    unsigned count, const std::function<std::vector<unsigned>(unsigned)>& neighbors) {
  std::vector<int> seen(count, 0);
  std::vector<std::vector<unsigned>> out;
  for (unsigned start = 0; start < count; ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> orbit{start};
    seen[start] = 1;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (unsigned next : neighbors(orbit[head]))
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
    out.push_back(std::move(orbit));
  }
  return out;
}

// ---- automorphism search ----------------------------------------------------

struct AutoSearch {
  const Graph& graph;
  std::vector<int> order;  // source vertices in mapping order
  std::vector<int> image;
  Bits used;
  uint64_t nodes = 0;
  uint64_t node_cap = 20'000'000;

  explicit AutoSearch(const Graph& g) : graph(g), image(kVertices, -1) {
    // Connected greedy order: each new vertex sees as many ordered vertices
    // as possible, which makes the candidate sets collapse early.
    std::vector<int> picked(kVertices, 0);
    order.push_back(0);
    picked[0] = 1;
    while (order.size() < kVertices) {
      int best = -1, best_links = -1;
      for (unsigned v = 0; v < kVertices; ++v) {
        if (picked[v]) continue;
        int links = 0;
        for (int s : order) links += graph.adj[v].test(s);
        if (links > best_links) {
          best_links = links;
          best = static_cast<int>(v);
        }
      }
      order.push_back(best);
      picked[best] = 1;
    }
  }

  // Finds an automorphism with image[source0] = target, if node budget allows.
  std::optional<Permutation> find(unsigned target) {
    std::fill(image.begin(), image.end(), -1);
    used.reset();
    nodes = 0;
    image[order[0]] = static_cast<int>(target);
    used.set(target);
    if (recurse(1)) {
      std::vector<uint16_t> img(kVertices);
      for (unsigned v = 0; v < kVertices; ++v) img[v] = static_cast<uint16_t>(image[v]);
      return Permutation(img);
    }
    return std::nullopt;
  }

  bool recurse(size_t depth) {
    if (depth == kVertices) return true;
    if (++nodes > node_cap) return false;
    unsigned v = static_cast<unsigned>(order[depth]);
    Bits cand = ~used;
    for (size_t d = 0; d < depth; ++d) {
      unsigned s = static_cast<unsigned>(order[d]);
      unsigned t = static_cast<unsigned>(image[s]);
      cand &= graph.adj[v].test(s) ? graph.adj[t] : ~graph.adj[t];
      if (cand.none()) return false;
    }
    for (unsigned w = 0; w < kVertices; ++w) {
      if (!cand.test(w)) continue;
      image[v] = static_cast<int>(w);
      used.set(w);
      if (recurse(depth + 1)) return true;
      used.reset(w);
      image[v] = -1;
    }
    return false;
  }
};

// ---- derived subgroup -------------------------------------------------------

std::vector<Permutation> derived_subgroup(const std::vector<Permutation>& gens) {
  std::vector<Permutation> kgens;
  for (const Permutation& a : gens)
    for (const Permutation& b : gens) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) kgens.push_back(c);
    }
  Bsgs chain(kgens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot = kgens;
    for (const Permutation& g : gens)
      for (const Permutation& k : snapshot) {
        Permutation c = g * k * g.inverse();
        if (!chain.contains(c)) {
          kgens.push_back(c);
          chain = Bsgs(kgens);
          grew = true;
        }
      }
  }
  return kgens;
}

}  // namespace

pg::FixtureFile build_j2_fixture() {
  const unsigned q = 3;
  const FiniteField& f = FiniteField::get(q, 2);

  // U3(3) as matrices. su3 generator logic lives in classical_groups.cpp; the
  // fixture builder there is the authority on the construction, so rebuild the
  // group from that fixture's underlying pieces: regenerate matrix generators
  // locally through the same root-element recipe.
  std::vector<Matrix> su_gens;
  {
    // u(a,b): rows [[1,a,b],[0,1,-a^q],[0,0,1]], b + b^q + a^{1+q} = 0.
    auto solve_trace = [&](uint32_t c, bool nonzero) {
      for (uint32_t b = 0; b < f.size(); ++b) {
        if (nonzero && b == 0) continue;
        if (f.add(b, f.pow(b, q)) == c) return b;
      }
      throw Error("trace equation has no solution");
    };
    auto root = [&](uint32_t a, uint32_t b) {
      Matrix m = Matrix::identity(f, 3);
      Vec e = m.entries();
      e[1] = a;
      e[2] = b;
      e[5] = f.neg(f.pow(a, q));
      return Matrix(f, 3, e);
    };
    su_gens.push_back(root(f.one(), solve_trace(f.neg(f.one()), false)));
    uint32_t theta = f.generator();
    su_gens.push_back(root(theta, solve_trace(f.neg(f.pow(theta, 1 + q)), false)));
    su_gens.push_back(root(0, solve_trace(0, true)));
    {
      Matrix m = Matrix::identity(f, 3);
      Vec e = m.entries();
      e[0] = theta;
      e[4] = f.pow(theta, q - 1);
      e[8] = f.inv(f.pow(theta, q));
      su_gens.emplace_back(f, 3, e);
    }
    {
      Vec e(9, 0);
      e[2] = f.one();
      e[4] = f.neg(f.one());
      e[6] = f.one();
      su_gens.emplace_back(f, 3, e);
    }
  }
  std::vector<Matrix> u33 = closure_elements(su_gens);
  if (u33.size() != 6048) throw Error("U3(3) closure has wrong order");

  // L2(7): first order-168 closure of an involution and an order-3 element.
  std::optional<std::pair<size_t, size_t>> found;
  for (size_t i = 0; i < u33.size() && !found; ++i) {
    if (u33[i].order() != 2) continue;
    for (size_t j = 0; j < u33.size() && !found; ++j) {
      if (u33[j].order() != 3) continue;
      if (closure_order(u33[i], u33[j], 200) == 168) found = {i, j};
    }
  }
  if (!found) throw Error("no L2(7) subgroup located");
  std::vector<Matrix> l27 = closure_elements({u33[found->first], u33[found->second]});
  if (l27.size() != 168) throw Error("L2(7) closure has wrong order");
  std::fprintf(stderr, "J2: located L2(7) inside U3(3)\n");

  // 36-point coset domain: coset key = lex-least element key of g*L.
  ElementCodec codec{GroupElement(u33[0])};
  auto coset_key = [&](const Matrix& g) {
    std::vector<uint8_t> best;
    for (const Matrix& h : l27) {
      auto key = codec.key(GroupElement(g * h));
      if (best.empty() || key < best) best = key;
    }
    return best;
  };
  std::map<std::vector<uint8_t>, unsigned> coset_index;
  std::vector<unsigned> elem_coset(u33.size());
  std::map<std::vector<uint8_t>, size_t> elem_index;
  for (size_t i = 0; i < u33.size(); ++i) elem_index[codec.key(GroupElement(u33[i]))] = i;
  std::vector<size_t> coset_rep;
  for (size_t i = 0; i < u33.size(); ++i) {
    auto key = coset_key(u33[i]);
    auto it = coset_index.find(key);
    if (it == coset_index.end()) {
      it = coset_index.emplace(key, static_cast<unsigned>(coset_rep.size())).first;
      coset_rep.push_back(i);
    }
    elem_coset[i] = it->second;
  }
  if (coset_rep.size() != 36) throw Error("expected 36 cosets of L2(7)");

  // 63-point domain: nonisotropic projective points.
  Domain pts63;
  pts63.field = &f;
  {
    Vec v(3, 0);
    for (uint32_t a = 0; a < f.size(); ++a)
      for (uint32_t b = 0; b < f.size(); ++b)
        for (uint32_t c = 0; c < f.size(); ++c) {
          v = {a, b, c};
          if (a == 0 && b == 0 && c == 0) continue;
          Vec p = projective_normalize(f, v);
          if (p != v) continue;
          if (hermitian(f, q, p, p) != 0) pts63.add(p);
        }
  }
  if (pts63.size() != 63) throw Error("expected 63 nonisotropic points");

  // 100-point images of the SU generators: 0 = star, 1..36 cosets, 37..99 points.
  auto hundred_perm = [&](const Matrix& m) {
    std::vector<uint16_t> img(kVertices);
    img[0] = 0;
    for (unsigned c = 0; c < 36; ++c) {
      const Matrix prod = m * u33[coset_rep[c]];
      img[1 + c] = static_cast<uint16_t>(1 + elem_coset[elem_index.at(codec.key(GroupElement(prod)))]);
    }
    for (unsigned p = 0; p < 63; ++p)
      img[37 + p] =
          static_cast<uint16_t>(37 + pts63.at(projective_normalize(f, m.apply(pts63.points[p]))));
    return Permutation(img);
  };
  std::vector<Permutation> u33_perms;
  for (const Matrix& m : su_gens) u33_perms.push_back(hundred_perm(m));

  // Orbit data for the wiring. Stab(coset 0) = L2(7); Stab(point q0) has
  // order 96; both act on the relevant blocks.
  const unsigned a0 = 1 + elem_coset[elem_index.at(codec.key(GroupElement(u33[0])))];
  Permutation pa = hundred_perm(u33[found->first]);
  Permutation pb = hundred_perm(u33[found->second]);
  auto l_orbits_on = [&](unsigned lo, unsigned hi) {
    return orbits_under(hi - lo, [&](unsigned i) {
      return std::vector<unsigned>{static_cast<unsigned>(pa(lo + i)) - lo,
                                   static_cast<unsigned>(pb(lo + i)) - lo};
    });
  };
  auto orbitsA = l_orbits_on(1, 37);   // L2(7) on the 36 cosets
  auto orbitsB = l_orbits_on(37, 100); // L2(7) on the 63 points

  // Stabilizer of 63-point 0 inside U3(3), acting on the 63 block.
  std::vector<Matrix> stab_q0;
  for (const Matrix& m : u33)
    if (projective_normalize(f, m.apply(pts63.points[0])) == pts63.points[0]) stab_q0.push_back(m);
  auto stab_orbits = orbits_under(63, [&](unsigned i) {
    std::vector<unsigned> out;
    for (const Matrix& m : stab_q0)
      out.push_back(pts63.at(projective_normalize(f, m.apply(pts63.points[i]))));
    return out;
  });

  auto report_orbits = [](const char* tag, const std::vector<std::vector<unsigned>>& os) {
    std::string sizes;
    for (const auto& o : os) sizes += (sizes.empty() ? "" : "+") + std::to_string(o.size());
    std::fprintf(stderr, "J2: %s orbit sizes %s\n", tag, sizes.c_str());
  };
  report_orbits("L2(7) on 36", orbitsA);
  report_orbits("L2(7) on 63", orbitsB);
  report_orbits("Stab(q0) on 63", stab_orbits);

  // Candidate unions: inside A pick the L-orbit union of size 14 (valency from
  // lambda), A->B unions of size 21, B-internal unions of size 24.
  auto unions_of = [](const std::vector<std::vector<unsigned>>& orbits, unsigned want,
                      bool skip_singleton_zero) {
    std::vector<std::vector<unsigned>> usable;
    for (const auto& o : orbits) {
      if (skip_singleton_zero && o.size() == 1 && o[0] == 0) continue;
      usable.push_back(o);
    }
    std::vector<std::vector<unsigned>> result;  // each = merged point list
    const size_t n = usable.size();
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
      unsigned total = 0;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) total += static_cast<unsigned>(usable[i].size());
      if (total != want) continue;
      std::vector<unsigned> merged;
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) merged.insert(merged.end(), usable[i].begin(), usable[i].end());
      result.push_back(std::move(merged));
    }
    return result;
  };

  auto candA = unions_of(orbitsA, 14, true);
  auto candAB = unions_of(orbitsB, 21, false);
  auto candB = unions_of(stab_orbits, 24, true);
  std::fprintf(stderr, "J2: wiring candidates %zu x %zu x %zu\n", candA.size(), candAB.size(),
               candB.size());

  std::optional<Graph> hall_janko;
  for (const auto& ua : candA) {
    for (const auto& uab : candAB) {
      for (const auto& ub : candB) {
        Graph g;
        std::vector<std::pair<unsigned, unsigned>> seeds;
        for (unsigned c = 0; c < 36; ++c) seeds.emplace_back(0, 1 + c);  // star ~ all of A
        for (unsigned x : ua) seeds.emplace_back(a0, 1 + x);
        for (unsigned x : uab) seeds.emplace_back(a0, 37 + x);
        for (unsigned x : ub) seeds.emplace_back(37 + 0, 37 + x);
        close_pairs(g, u33_perms, seeds);
        if (g.is_srg_100_36_14_12()) {
          hall_janko = std::move(g);
          break;
        }
      }
      if (hall_janko) break;
    }
    if (hall_janko) break;
  }
  if (!hall_janko) throw Error("no orbital wiring yields srg(100,36,14,12)");
  std::fprintf(stderr, "J2: srg(100,36,14,12) verified\n");

  // One extra automorphism moving the star gives a transitive overgroup.
  AutoSearch search(*hall_janko);
  std::optional<Permutation> extra;
  for (unsigned target = 1; target < kVertices && !extra; ++target) extra = search.find(target);
  if (!extra) throw Error("no graph automorphism moving the star was found");

  std::vector<Permutation> gens = u33_perms;
  gens.push_back(*extra);
  Bsgs chain(gens);
  std::fprintf(stderr, "J2: <U3(3), extra> has order %llu\n",
               static_cast<unsigned long long>(chain.order()));

  if (chain.order() == 2 * 604800ull) {
    gens = derived_subgroup(gens);
  } else if (chain.order() != 604800ull) {
    throw Error("automorphism closure is not J2 or its extension");
  }
  return make_fixture(
      "J2", gens, 604800, true,
      "the Hall-Janko group acting on the 100 vertices of the rank-3 graph srg(100,36,14,12) "
      "built over the U3(3) point stabilizer (1 + 36 cosets of L2(7) + 63 nonisotropic points); "
      "order 604800; element orders enumerated exhaustively through the stabilizer chain "
      "(cross-checked against the ATLAS of Finite Groups)");
}

}  // namespace fg
