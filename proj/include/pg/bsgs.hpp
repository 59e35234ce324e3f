#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pg/permutation.hpp"

namespace pg {

/// Draws uniformly from [0, n) by rejection, so the stream depends only on the
/// mt19937_64 sequence and not on a library's distribution internals.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n);

/// Base and strong generating set for a permutation group, built with a
/// deterministic Schreier-Sims. Gives order, membership, exactly uniform
/// random elements (one transversal representative per level), and full
/// element iteration through the stabilizer chain.
class Bsgs {
public:
  explicit Bsgs(std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  uint64_t order() const;
  bool contains(const Permutation& g) const;
  Permutation random_element(std::mt19937_64& rng) const;
  std::vector<unsigned> base() const;

  /// Absorbs one more generator into the chain (no-op if already a member).
  void extend_with(Permutation g) { add_element(std::move(g)); }

  /// Visits every group element exactly once (product of one transversal
  /// representative per level). Order of visits is deterministic.
  template <typename F>
  void for_each_element(F&& fn) const {
    walk(0, Permutation::identity(degree_), fn);
  }

private:
  struct Level {
    unsigned base_point;
    std::vector<Permutation> gens;
    std::vector<unsigned> orbit;           // discovery order, orbit[0] = base_point
    std::vector<int32_t> orbit_pos;        // point -> index in orbit, -1 outside
    std::vector<Permutation> transversal;  // transversal[i](base_point) = orbit[i]
  };

  void add_element(Permutation g);
  void insert_strong(Permutation h, size_t l);
  void verify_level(size_t l);
  void rebuild_orbit(size_t l);
  std::vector<const Permutation*> strong_at(size_t l) const;
  std::pair<Permutation, size_t> sift(Permutation g, size_t from) const;

  template <typename F>
  void walk(size_t l, const Permutation& acc, F&& fn) const {
    if (l == levels_.size()) {
      fn(acc);
      return;
    }
    for (const Permutation& u : levels_[l].transversal) walk(l + 1, acc * u, fn);
  }

  unsigned degree_;
  std::vector<Level> levels_;
};

}  // namespace pg
