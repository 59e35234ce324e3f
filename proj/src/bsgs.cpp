#include "pg/bsgs.hpp"

#include <algorithm>

namespace pg {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  if (n <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

Bsgs::Bsgs(std::vector<Permutation> generators) {
  if (generators.empty()) throw IncompatibleGenerators("generator list is empty");
  degree_ = generators[0].degree();
  for (const Permutation& g : generators)
    if (g.degree() != degree_) throw IncompatibleGenerators("permutation degrees differ");
  std::sort(generators.begin(), generators.end());
  for (Permutation& g : generators) add_element(std::move(g));
}

void Bsgs::add_element(Permutation g) {
  auto [res, l] = sift(std::move(g), 0);
  if (res.is_identity()) return;
  insert_strong(std::move(res), l);
}

// A strong generator stuck at level l fixes base points 0..l-1 and moves
// base point l outside its current orbit; it participates in the orbits of
// every level <= l, so all of them get re-verified.
void Bsgs::insert_strong(Permutation h, size_t l) {
  if (l == levels_.size()) {
    unsigned moved = 0;
    while (h(moved) == moved) ++moved;
    levels_.push_back(Level{moved, {}, {}, {}, {}});
  }
  levels_[l].gens.push_back(std::move(h));
  for (size_t i = l + 1; i-- > 0;) verify_level(i);
}

std::vector<const Permutation*> Bsgs::strong_at(size_t l) const {
  std::vector<const Permutation*> out;
  for (size_t j = l; j < levels_.size(); ++j)
    for (const Permutation& g : levels_[j].gens) out.push_back(&g);
  return out;
}

// Schreier generators of level l must sift to the identity through the rest
// of the chain; residues become strong generators at deeper levels (their
// fixed prefix is at least l+1), after which this level restarts.
void Bsgs::verify_level(size_t l) {
  rebuild_orbit(l);
  bool restart = true;
  while (restart) {
    restart = false;
    // levels_ can grow inside the loop (recursion appends levels), so every
    // access re-indexes instead of holding references.
    for (size_t pos = 0; !restart && pos < levels_[l].orbit.size(); ++pos) {
      const size_t gen_count = strong_at(l).size();
      for (size_t si = 0; si < gen_count; ++si) {
        Permutation s = *strong_at(l)[si];
        unsigned point = levels_[l].orbit[pos];
        unsigned beta = s(point);
        Permutation schreier = levels_[l].transversal[levels_[l].orbit_pos[beta]].inverse() * s *
                               levels_[l].transversal[pos];
        if (schreier.is_identity()) continue;
        auto [res, m] = sift(std::move(schreier), l + 1);
        if (res.is_identity()) continue;
        if (m == levels_.size()) {
          unsigned moved = 0;
          while (res(moved) == moved) ++moved;
          levels_.push_back(Level{moved, {}, {}, {}, {}});
        }
        levels_[m].gens.push_back(std::move(res));
        for (size_t i = m; i > l; --i) verify_level(i);
        rebuild_orbit(l);
        restart = true;
        break;
      }
    }
  }
}

void Bsgs::rebuild_orbit(size_t l) {
  Level& lev = levels_[l];
  std::vector<const Permutation*> gens = strong_at(l);
  lev.orbit.clear();
  lev.orbit_pos.assign(degree_, -1);
  lev.transversal.clear();
  lev.orbit.push_back(lev.base_point);
  lev.orbit_pos[lev.base_point] = 0;
  lev.transversal.push_back(Permutation::identity(degree_));
  for (size_t head = 0; head < lev.orbit.size(); ++head) {
    for (const Permutation* s : gens) {
      unsigned beta = (*s)(lev.orbit[head]);
      if (lev.orbit_pos[beta] < 0) {
        lev.orbit_pos[beta] = static_cast<int32_t>(lev.orbit.size());
        lev.orbit.push_back(beta);
        lev.transversal.push_back(*s * lev.transversal[head]);
      }
    }
  }
}

std::pair<Permutation, size_t> Bsgs::sift(Permutation g, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    const Level& lev = levels_[l];
    unsigned beta = g(lev.base_point);
    if (lev.orbit_pos[beta] < 0) return {std::move(g), l};
    g = lev.transversal[lev.orbit_pos[beta]].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

uint64_t Bsgs::order() const {
  uint64_t n = 1;
  for (const Level& lev : levels_) n *= lev.orbit.size();
  return n;
}

bool Bsgs::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [res, l] = sift(g, 0);
  return l == levels_.size() && res.is_identity();
}

Permutation Bsgs::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (const Level& lev : levels_) {
    uint64_t pos = uniform_below(rng, lev.transversal.size());
    g = g * lev.transversal[pos];
  }
  return g;
}

std::vector<unsigned> Bsgs::base() const {
  std::vector<unsigned> b;
  for (const Level& lev : levels_) b.push_back(lev.base_point);
  return b;
}

}  // namespace pg
