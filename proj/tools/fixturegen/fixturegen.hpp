#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pg/bsgs.hpp"
#include "pg/fixture.hpp"
#include "pg/finite_field.hpp"
#include "pg/matrix.hpp"

namespace fg {

using Vec = std::vector<uint32_t>;  // packed field indices

/// A finite point domain (projective points, vectors, isotropic lines...)
/// with a deterministic index.
struct Domain {
  const pg::FiniteField* field = nullptr;
  std::vector<Vec> points;
  std::map<Vec, unsigned> index;

  unsigned add(const Vec& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    unsigned id = static_cast<unsigned>(points.size());
    index.emplace(p, id);
    points.push_back(p);
    return id;
  }
  unsigned at(const Vec& p) const { return index.at(p); }
  unsigned size() const { return static_cast<unsigned>(points.size()); }
};

/// Permutation induced on a domain by a point map.
pg::Permutation induced(const Domain& dom, const std::function<Vec(const Vec&)>& map);

/// First nonzero coordinate scaled to one.
Vec projective_normalize(const pg::FiniteField& f, Vec v);

/// Canonical reduced row echelon form of an r x n matrix (flattened rows).
Vec rref(const pg::FiniteField& f, Vec rows, unsigned r, unsigned n);

/// Hermitian form sum_i x_i * sigma(y_{n-1-i}) with sigma = q-power Frobenius
/// over GF(q^2).
uint32_t hermitian(const pg::FiniteField& f, unsigned q, const Vec& x, const Vec& y);

/// Exact element-order set through the stabilizer chain (no materialization).
std::set<uint64_t> exact_spectrum(const pg::Bsgs& group);
std::set<uint64_t> maximal_under_divisibility(const std::set<uint64_t>& orders);

/// Shrinks a verified generating set: smallest prefix-ish subset that still
/// generates the full order.
std::vector<pg::Permutation> reduce_generators(const std::vector<pg::Permutation>& gens,
                                               uint64_t order);

pg::FixtureFile make_fixture(const std::string& name, std::vector<pg::Permutation> gens,
                             uint64_t expected_order, bool with_mu, const std::string& source);

// Classical-group fixture builders (classical_groups.cpp).
pg::FixtureFile build_u3_fixture(unsigned q);                // PSU(3,q) on isotropic points
pg::FixtureFile build_u3_5_ext_fixture();                    // U3(5).2 (field automorphism)
std::vector<pg::FixtureFile> build_u4_3_ext_fixtures();      // U4(3).2 candidates, selected one first
pg::FixtureFile build_s6_2_fixture();                        // Sp(6,2) on nonzero vectors
pg::FixtureFile build_o8_plus_2_fixture(bool with_mu);       // Omega8+(2) on singular points
pg::FixtureFile build_s4_7_fixture();                        // PSp(4,7) on projective points
pg::FixtureFile build_l3_4_fixture();                        // PSL(3,4) on PG(2,4)
pg::FixtureFile build_psl2_fixture(unsigned q, const std::string& name);

// Hall-Janko group from the U3(3) rank-3 geometry (hall_janko.cpp).
pg::FixtureFile build_j2_fixture();

}  // namespace fg
