#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "pg/bsgs.hpp"
#include "pg/enumerate.hpp"
#include "pg/fixture.hpp"
#include "pg/spectrum.hpp"

namespace pg {

/// Canonical group descriptor. Grammar:
///   "S(n)" | "A(n)" | "PSL(2,q)" | "PGL(2,q)" | "SL(2,5)"
///   | "frobenius(m)" | "fixture:NAME" | "perm:FILE"
/// Parsing is strict and round-trips to the identical string.
struct GroupSpec {
  enum class Type { symmetric, alternating, psl2, pgl2, sl25, frobenius, fixture, perm_file };

  Type type;
  unsigned n = 0;     // S(n), A(n), frobenius(m)
  unsigned q = 0;     // PSL/PGL field size
  std::string name;   // fixture name or perm file path

  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
};

/// Outcome of identifying the complement C = <x, y, z> over a field:
/// the order/center/simple-quotient triple that pins SL(2,5), plus the
/// computed order of the y generator (the presentation claims y^5 = 1;
/// the report records what the matrices actually do).
struct ComplementEvidence {
  uint64_t order = 0;
  uint64_t center_order = 0;
  uint64_t involution_count = 0;
  uint64_t quotient_order = 0;
  bool quotient_simple = false;
  uint64_t y_order = 0;
  bool y_fifth_power_is_identity = false;
  std::set<uint64_t> spectrum;
  bool identified = false;
};

/// C = <x, y, z> with x = [[-1,1],[-1,0]], y = [[0,a],[a,(b+1)/2]], z = -I,
/// where a^2 = -1 and b^2 = 5 in the field. Requires characteristic 7 and
/// both square roots present (even extension degree); otherwise throws
/// FieldLacksRoots. Throws IdentificationFailed when the evidence checks
/// do not pin SL(2,5).
EnumeratedGroup build_complement(const FiniteField& field, ComplementEvidence* evidence = nullptr);

struct FixedPointFreeCertificate {
  bool fixed_point_free = false;
  uint64_t checked_elements = 0;
};

struct FrobeniusWitness {
  uint64_t kernel_order = 0;
  uint64_t complement_order = 0;
  FixedPointFreeCertificate fpf;
  ComplementEvidence complement;
};

/// The kernel-by-complement construction over GF(7^{2m}). Enumerates the full
/// affine group when its order fits the budget and cross-checks the spectrum
/// decomposition {1,7} u pi_e(C); beyond the budget the spectrum comes from
/// the decomposition alone, which the fixed-point-free certificate makes exact.
struct FrobeniusGroup {
  unsigned m = 0;
  uint64_t order = 0;
  bool enumerated = false;
  FrobeniusWitness witness;
  Spectrum spectrum;
  std::optional<EnumeratedGroup> group;
};

FrobeniusGroup build_frobenius(unsigned m, uint64_t budget = kDefaultBudget);

struct CatalogOptions {
  uint64_t budget = kDefaultBudget;
  std::string fixtures_dir = "fixtures";
};

/// A catalog group in whichever forms its size allows: a BSGS for permutation
/// groups, the materialized element set when within budget, fixture data when
/// the group ships as literature generators.
struct CatalogEntry {
  GroupSpec spec;
  uint64_t order = 0;
  std::optional<EnumeratedGroup> group;
  std::optional<Bsgs> bsgs;
  std::optional<SpectrumFixture> fixture;
  std::optional<FrobeniusGroup> frobenius;
};

CatalogEntry catalog(const GroupSpec& spec, const CatalogOptions& options = {});

}  // namespace pg
