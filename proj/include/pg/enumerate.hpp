#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pg/group_element.hpp"

namespace pg {

inline constexpr uint64_t kDefaultBudget = 2'000'000;

/// Append-only set of fixed-stride byte keys: one contiguous arena plus an
/// open-addressed index. This is the dedup structure behind BFS closure, where
/// millions of short keys make per-element heap nodes too expensive.
class KeyArena {
public:
  explicit KeyArena(size_t stride);

  size_t size() const { return count_; }
  size_t stride() const { return stride_; }
  const uint8_t* at(size_t i) const { return arena_.data() + i * stride_; }

  /// Returns (index, inserted).
  std::pair<uint32_t, bool> insert(const uint8_t* key);
  std::optional<uint32_t> find(const uint8_t* key) const;

private:
  void grow();
  uint64_t hash(const uint8_t* key) const;

  size_t stride_;
  size_t count_ = 0;
  std::vector<uint8_t> arena_;
  std::vector<uint32_t> table_;  // 0xffffffff = empty
  size_t mask_ = 0;
};

/// A finite group materialized as its canonical element set (BFS order from
/// the identity, right-multiplying by the sorted generator list) plus the
/// generators. Storage is the packed key arena; elements decode on demand.
class EnumeratedGroup {
public:
  EnumeratedGroup(ElementKind kind, ElementCodec codec, KeyArena elements,
                  std::vector<GroupElement> generators);

  ElementKind kind() const { return kind_; }
  uint64_t order() const { return elements_->size(); }
  GroupElement element(size_t i) const { return codec_.decode(elements_->at(i)); }
  const std::vector<GroupElement>& generators() const { return generators_; }
  bool contains(const GroupElement& g) const;
  const ElementCodec& codec() const { return codec_; }

private:
  ElementKind kind_;
  ElementCodec codec_;
  std::shared_ptr<const KeyArena> elements_;
  std::vector<GroupElement> generators_;
};

/// Breadth-first closure of the generators under right multiplication.
/// Deterministic: generators are sorted by canonical key first, the identity
/// sits at index 0, and insertion order is the BFS discovery order. Throws
/// BudgetExceeded once more than `budget` elements have been found.
EnumeratedGroup generate(std::vector<GroupElement> generators, uint64_t budget = kDefaultBudget);

/// Affine group { (t, A) : t in F^d, A in complement } for a matrix-kind
/// complement acting on F^d; order is |F|^d * |complement|.
EnumeratedGroup semidirect(const FiniteField& field, unsigned d,
                           const EnumeratedGroup& complement,
                           uint64_t budget = kDefaultBudget);

/// True iff no non-identity complement matrix fixes a nonzero vector,
/// i.e. det(A - I) != 0 for all non-identity A. On failure carries a
/// witness (A, v) with A v = v, v != 0.
struct FixedPointFreeResult {
  bool fixed_point_free;
  std::optional<std::pair<Matrix, std::vector<uint32_t>>> witness;
};
FixedPointFreeResult is_fixed_point_free(const EnumeratedGroup& complement);

}  // namespace pg
