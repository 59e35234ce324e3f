#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pg/affine.hpp"
#include "pg/matrix.hpp"
#include "pg/permutation.hpp"

namespace pg {

enum class ElementKind { perm, matrix, affine };

using GroupElement = std::variant<Permutation, Matrix, Affine>;

ElementKind kind_of(const GroupElement& g);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse_of(const GroupElement& g);
bool is_identity(const GroupElement& g);

/// Least n >= 1 with g^n = id. Permutations use the lcm of cycle lengths;
/// matrices and affine maps multiply until the identity returns.
uint64_t element_order(const GroupElement& g);

/// True when a and b can be multiplied (same kind, degree, field, dimension).
bool compatible(const GroupElement& a, const GroupElement& b);

/// Canonical byte key: permutations serialize their image arrays, matrices
/// their row-major entries, affine maps (t, A) jointly. Field indices use the
/// smallest byte width that covers the field, so keys are compact and stable.
struct ElementCodec {
  explicit ElementCodec(const GroupElement& prototype);

  size_t stride() const { return stride_; }
  void encode(const GroupElement& g, uint8_t* out) const;
  GroupElement decode(const uint8_t* in) const;
  std::vector<uint8_t> key(const GroupElement& g) const;

private:
  ElementKind kind_;
  unsigned degree_ = 0;        // perm
  const FiniteField* field_ = nullptr;
  unsigned n_ = 0;             // matrix dim / affine dim
  unsigned value_width_ = 1;   // bytes per point or field index
  size_t stride_ = 0;
};

}  // namespace pg
