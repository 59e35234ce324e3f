#pragma once

#include <cstdint>
#include <vector>

#include "pg/matrix.hpp"

namespace pg {

/// Affine map x -> A x + t on F^d. Composition follows
/// (t1, A1) * (t2, A2) = (t1 + A1 t2, A1 A2); identity is (0, I).
class Affine {
public:
  Affine(std::vector<uint32_t> translation, Matrix linear);
  static Affine identity(const FiniteField& field, unsigned d);

  const std::vector<uint32_t>& translation() const { return t_; }
  const Matrix& linear() const { return a_; }
  const FiniteField& field() const { return a_.field(); }
  unsigned dim() const { return a_.dim(); }

  Affine operator*(const Affine& rhs) const;
  Affine inverse() const;  // (-A^{-1} t, A^{-1})
  bool is_identity() const;
  uint64_t order() const;

  bool operator==(const Affine& o) const { return t_ == o.t_ && a_ == o.a_; }
  bool operator!=(const Affine& o) const { return !(*this == o); }

private:
  std::vector<uint32_t> t_;
  Matrix a_;
};

}  // namespace pg
