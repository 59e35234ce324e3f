#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pg/finite_field.hpp"

namespace pg {

/// Square invertible matrix over a finite field; entries are packed field
/// indices, row-major. Dimensions stay tiny here (n <= 4), so arithmetic is
/// straightforward schoolbook over the field's log/exp tables.
class Matrix {
public:
  Matrix(const FiniteField& field, unsigned n, std::vector<uint32_t> entries);

  /// Builds from integer literals, each reduced mod p (prime fields and
  /// integer-valued entries of extension-field matrices).
  static Matrix from_ints(const FiniteField& field, unsigned n,
                          const std::vector<long long>& entries);
  static Matrix identity(const FiniteField& field, unsigned n);

  const FiniteField& field() const { return *field_; }
  unsigned dim() const { return n_; }
  uint32_t at(unsigned r, unsigned c) const { return e_[r * n_ + c]; }
  const std::vector<uint32_t>& entries() const { return e_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix inverse() const;
  uint32_t det() const;
  bool is_identity() const;
  uint64_t order() const;  // repeated multiplication until identity

  /// Matrix-vector product on packed field indices.
  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

  bool operator==(const Matrix& o) const { return field_ == o.field_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  const FiniteField* field_;
  unsigned n_;
  std::vector<uint32_t> e_;
};

}  // namespace pg
