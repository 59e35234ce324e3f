#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

/// GF(p^k) with a deterministic modulus: the lexicographically smallest monic
/// irreducible polynomial of degree k over GF(p), coefficients compared
/// low-degree-first. Elements are packed indices c0 + c1*p + ... + c_{k-1}*p^{k-1};
/// multiplication runs on log/exp tables built once at construction.
///
/// Fields are interned: FiniteField::get(p, k) returns the same object for the
/// same parameters, so element compatibility is a pointer comparison. All state
/// is immutable after construction.
class FiniteField {
public:
  /// Largest supported field size; sqrt and generator search scan tables of
  /// this length, so the cap keeps construction in milliseconds.
  static constexpr uint64_t kMaxSize = 1u << 20;

  static const FiniteField& get(unsigned p, unsigned k);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  uint32_t size() const { return size_; }

  /// Monic modulus, length k+1, low-degree-first, modulus[k] == 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return one_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero();
    return exp_[size_ - 1 - log_[a]];
  }
  uint32_t div(uint32_t a, uint32_t b) const {
    if (b == 0) throw DivisionByZero();
    if (a == 0) return 0;
    return exp_[log_[a] + size_ - 1 - log_[b]];
  }
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Embeds an integer via reduction mod p (constant polynomial).
  uint32_t from_int(long long v) const;

  /// Square root, lex-smaller of the two roots when both exist.
  std::optional<uint32_t> sqrt(uint32_t a) const;

  /// Least n >= 1 with a^n = 1; throws ZeroElement on a = 0.
  uint64_t mult_order(uint32_t a) const;

  /// Deterministic primitive element (lex-smallest generator of the unit group).
  uint32_t generator() const { return generator_; }

  std::vector<unsigned> coeffs(uint32_t a) const;
  uint32_t pack(const std::vector<unsigned>& coeffs) const;

  /// Low-degree-first lexicographic comparison of coefficient vectors.
  bool lex_less(uint32_t a, uint32_t b) const;

  /// Polynomial rendering, e.g. "3*x+4"; bare residue for prime fields.
  std::string to_string(uint32_t a) const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

private:
  FiniteField(unsigned p, unsigned k);

  unsigned p_;
  unsigned k_;
  uint32_t size_;
  uint32_t one_;
  uint32_t generator_;
  std::vector<unsigned> modulus_;
  std::vector<uint32_t> exp_;   // length 2*(size-1), exp_[i] = g^i
  std::vector<uint32_t> log_;   // length size, log_[exp_[i]] = i, log_[0] unused
};

/// Value-semantic element carrying its field; the thin public layer over the
/// packed-index arithmetic above. Mixing fields throws MixedFields.
class FieldElement {
public:
  FieldElement() : field_(nullptr), idx_(0) {}
  FieldElement(const FiniteField& field, uint32_t idx) : field_(&field), idx_(idx) {}

  const FiniteField& field() const { return *field_; }
  uint32_t index() const { return idx_; }
  std::vector<unsigned> coeffs() const { return field_->coeffs(idx_); }
  bool is_zero() const { return idx_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check(a, b);
    return {*a.field_, a.field_->add(a.idx_, b.idx_)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check(a, b);
    return {*a.field_, a.field_->sub(a.idx_, b.idx_)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check(a, b);
    return {*a.field_, a.field_->mul(a.idx_, b.idx_)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    check(a, b);
    return {*a.field_, a.field_->div(a.idx_, b.idx_)};
  }
  FieldElement operator-() const { return {*field_, field_->neg(idx_)}; }

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && idx_ == o.idx_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const { return field_->to_string(idx_); }

private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw MixedFields();
  }
  const FiniteField* field_;
  uint32_t idx_;
};

}  // namespace pg
