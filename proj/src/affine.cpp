#include "pg/affine.hpp"

namespace pg {

Affine::Affine(std::vector<uint32_t> translation, Matrix linear)
    : t_(std::move(translation)), a_(std::move(linear)) {
  if (t_.size() != a_.dim())
    throw IncompatibleGenerators("translation length does not match matrix dimension");
  for (uint32_t v : t_)
    if (v >= a_.field().size()) throw IncompatibleGenerators("translation entry outside field");
}

Affine Affine::identity(const FiniteField& field, unsigned d) {
  return Affine(std::vector<uint32_t>(d, 0), Matrix::identity(field, d));
}

Affine Affine::operator*(const Affine& rhs) const {
  const FiniteField& f = a_.field();
  if (&f != &rhs.a_.field() || a_.dim() != rhs.a_.dim())
    throw IncompatibleGenerators("affine operands are incompatible");
  std::vector<uint32_t> t = a_.apply(rhs.t_);
  for (unsigned i = 0; i < t.size(); ++i) t[i] = f.add(t_[i], t[i]);
  return Affine(std::move(t), a_ * rhs.a_);
}

Affine Affine::inverse() const {
  const FiniteField& f = a_.field();
  Matrix ainv = a_.inverse();
  std::vector<uint32_t> t = ainv.apply(t_);
  for (uint32_t& v : t) v = f.neg(v);
  return Affine(std::move(t), std::move(ainv));
}

bool Affine::is_identity() const {
  for (uint32_t v : t_)
    if (v != 0) return false;
  return a_.is_identity();
}

uint64_t Affine::order() const {
  Affine acc = *this;
  uint64_t n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
    if (n > (1ull << 32)) throw Error("affine order exceeds sanity bound");
  }
  return n;
}

}  // namespace pg
