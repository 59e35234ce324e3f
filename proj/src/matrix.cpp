#include "pg/matrix.hpp"

namespace pg {

Matrix::Matrix(const FiniteField& field, unsigned n, std::vector<uint32_t> entries)
    : field_(&field), n_(n), e_(std::move(entries)) {
  if (e_.size() != static_cast<size_t>(n) * n)
    throw IncompatibleGenerators("matrix entry count does not match dimension");
  for (uint32_t v : e_)
    if (v >= field.size()) throw IncompatibleGenerators("matrix entry outside field");
}

Matrix Matrix::from_ints(const FiniteField& field, unsigned n,
                         const std::vector<long long>& entries) {
  std::vector<uint32_t> e(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) e[i] = field.from_int(entries[i]);
  return Matrix(field, n, std::move(e));
}

Matrix Matrix::identity(const FiniteField& field, unsigned n) {
  std::vector<uint32_t> e(static_cast<size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i) e[i * n + i] = field.one();
  return Matrix(field, n, std::move(e));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field_ || n_ != rhs.n_)
    throw IncompatibleGenerators("matrix operands are incompatible");
  const FiniteField& f = *field_;
  std::vector<uint32_t> out(static_cast<size_t>(n_) * n_, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      uint32_t a = e_[i * n_ + k];
      if (a == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        uint32_t b = rhs.e_[k * n_ + j];
        if (b == 0) continue;
        uint32_t& c = out[i * n_ + j];
        c = f.add(c, f.mul(a, b));
      }
    }
  return Matrix(f, n_, std::move(out));
}

// Gauss-Jordan over the field; dimensions are tiny so no pivot strategy needed
// beyond finding a nonzero entry.
Matrix Matrix::inverse() const {
  const FiniteField& f = *field_;
  std::vector<uint32_t> a = e_;
  Matrix id = identity(f, n_);
  std::vector<uint32_t> b = id.e_;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) throw Error("matrix is singular");
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(a[pivot * n_ + j], a[col * n_ + j]);
        std::swap(b[pivot * n_ + j], b[col * n_ + j]);
      }
    }
    uint32_t piv_inv = f.inv(a[col * n_ + col]);
    for (unsigned j = 0; j < n_; ++j) {
      a[col * n_ + j] = f.mul(a[col * n_ + j], piv_inv);
      b[col * n_ + j] = f.mul(b[col * n_ + j], piv_inv);
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == col) continue;
      uint32_t factor = a[r * n_ + col];
      if (factor == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        a[r * n_ + j] = f.sub(a[r * n_ + j], f.mul(factor, a[col * n_ + j]));
        b[r * n_ + j] = f.sub(b[r * n_ + j], f.mul(factor, b[col * n_ + j]));
      }
    }
  }
  return Matrix(f, n_, std::move(b));
}

uint32_t Matrix::det() const {
  const FiniteField& f = *field_;
  std::vector<uint32_t> a = e_;
  uint32_t det = f.one();
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) std::swap(a[pivot * n_ + j], a[col * n_ + j]);
      det = f.neg(det);
    }
    det = f.mul(det, a[col * n_ + col]);
    uint32_t piv_inv = f.inv(a[col * n_ + col]);
    for (unsigned r = col + 1; r < n_; ++r) {
      uint32_t factor = f.mul(a[r * n_ + col], piv_inv);
      if (factor == 0) continue;
      for (unsigned j = col; j < n_; ++j)
        a[r * n_ + j] = f.sub(a[r * n_ + j], f.mul(factor, a[col * n_ + j]));
    }
  }
  return det;
}

bool Matrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (e_[i * n_ + j] != (i == j ? field_->one() : 0)) return false;
  return true;
}

uint64_t Matrix::order() const {
  Matrix acc = *this;
  uint64_t n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
    if (n > (1ull << 32)) throw Error("matrix order exceeds sanity bound");
  }
  return n;
}

std::vector<uint32_t> Matrix::apply(const std::vector<uint32_t>& v) const {
  const FiniteField& f = *field_;
  std::vector<uint32_t> out(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    uint32_t acc = 0;
    for (unsigned j = 0; j < n_; ++j) acc = f.add(acc, f.mul(e_[i * n_ + j], v[j]));
    out[i] = acc;
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (unsigned i = 0; i < n_; ++i) {
    out += i ? "; " : "";
    for (unsigned j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += field_->to_string(e_[i * n_ + j]);
    }
  }
  return out + "]";
}

}  // namespace pg
