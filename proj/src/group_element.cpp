#include "pg/group_element.hpp"

namespace pg {

ElementKind kind_of(const GroupElement& g) {
  if (std::holds_alternative<Permutation>(g)) return ElementKind::perm;
  if (std::holds_alternative<Matrix>(g)) return ElementKind::matrix;
  return ElementKind::affine;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (kind_of(a) != kind_of(b))
    throw IncompatibleGenerators("cannot multiply elements of different kinds");
  return std::visit(
      [&](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        return x * std::get<T>(b);
      },
      a);
}

GroupElement inverse_of(const GroupElement& g) {
  return std::visit([](const auto& x) -> GroupElement { return x.inverse(); }, g);
}

bool is_identity(const GroupElement& g) {
  return std::visit([](const auto& x) { return x.is_identity(); }, g);
}

uint64_t element_order(const GroupElement& g) {
  return std::visit([](const auto& x) { return x.order(); }, g);
}

bool compatible(const GroupElement& a, const GroupElement& b) {
  if (kind_of(a) != kind_of(b)) return false;
  switch (kind_of(a)) {
    case ElementKind::perm:
      return std::get<Permutation>(a).degree() == std::get<Permutation>(b).degree();
    case ElementKind::matrix: {
      const auto& x = std::get<Matrix>(a);
      const auto& y = std::get<Matrix>(b);
      return &x.field() == &y.field() && x.dim() == y.dim();
    }
    case ElementKind::affine: {
      const auto& x = std::get<Affine>(a);
      const auto& y = std::get<Affine>(b);
      return &x.field() == &y.field() && x.dim() == y.dim();
    }
  }
  return false;
}

namespace {

unsigned width_for(uint32_t max_value) {
  if (max_value < (1u << 8)) return 1;
  if (max_value < (1u << 16)) return 2;
  return 4;
}

void put(uint8_t* out, size_t pos, unsigned width, uint32_t v) {
  for (unsigned b = 0; b < width; ++b) out[pos * width + b] = (v >> (8 * b)) & 0xff;
}

uint32_t take(const uint8_t* in, size_t pos, unsigned width) {
  uint32_t v = 0;
  for (unsigned b = 0; b < width; ++b) v |= static_cast<uint32_t>(in[pos * width + b]) << (8 * b);
  return v;
}

}  // namespace

ElementCodec::ElementCodec(const GroupElement& prototype) : kind_(kind_of(prototype)) {
  switch (kind_) {
    case ElementKind::perm: {
      degree_ = std::get<Permutation>(prototype).degree();
      value_width_ = width_for(degree_ ? degree_ - 1 : 0);
      stride_ = static_cast<size_t>(degree_) * value_width_;
      break;
    }
    case ElementKind::matrix: {
      const auto& m = std::get<Matrix>(prototype);
      field_ = &m.field();
      n_ = m.dim();
      value_width_ = width_for(field_->size() - 1);
      stride_ = static_cast<size_t>(n_) * n_ * value_width_;
      break;
    }
    case ElementKind::affine: {
      const auto& a = std::get<Affine>(prototype);
      field_ = &a.field();
      n_ = a.dim();
      value_width_ = width_for(field_->size() - 1);
      stride_ = (static_cast<size_t>(n_) + static_cast<size_t>(n_) * n_) * value_width_;
      break;
    }
  }
}

void ElementCodec::encode(const GroupElement& g, uint8_t* out) const {
  switch (kind_) {
    case ElementKind::perm: {
      const auto& p = std::get<Permutation>(g);
      for (unsigned i = 0; i < degree_; ++i) put(out, i, value_width_, p(i));
      break;
    }
    case ElementKind::matrix: {
      const auto& m = std::get<Matrix>(g);
      for (size_t i = 0; i < m.entries().size(); ++i) put(out, i, value_width_, m.entries()[i]);
      break;
    }
    case ElementKind::affine: {
      const auto& a = std::get<Affine>(g);
      for (unsigned i = 0; i < n_; ++i) put(out, i, value_width_, a.translation()[i]);
      for (size_t i = 0; i < a.linear().entries().size(); ++i)
        put(out, n_ + i, value_width_, a.linear().entries()[i]);
      break;
    }
  }
}

GroupElement ElementCodec::decode(const uint8_t* in) const {
  switch (kind_) {
    case ElementKind::perm: {
      std::vector<uint16_t> img(degree_);
      for (unsigned i = 0; i < degree_; ++i) img[i] = static_cast<uint16_t>(take(in, i, value_width_));
      return Permutation(std::move(img));
    }
    case ElementKind::matrix: {
      std::vector<uint32_t> e(static_cast<size_t>(n_) * n_);
      for (size_t i = 0; i < e.size(); ++i) e[i] = take(in, i, value_width_);
      return Matrix(*field_, n_, std::move(e));
    }
    case ElementKind::affine: {
      std::vector<uint32_t> t(n_);
      for (unsigned i = 0; i < n_; ++i) t[i] = take(in, i, value_width_);
      std::vector<uint32_t> e(static_cast<size_t>(n_) * n_);
      for (size_t i = 0; i < e.size(); ++i) e[i] = take(in, n_ + i, value_width_);
      return Affine(std::move(t), Matrix(*field_, n_, std::move(e)));
    }
  }
  throw Error("unreachable");
}

std::vector<uint8_t> ElementCodec::key(const GroupElement& g) const {
  std::vector<uint8_t> out(stride_);
  encode(g, out.data());
  return out;
}

}  // namespace pg
