#include "pg/permutation.hpp"

#include <numeric>

namespace pg {

Permutation::Permutation(std::vector<uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint16_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw IncompatibleGenerators("image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw IncompatibleGenerators("permutation degrees differ");
  std::vector<uint16_t> img(degree());
  for (unsigned i = 0; i < degree(); ++i) img[i] = img_[rhs.img_[i]];
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<uint16_t> img(degree());
  for (unsigned i = 0; i < degree(); ++i) img[img_[i]] = static_cast<uint16_t>(i);
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  uint64_t ord = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += "(";
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace pg
