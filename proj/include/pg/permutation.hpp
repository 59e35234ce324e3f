#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

/// Permutation of {0..n-1} as an image array; (a*b)(i) = a(b(i)).
class Permutation {
public:
  explicit Permutation(std::vector<uint16_t> images);
  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  uint16_t operator()(unsigned i) const { return img_[i]; }
  const std::vector<uint16_t>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string cycle_string() const;

private:
  struct Unchecked {};
  Permutation(std::vector<uint16_t> images, Unchecked) : img_(std::move(images)) {}
  std::vector<uint16_t> img_;
};

}  // namespace pg
