#pragma once

// Test-only oracles, deliberately independent of the library's arithmetic:
// raw integer polynomial arithmetic mod (7, x^2+1) for GF(49), next_permutation
// scans for symmetric-group spectra, and 2x2 integer matrices mod 5 for SL(2,5).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// --- GF(49) as pairs (a + b x) with x^2 = -1, coefficients mod 7 ------------

struct G49 {
  int a = 0, b = 0;
  bool operator==(const G49&) const = default;
};

inline G49 g49_add(G49 u, G49 v) { return {(u.a + v.a) % 7, (u.b + v.b) % 7}; }

inline G49 g49_mul(G49 u, G49 v) {
  // (a+bx)(c+dx) = ac - bd + (ad+bc) x
  int re = (u.a * v.a + 7 * 7 - u.b * v.b) % 7;
  int im = (u.a * v.b + u.b * v.a) % 7;
  return {re % 7, im % 7};
}

using Mat49 = std::array<G49, 4>;  // row-major 2x2

inline Mat49 m49_mul(const Mat49& x, const Mat49& y) {
  Mat49 r;
  r[0] = g49_add(g49_mul(x[0], y[0]), g49_mul(x[1], y[2]));
  r[1] = g49_add(g49_mul(x[0], y[1]), g49_mul(x[1], y[3]));
  r[2] = g49_add(g49_mul(x[2], y[0]), g49_mul(x[3], y[2]));
  r[3] = g49_add(g49_mul(x[2], y[1]), g49_mul(x[3], y[3]));
  return r;
}

inline bool m49_is_identity(const Mat49& m) {
  return m[0] == G49{1, 0} && m[1] == G49{0, 0} && m[2] == G49{0, 0} && m[3] == G49{1, 0};
}

inline uint64_t m49_order(const Mat49& m) {
  Mat49 acc = m;
  uint64_t n = 1;
  while (!m49_is_identity(acc)) {
    acc = m49_mul(acc, m);
    ++n;
  }
  return n;
}

// --- symmetric group spectra via next_permutation ---------------------------

inline uint64_t image_array_order(const std::vector<int>& img) {
  std::vector<bool> seen(img.size(), false);
  uint64_t ord = 1;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(img[j]);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline std::set<uint64_t> symmetric_spectrum(unsigned n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::set<uint64_t> orders;
  do {
    orders.insert(image_array_order(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return orders;
}

inline std::set<uint64_t> maximal_under_divisibility(const std::set<uint64_t>& orders) {
  std::set<uint64_t> out;
  for (uint64_t n : orders) {
    bool maximal = true;
    for (uint64_t m : orders)
      if (m != n && m % n == 0) maximal = false;
    if (maximal) out.insert(n);
  }
  return out;
}

// --- SL(2,5) as integer matrices mod 5 ---------------------------------------

inline std::set<uint64_t> sl25_spectrum() {
  auto mul = [](std::array<int, 4> x, std::array<int, 4> y) {
    return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                              (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
  };
  std::set<uint64_t> orders;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          if (((a * d - b * c) % 5 + 5) % 5 != 1) continue;
          std::array<int, 4> m{a, b, c, d};
          std::array<int, 4> acc = m;
          uint64_t n = 1;
          while (!(acc[0] == 1 && acc[1] == 0 && acc[2] == 0 && acc[3] == 1)) {
            acc = mul(acc, m);
            ++n;
          }
          orders.insert(n);
        }
  return orders;
}

}  // namespace oracle
