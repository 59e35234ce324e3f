#include "pg/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace pg {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // low-degree-first, not normalized

// Remainder of a mod b over GF(p); b monic.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - 1 - db;
      for (size_t i = 0; i <= db; ++i) {
        unsigned sub = (lead * b[i]) % p;
        unsigned& c = a[shift + i];
        c = (c + p - sub) % p;
      }
    }
    a.pop_back();
  }
  a.resize(db, 0);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), mod, p);
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      uint64_t v = t;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

// Monic degree-k candidates in low-degree-first lexicographic order of
// (a0, a1, ..., a_{k-1}): a0 is the most significant position.
Poly find_modulus(unsigned p, unsigned k) {
  if (k == 1) return Poly{0, 1};  // x itself; arithmetic is plain mod p
  uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (uint64_t rank = 0; rank < count; ++rank) {
    Poly f(k + 1, 0);
    uint64_t v = rank;
    for (unsigned i = k; i-- > 0;) {  // last coefficient varies fastest
      f[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible modulus found");  // unreachable for prime p
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

const FiniteField& FiniteField::get(unsigned p, unsigned k) {
  static std::mutex mtx;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
  return *it->second;
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw NonPrimeCharacteristic(p);
  if (k < 1) throw DegreeOutOfRange("extension degree must be >= 1");
  uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxSize) throw DegreeOutOfRange("field size exceeds 2^20");
  }
  size_ = static_cast<uint32_t>(size);
  one_ = 1;
  modulus_ = find_modulus(p, k);

  // Packed index <-> coefficient polynomial, with idx = sum c_i p^i.
  auto to_poly = [&](uint32_t idx) {
    Poly c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  };
  auto to_idx = [&](const Poly& c) {
    uint32_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + c[i];
    return idx;
  };

  const uint64_t units = size_ - 1;
  const auto factors = prime_factors(units);

  // mult order of a packed index via raw polynomial arithmetic (tables not
  // built yet); used only to locate the generator.
  auto raw_pow = [&](uint32_t base, uint64_t e) {
    Poly result(k_, 0);
    result[0] = 1;
    Poly b = to_poly(base);
    while (e) {
      if (e & 1) result = poly_mulmod(result, b, modulus_, p_);
      b = poly_mulmod(b, b, modulus_, p_);
      e >>= 1;
    }
    return to_idx(result);
  };
  auto is_generator = [&](uint32_t a) {
    for (uint64_t q : factors)
      if (raw_pow(a, units / q) == one_) return false;
    return true;
  };

  // Scan candidates in lex order of coefficient vectors so the choice is
  // reproducible across builds.
  generator_ = 0;
  for (uint64_t rank = 0; rank < size_; ++rank) {
    Poly c(k_, 0);
    uint64_t v = rank;
    for (unsigned i = k_; i-- > 0;) {
      c[i] = static_cast<unsigned>(v % p_);
      v /= p_;
    }
    std::reverse(c.begin(), c.end());  // rank digits are (c0 .. c_{k-1}) big-endian
    uint32_t idx = to_idx(c);
    if (idx == 0) continue;
    if (is_generator(idx)) {
      generator_ = idx;
      break;
    }
  }

  exp_.resize(2 * units);
  log_.assign(size_, 0);
  Poly g = to_poly(generator_);
  Poly acc(k_, 0);
  acc[0] = 1;
  for (uint64_t i = 0; i < units; ++i) {
    uint32_t idx = to_idx(acc);
    exp_[i] = idx;
    exp_[i + units] = idx;
    log_[idx] = static_cast<uint32_t>(i);
    acc = poly_mulmod(acc, g, modulus_, p_);
  }
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  uint32_t out = 0, shift = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += ((da + db) % p_) * shift;
    shift *= p_;
  }
  return out;
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FiniteField::neg(uint32_t a) const {
  uint32_t out = 0, shift = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = a % p_;
    a /= p_;
    out += ((p_ - da) % p_) * shift;
    shift *= p_;
  }
  return out;
}

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? one_ : 0;
  uint64_t l = (static_cast<uint64_t>(log_[a]) * (e % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

uint32_t FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

std::optional<uint32_t> FiniteField::sqrt(uint32_t a) const {
  if (a == 0) return 0u;
  const uint64_t units = size_ - 1;
  if (p_ == 2) {
    // Squaring is a bijection in characteristic 2.
    return pow(a, size_ / 2);
  }
  uint32_t l = log_[a];
  if (l & 1) return std::nullopt;
  uint32_t r1 = exp_[l / 2];
  uint32_t r2 = exp_[l / 2 + units / 2];
  return lex_less(r1, r2) ? r1 : r2;
}

uint64_t FiniteField::mult_order(uint32_t a) const {
  if (a == 0) throw ZeroElement();
  return (size_ - 1) / std::gcd<uint64_t>(size_ - 1, log_[a]);
}

std::vector<unsigned> FiniteField::coeffs(uint32_t a) const {
  std::vector<unsigned> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t FiniteField::pack(const std::vector<unsigned>& coeffs) const {
  uint32_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
  return idx;
}

bool FiniteField::lex_less(uint32_t a, uint32_t b) const {
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = a % p_, db = b % p_;
    if (da != db) return da < db;
    a /= p_;
    b /= p_;
  }
  return false;
}

std::string FiniteField::to_string(uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace pg
