#include "pg/enumerate.hpp"

#include <algorithm>
#include <cstring>

namespace pg {

namespace {
constexpr uint32_t kEmpty = 0xffffffffu;
}

KeyArena::KeyArena(size_t stride) : stride_(stride) {
  table_.assign(1024, kEmpty);
  mask_ = table_.size() - 1;
}

uint64_t KeyArena::hash(const uint8_t* key) const {
  // FNV-1a; keys are short, collisions resolve by byte comparison.
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < stride_; ++i) {
    h ^= key[i];
    h *= 1099511628211ull;
  }
  return h;
}

void KeyArena::grow() {
  std::vector<uint32_t> bigger(table_.size() * 2, kEmpty);
  size_t mask = bigger.size() - 1;
  for (size_t i = 0; i < count_; ++i) {
    uint64_t h = hash(at(i)) & mask;
    while (bigger[h] != kEmpty) h = (h + 1) & mask;
    bigger[h] = static_cast<uint32_t>(i);
  }
  table_ = std::move(bigger);
  mask_ = mask;
}

std::pair<uint32_t, bool> KeyArena::insert(const uint8_t* key) {
  if (2 * (count_ + 1) > table_.size()) grow();
  uint64_t h = hash(key) & mask_;
  while (table_[h] != kEmpty) {
    if (std::memcmp(at(table_[h]), key, stride_) == 0) return {table_[h], false};
    h = (h + 1) & mask_;
  }
  arena_.insert(arena_.end(), key, key + stride_);
  uint32_t idx = static_cast<uint32_t>(count_++);
  table_[h] = idx;
  return {idx, true};
}

std::optional<uint32_t> KeyArena::find(const uint8_t* key) const {
  uint64_t h = hash(key) & mask_;
  while (table_[h] != kEmpty) {
    if (std::memcmp(at(table_[h]), key, stride_) == 0) return table_[h];
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

EnumeratedGroup::EnumeratedGroup(ElementKind kind, ElementCodec codec, KeyArena elements,
                                 std::vector<GroupElement> generators)
    : kind_(kind),
      codec_(std::move(codec)),
      elements_(std::make_shared<KeyArena>(std::move(elements))),
      generators_(std::move(generators)) {}

bool EnumeratedGroup::contains(const GroupElement& g) const {
  if (kind_of(g) != kind_) return false;
  auto key = codec_.key(g);
  if (key.size() != elements_->stride()) return false;
  return elements_->find(key.data()).has_value();
}

EnumeratedGroup generate(std::vector<GroupElement> generators, uint64_t budget) {
  if (generators.empty()) throw IncompatibleGenerators("generator list is empty");
  for (size_t i = 1; i < generators.size(); ++i)
    if (!compatible(generators[0], generators[i]))
      throw IncompatibleGenerators("generators disagree in kind, degree or field");

  ElementCodec codec(generators[0]);
  std::sort(generators.begin(), generators.end(),
            [&](const GroupElement& a, const GroupElement& b) { return codec.key(a) < codec.key(b); });
  generators.erase(std::unique(generators.begin(), generators.end(),
                               [&](const GroupElement& a, const GroupElement& b) {
                                 return codec.key(a) == codec.key(b);
                               }),
                   generators.end());

  GroupElement id = multiply(generators[0], inverse_of(generators[0]));
  KeyArena seen(codec.stride());
  std::vector<uint8_t> buf(codec.stride());
  codec.encode(id, buf.data());
  seen.insert(buf.data());

  // Frontier is a queue of arena indices; elements decode on demand.
  for (size_t head = 0; head < seen.size(); ++head) {
    GroupElement cur = codec.decode(seen.at(head));
    for (const GroupElement& gen : generators) {
      GroupElement next = multiply(cur, gen);
      codec.encode(next, buf.data());
      auto [idx, inserted] = seen.insert(buf.data());
      (void)idx;
      if (inserted && seen.size() > budget) throw BudgetExceeded(seen.size(), budget);
    }
  }
  return EnumeratedGroup(kind_of(id), std::move(codec), std::move(seen), std::move(generators));
}

EnumeratedGroup semidirect(const FiniteField& field, unsigned d,
                           const EnumeratedGroup& complement, uint64_t budget) {
  if (complement.kind() != ElementKind::matrix)
    throw IncompatibleGenerators("semidirect complement must be a matrix group");
  Matrix probe = std::get<Matrix>(complement.element(0));
  if (&probe.field() != &field || probe.dim() != d)
    throw IncompatibleGenerators("complement does not act on the requested space");

  uint64_t kernel = 1;
  for (unsigned i = 0; i < d; ++i) kernel *= field.size();
  uint64_t total = kernel * complement.order();
  if (total > budget) throw BudgetExceeded(total, budget);

  // Direct materialization (t, A) in a deterministic order; closure under the
  // affine composition rule is checked property-style in the tests.
  Affine proto = Affine::identity(field, d);
  ElementCodec codec{GroupElement(proto)};
  KeyArena arena(codec.stride());
  std::vector<uint8_t> buf(codec.stride());

  std::vector<uint32_t> t(d, 0);
  // Identity first, then all (t, A) in lexicographic order of (A index, t).
  codec.encode(GroupElement(proto), buf.data());
  arena.insert(buf.data());
  for (uint64_t ai = 0; ai < complement.order(); ++ai) {
    Matrix a = std::get<Matrix>(complement.element(ai));
    std::fill(t.begin(), t.end(), 0);
    for (uint64_t ti = 0; ti < kernel; ++ti) {
      codec.encode(GroupElement(Affine(t, a)), buf.data());
      arena.insert(buf.data());
      for (unsigned i = 0; i < d; ++i) {  // odometer over F^d
        t[i] = (t[i] + 1) % field.size();
        if (t[i] != 0) break;
      }
    }
  }

  std::vector<GroupElement> gens;
  for (const GroupElement& g : complement.generators())
    gens.emplace_back(Affine(std::vector<uint32_t>(d, 0), std::get<Matrix>(g)));
  std::vector<uint32_t> e1(d, 0);
  e1[0] = field.one();
  gens.emplace_back(Affine(e1, Matrix::identity(field, d)));
  if (d > 1) {
    std::vector<uint32_t> e2(d, 0);
    e2[1] = field.one();
    gens.emplace_back(Affine(e2, Matrix::identity(field, d)));
  }
  return EnumeratedGroup(ElementKind::affine, std::move(codec), std::move(arena), std::move(gens));
}

FixedPointFreeResult is_fixed_point_free(const EnumeratedGroup& complement) {
  if (complement.kind() != ElementKind::matrix)
    throw IncompatibleGenerators("fixed-point-free check needs a matrix group");
  for (uint64_t i = 0; i < complement.order(); ++i) {
    Matrix a = std::get<Matrix>(complement.element(i));
    if (a.is_identity()) continue;
    const FiniteField& f = a.field();
    unsigned n = a.dim();
    Matrix shifted = a;
    std::vector<uint32_t> e = shifted.entries();
    for (unsigned r = 0; r < n; ++r) e[r * n + r] = f.sub(e[r * n + r], f.one());
    Matrix am1(f, n, e);
    if (am1.det() != 0) continue;

    // Singular A - I: recover a nonzero kernel vector by elimination.
    std::vector<uint32_t> m = am1.entries();
    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
      unsigned p = rank;
      while (p < n && m[p * n + col] == 0) ++p;
      if (p == n) continue;
      for (unsigned j = 0; j < n; ++j) std::swap(m[p * n + j], m[rank * n + j]);
      uint32_t inv = f.inv(m[rank * n + col]);
      for (unsigned j = 0; j < n; ++j) m[rank * n + j] = f.mul(m[rank * n + j], inv);
      for (unsigned r = 0; r < n; ++r) {
        if (r == rank) continue;
        uint32_t factor = m[r * n + col];
        if (factor == 0) continue;
        for (unsigned j = 0; j < n; ++j)
          m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[rank * n + j]));
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    unsigned free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    std::vector<uint32_t> v(n, 0);
    v[free_col] = f.one();
    for (unsigned r = 0; r < rank; ++r)
      v[pivot_col[r]] = f.neg(m[r * n + free_col]);
    return {false, std::make_pair(a, v)};
  }
  return {true, std::nullopt};
}

}  // namespace pg
