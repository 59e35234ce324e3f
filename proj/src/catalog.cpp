#include "pg/catalog.hpp"

#include <algorithm>
#include <map>

namespace pg {

// ---------------------------------------------------------------------------
// GroupSpec

namespace {

bool parse_uint(const std::string& s, unsigned& out) {
  if (s.empty() || s.size() > 9) return false;
  unsigned v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  out = v;
  return true;
}

// q = p^k for the smallest prime divisor p, or 0 if q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned k = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return v == 1 ? std::make_pair(p, k) : std::make_pair(0u, 0u);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  auto arg_of = [&](const std::string& prefix) -> std::optional<std::string> {
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
        text.back() == ')')
      return text.substr(prefix.size(), text.size() - prefix.size() - 1);
    return std::nullopt;
  };
  GroupSpec spec;
  if (text == "SL(2,5)") {
    spec.type = Type::sl25;
    return spec;
  }
  if (auto a = arg_of("S(")) {
    if (!parse_uint(*a, spec.n) || spec.n < 1) throw UnknownSpec("bad degree in: " + text);
    spec.type = Type::symmetric;
    return spec;
  }
  if (auto a = arg_of("A(")) {
    if (!parse_uint(*a, spec.n) || spec.n < 3) throw UnknownSpec("bad degree in: " + text);
    spec.type = Type::alternating;
    return spec;
  }
  if (auto a = arg_of("PSL(2,")) {
    if (!parse_uint(*a, spec.q) || prime_power(spec.q).first == 0)
      throw UnknownSpec("PSL(2,q) needs a prime power q: " + text);
    spec.type = Type::psl2;
    return spec;
  }
  if (auto a = arg_of("PGL(2,")) {
    if (!parse_uint(*a, spec.q) || prime_power(spec.q).first == 0)
      throw UnknownSpec("PGL(2,q) needs a prime power q: " + text);
    spec.type = Type::pgl2;
    return spec;
  }
  if (auto a = arg_of("frobenius(")) {
    if (!parse_uint(*a, spec.n) || spec.n < 1)
      throw UnknownSpec("frobenius(m) needs m >= 1: " + text);
    spec.type = Type::frobenius;
    return spec;
  }
  if (text.rfind("fixture:", 0) == 0 && text.size() > 8) {
    spec.type = Type::fixture;
    spec.name = text.substr(8);
    return spec;
  }
  if (text.rfind("perm:", 0) == 0 && text.size() > 5) {
    spec.type = Type::perm_file;
    spec.name = text.substr(5);
    return spec;
  }
  throw UnknownSpec("unrecognized group spec: " + text);
}

std::string GroupSpec::to_string() const {
  switch (type) {
    case Type::symmetric: return "S(" + std::to_string(n) + ")";
    case Type::alternating: return "A(" + std::to_string(n) + ")";
    case Type::psl2: return "PSL(2," + std::to_string(q) + ")";
    case Type::pgl2: return "PGL(2," + std::to_string(q) + ")";
    case Type::sl25: return "SL(2,5)";
    case Type::frobenius: return "frobenius(" + std::to_string(n) + ")";
    case Type::fixture: return "fixture:" + name;
    case Type::perm_file: return "perm:" + name;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Complement and Frobenius construction

namespace {

// Centralizer-of-everything scan; the complement has 120 elements, so the
// quadratic loop is nothing.
std::vector<uint64_t> center_indices(const EnumeratedGroup& g) {
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < g.order(); ++i) {
    GroupElement a = g.element(i);
    bool central = true;
    for (uint64_t j = 0; j < g.order(); ++j) {
      GroupElement b = g.element(j);
      if (!(multiply(a, b) == multiply(b, a))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

// Simplicity of a small group given as a multiplication table: every
// nontrivial normal closure is the whole group.
bool table_group_simple(const std::vector<std::vector<unsigned>>& mul, unsigned identity) {
  const unsigned n = static_cast<unsigned>(mul.size());
  if (n <= 1) return false;
  std::vector<unsigned> inv(n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (mul[a][b] == identity) inv[a] = b;
  for (unsigned h = 0; h < n; ++h) {
    if (h == identity) continue;
    std::vector<bool> in(n, false);
    std::vector<unsigned> members;
    auto push = [&](unsigned x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    push(identity);
    push(h);
    for (size_t head = 0; head < members.size(); ++head) {
      unsigned x = members[head];
      for (unsigned g = 0; g < n; ++g) {
        push(mul[mul[g][x]][inv[g]]);  // conjugates keep the set normal
        if (in[g]) push(mul[x][g]);    // products keep it a subgroup
      }
    }
    if (members.size() != n) return false;
  }
  return true;
}

}  // namespace

EnumeratedGroup build_complement(const FiniteField& field, ComplementEvidence* evidence) {
  if (field.characteristic() != 7)
    throw FieldLacksRoots("complement construction needs characteristic 7");
  auto alpha = field.sqrt(field.neg(field.one()));
  auto beta = field.sqrt(field.from_int(5));
  if (!alpha || !beta)
    throw FieldLacksRoots("field has no square roots of -1 and 5 (odd extension degree)");

  const uint32_t a = *alpha;
  const uint32_t t = field.div(field.add(*beta, field.one()), field.from_int(2));
  Matrix x = Matrix::from_ints(field, 2, {-1, 1, -1, 0});
  Matrix y(field, 2, {field.zero(), a, a, t});
  Matrix z = Matrix::from_ints(field, 2, {-1, 0, 0, -1});

  EnumeratedGroup c = generate({x, y, z}, 100000);

  ComplementEvidence ev;
  ev.order = c.order();
  ev.y_order = y.order();
  {
    Matrix y5 = y * y;
    y5 = y5 * y5;
    y5 = y5 * y;
    ev.y_fifth_power_is_identity = y5.is_identity();
  }
  for (uint64_t i = 0; i < c.order(); ++i) {
    uint64_t o = element_order(c.element(i));
    ev.spectrum.insert(o);
    if (o == 2) ++ev.involution_count;
  }
  std::vector<uint64_t> center = center_indices(c);
  ev.center_order = center.size();

  // Quotient by the center: cosets keyed by the lex-least member key.
  ElementCodec codec = c.codec();
  std::map<std::vector<uint8_t>, unsigned> coset_id;
  std::vector<uint64_t> coset_rep;
  std::vector<unsigned> elem_coset(c.order());
  for (uint64_t i = 0; i < c.order(); ++i) {
    GroupElement g = c.element(i);
    std::vector<uint8_t> best;
    for (uint64_t zi : center) {
      auto key = codec.key(multiply(g, c.element(zi)));
      if (best.empty() || key < best) best = key;
    }
    auto it = coset_id.find(best);
    if (it == coset_id.end()) {
      it = coset_id.emplace(best, static_cast<unsigned>(coset_rep.size())).first;
      coset_rep.push_back(i);
    }
    elem_coset[i] = it->second;
  }
  ev.quotient_order = coset_rep.size();
  {
    const unsigned qn = static_cast<unsigned>(coset_rep.size());
    std::vector<std::vector<unsigned>> mul(qn, std::vector<unsigned>(qn));
    std::map<std::vector<uint8_t>, uint64_t> index_of;
    for (uint64_t i = 0; i < c.order(); ++i) index_of[codec.key(c.element(i))] = i;
    unsigned identity_coset = 0;
    for (uint64_t i = 0; i < c.order(); ++i)
      if (is_identity(c.element(i))) identity_coset = elem_coset[i];
    for (unsigned i = 0; i < qn; ++i)
      for (unsigned j = 0; j < qn; ++j) {
        GroupElement prod = multiply(c.element(coset_rep[i]), c.element(coset_rep[j]));
        mul[i][j] = elem_coset[index_of.at(codec.key(prod))];
      }
    ev.quotient_simple = table_group_simple(mul, identity_coset);
  }

  ev.identified = ev.order == 120 && ev.center_order == 2 && ev.involution_count == 1 &&
                  ev.quotient_order == 60 && ev.quotient_simple;
  if (evidence) *evidence = ev;
  if (!ev.identified)
    throw IdentificationFailed("complement over GF(" + std::to_string(field.characteristic()) +
                               "^" + std::to_string(field.degree()) +
                               ") failed the SL(2,5) evidence checks");
  return c;
}

FrobeniusGroup build_frobenius(unsigned m, uint64_t budget) {
  if (m < 1) throw UnknownSpec("frobenius(m) needs m >= 1");
  const FiniteField& field = FiniteField::get(7, 2 * m);

  FrobeniusGroup out;
  out.m = m;
  EnumeratedGroup c = build_complement(field, &out.witness.complement);

  auto fpf = is_fixed_point_free(c);
  out.witness.fpf.fixed_point_free = fpf.fixed_point_free;
  out.witness.fpf.checked_elements = c.order();
  if (!fpf.fixed_point_free)
    throw IdentificationFailed("complement does not act fixed point freely");

  uint64_t kernel = static_cast<uint64_t>(field.size()) * field.size();
  out.witness.kernel_order = kernel;
  out.witness.complement_order = c.order();
  out.order = kernel * c.order();

  // The decomposition route: translations contribute 7, everything else has
  // the order of its linear part because A - I is invertible.
  std::set<uint64_t> decomposition = out.witness.complement.spectrum;
  decomposition.insert(7);

  if (out.order <= budget) {
    EnumeratedGroup g = semidirect(field, 2, c, budget);
    out.spectrum = compute_spectrum(g);
    out.enumerated = true;
    if (out.spectrum.orders != decomposition)
      throw Error("frobenius spectrum disagrees with its decomposition");
    out.group = std::move(g);
  } else {
    out.spectrum = Spectrum{decomposition, Strategy::exhaustive, out.order};
    out.enumerated = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::vector<uint16_t> iota_images(unsigned n) {
  std::vector<uint16_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<uint16_t>(i);
  return img;
}

Permutation cycle(unsigned degree, const std::vector<uint16_t>& points) {
  auto img = iota_images(degree);
  for (size_t i = 0; i < points.size(); ++i)
    img[points[i]] = points[(i + 1) % points.size()];
  return Permutation(img);
}

std::vector<Permutation> symmetric_generators(unsigned n) {
  if (n == 1) return {Permutation::identity(1)};
  std::vector<uint16_t> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = static_cast<uint16_t>(i);
  if (n == 2) return {cycle(n, {0, 1})};
  return {cycle(n, {0, 1}), cycle(n, all)};
}

std::vector<Permutation> alternating_generators(unsigned n) {
  std::vector<uint16_t> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = static_cast<uint16_t>(i);
  if (n == 3) return {cycle(n, {0, 1, 2})};
  if (n % 2 == 1) return {cycle(n, {0, 1, 2}), cycle(n, all)};
  std::vector<uint16_t> tail(all.begin() + 1, all.end());
  return {cycle(n, {0, 1, 2}), cycle(n, tail)};
}

// Projective line actions. Points: field elements by packed index, infinity
// at index q.
std::vector<Permutation> projective_generators(const FiniteField& f, bool projective_general) {
  const unsigned q = f.size();
  const unsigned inf = q;
  auto translation = iota_images(q + 1);
  for (unsigned i = 0; i < q; ++i) translation[i] = static_cast<uint16_t>(f.add(i, f.one()));
  translation[inf] = static_cast<uint16_t>(inf);

  uint32_t g = f.generator();
  uint32_t scale = projective_general ? g : f.mul(g, g);
  auto scaling = iota_images(q + 1);
  for (unsigned i = 0; i < q; ++i) scaling[i] = static_cast<uint16_t>(f.mul(scale, i));
  scaling[inf] = static_cast<uint16_t>(inf);

  auto inversion = iota_images(q + 1);
  inversion[0] = static_cast<uint16_t>(inf);
  inversion[inf] = 0;
  for (unsigned i = 1; i < q; ++i) {
    uint32_t v = f.inv(i);
    inversion[i] = static_cast<uint16_t>(projective_general ? v : f.neg(v));
  }
  return {Permutation(translation), Permutation(scaling), Permutation(inversion)};
}

CatalogEntry from_permutations(GroupSpec spec, std::vector<Permutation> gens, uint64_t budget) {
  CatalogEntry entry;
  entry.spec = std::move(spec);
  entry.bsgs = Bsgs(gens);
  entry.order = entry.bsgs->order();
  if (entry.order <= budget) {
    std::vector<GroupElement> as_elements(gens.begin(), gens.end());
    entry.group = generate(std::move(as_elements), budget);
    if (entry.group->order() != entry.order)
      throw Error("closure and stabilizer chain disagree on the group order");
  }
  return entry;
}

}  // namespace

CatalogEntry catalog(const GroupSpec& spec, const CatalogOptions& options) {
  switch (spec.type) {
    case GroupSpec::Type::symmetric:
      return from_permutations(spec, symmetric_generators(spec.n), options.budget);
    case GroupSpec::Type::alternating:
      return from_permutations(spec, alternating_generators(spec.n), options.budget);
    case GroupSpec::Type::pgl2:
    case GroupSpec::Type::psl2: {
      auto [p, k] = prime_power(spec.q);
      const FiniteField& f = FiniteField::get(p, k);
      return from_permutations(spec, projective_generators(f, spec.type == GroupSpec::Type::pgl2),
                               options.budget);
    }
    case GroupSpec::Type::sl25: {
      const FiniteField& f5 = FiniteField::get(5, 1);
      CatalogEntry entry;
      entry.spec = spec;
      entry.group = generate({Matrix::from_ints(f5, 2, {1, 1, 0, 1}),
                              Matrix::from_ints(f5, 2, {0, 1, -1, 0})},
                             options.budget);
      entry.order = entry.group->order();
      return entry;
    }
    case GroupSpec::Type::frobenius: {
      CatalogEntry entry;
      entry.spec = spec;
      entry.frobenius = build_frobenius(spec.n, options.budget);
      entry.order = entry.frobenius->order;
      if (entry.frobenius->group) entry.group = entry.frobenius->group;
      return entry;
    }
    case GroupSpec::Type::fixture:
    case GroupSpec::Type::perm_file: {
      const std::string path = spec.type == GroupSpec::Type::fixture
                                   ? fixture_path(options.fixtures_dir, spec.name)
                                   : spec.name;
      FixtureFile file = load_fixture(path);
      CatalogEntry entry;
      entry.spec = spec;
      entry.bsgs = Bsgs(file.generators);
      uint64_t computed = entry.bsgs->order();
      if (computed != file.order) throw FixtureOrderMismatch(file.name, file.order, computed);
      entry.order = computed;
      if (file.mu) entry.fixture = file.spectrum_fixture();
      if (entry.order <= options.budget) {
        std::vector<GroupElement> as_elements(file.generators.begin(), file.generators.end());
        entry.group = generate(std::move(as_elements), options.budget);
        if (entry.group->order() != entry.order)
          throw Error("closure and stabilizer chain disagree on the group order");
      }
      return entry;
    }
  }
  throw UnknownSpec("unhandled spec type");
}

}  // namespace pg
