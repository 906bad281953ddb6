#include "nilsep/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <functional>

#include "nilsep/kernels.hpp"

namespace nilsep {

FiniteGroup FiniteGroup::make(std::string label, std::vector<std::string> names, std::vector<Index> table,
                              std::vector<Index> inverses, std::shared_ptr<const GroupBackend> backend,
                              std::vector<Index> generators) {
  auto d = std::make_shared<Data>();
  const std::size_t n = names.size();
  d->label = std::move(label);
  d->names = std::move(names);
  d->by_name.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d->by_name.emplace(d->names[i], static_cast<Index>(i));
  d->generators = std::move(generators);
  d->backend = std::move(backend);
  if (table.empty() && d->backend && n <= kDenseTableLimit) {
    const GroupBackend* be = d->backend.get();
    table = kernels::parallel::cayley_table(n, [be](Index a, Index b) { return be->multiply(a, b); });
  }
  if (!table.empty() && inverses.empty()) {
    inverses.assign(n, 0);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (table[std::size_t(a) * n + b] == 0) {
          inverses[a] = b;
          break;
        }
  }
  d->table = std::move(table);
  d->inverses = std::move(inverses);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_table(std::string label, std::vector<std::string> names, std::vector<Index> table,
                                    std::vector<Index> generators) {
  const std::size_t n = names.size();
  if (n == 0 || table.size() != n * n)
    throw InvalidTableError("shape", "table has " + std::to_string(table.size()) + " entries for " +
                                         std::to_string(n) + " elements");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidTableError("names", "duplicate element name");
  }
  auto at = [&](Index a, Index b) { return table[std::size_t(a) * n + b]; };
  for (std::size_t t = 0; t < table.size(); ++t)
    if (table[t] >= n)
      throw InvalidTableError("closure", "product " + names[t / n] + "*" + names[t % n] + " is not an element");
  for (Index x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw InvalidTableError("identity", names[0] + " does not act as identity on " + names[x]);
  for (Index x = 0; x < n; ++x) {
    bool found = false;
    for (Index y = 0; y < n && !found; ++y) found = at(x, y) == 0 && at(y, x) == 0;
    if (!found) throw InvalidTableError("inverse", names[x] + " has no inverse");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw InvalidTableError("associativity", "(" + names[a] + "*" + names[b] + ")*" + names[c]);
  for (Index g : generators)
    if (g >= n) throw InvalidTableError("generation", "generator index out of range");
  FiniteGroup g = make(std::move(label), std::move(names), std::move(table), {}, nullptr, std::move(generators));
  if (generated_subgroup(g, g.generators()).order() != n)
    throw InvalidTableError("generation", "generators do not generate the group");
  return g;
}

FiniteGroup FiniteGroup::from_backend(std::string label, std::vector<std::string> names,
                                      std::shared_ptr<const GroupBackend> backend, std::vector<Index> generators) {
  return make(std::move(label), std::move(names), {}, {}, std::move(backend), std::move(generators));
}

FiniteGroup FiniteGroup::from_trusted_table(std::string label, std::vector<std::string> names,
                                            std::vector<Index> table, std::vector<Index> generators) {
  return make(std::move(label), std::move(names), std::move(table), {}, nullptr, std::move(generators));
}

FiniteGroup FiniteGroup::trivial() { return make("trivial", {"e"}, {0}, {0}, nullptr, {}); }

Index FiniteGroup::mul(Index a, Index b) const {
  if (!d_->table.empty()) return d_->table[std::size_t(a) * order() + b];
  return d_->backend->multiply(a, b);
}

Index FiniteGroup::inv(Index a) const {
  if (!d_->inverses.empty()) return d_->inverses[a];
  return d_->backend->inverse(a);
}

Index FiniteGroup::pow(Index a, std::uint64_t e) const {
  Index acc = identity();
  Index base = a;
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return acc;
}

std::optional<Index> FiniteGroup::find(std::string_view name) const {
  auto it = d_->by_name.find(std::string(name));
  if (it == d_->by_name.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::PreconditionViolated,
              "no element named '" + std::string(name) + "' in " + label());
}

bool FiniteGroup::is_p_group(const Int& p) const {
  return prime_power_exponent(Int(static_cast<unsigned long>(order())), p).has_value();
}

namespace {

class ProductBackend final : public GroupBackend {
 public:
  ProductBackend(FiniteGroup a, FiniteGroup b) : a_(std::move(a)), b_(std::move(b)) {}
  Index multiply(Index x, Index y) const override {
    const auto nb = static_cast<Index>(b_.order());
    return a_.mul(x / nb, y / nb) * nb + b_.mul(x % nb, y % nb);
  }
  Index inverse(Index x) const override {
    const auto nb = static_cast<Index>(b_.order());
    return a_.inv(x / nb) * nb + b_.inv(x % nb);
  }

 private:
  FiniteGroup a_;
  FiniteGroup b_;
};

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::string> names;
  names.reserve(a.order() * b.order());
  for (Index i = 0; i < a.order(); ++i)
    for (Index j = 0; j < b.order(); ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  const auto nb = static_cast<Index>(b.order());
  std::vector<Index> gens;
  for (Index g : a.generators()) gens.push_back(g * nb);
  for (Index h : b.generators()) gens.push_back(h);
  return FiniteGroup::from_backend(a.label() + "x" + b.label(), std::move(names),
                                   std::make_shared<ProductBackend>(a, b), std::move(gens));
}

Subgroup make_subset(const FiniteGroup& g, const std::vector<Index>& elements) {
  Subgroup s{std::vector<bool>(g.order(), false), {}};
  for (Index x : elements) s.mask.at(x) = true;
  for (Index x = 0; x < g.order(); ++x)
    if (s.mask[x]) s.elements.push_back(x);
  return s;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Index>& generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Index h : generators) {
      Index y = g.mul(queue[i], h);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return make_subset(g, queue);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (!s.contains(g.identity())) return false;
  for (Index a : s.elements)
    for (Index b : s.elements)
      if (!s.contains(g.mul(a, g.inv(b)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) return false;
  for (Index x : s.elements)
    for (Index h : g.generators())
      if (!s.contains(g.conj(x, h))) return false;
  return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorKind::PreconditionViolated, "quotient: subgroup is not normal");
  const std::size_t order = g.order();
  std::vector<Index> rep(order);
  for (Index x = 0; x < order; ++x) {
    Index best = x;
    for (Index h : n.elements) best = std::min(best, g.mul(x, h));
    rep[x] = best;
  }
  std::vector<Index> reps;
  for (Index x = 0; x < order; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<Index> coset_of_rep(order, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_of_rep[reps[i]] = static_cast<Index>(i);
  std::vector<Index> projection(order);
  for (Index x = 0; x < order; ++x) projection[x] = coset_of_rep[rep[x]];

  const std::size_t m = reps.size();
  std::vector<Index> table(m * m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("[" + g.name(reps[i]) + "]");
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = projection[g.mul(reps[i], reps[j])];
  }
  std::vector<Index> gens;
  for (Index h : g.generators()) gens.push_back(projection[h]);
  return {FiniteGroup::from_trusted_table(g.label() + "/N", std::move(names), std::move(table), std::move(gens)),
          std::move(projection)};
}

struct CongruenceImage::Store {
  std::vector<ResidueUTElement> elements;
  std::unordered_map<ResidueUTElement, Index, ResidueHash> index;
};

namespace {

class ResidueBackend final : public GroupBackend {
 public:
  using Store = std::vector<ResidueUTElement>;
  ResidueBackend(const std::vector<ResidueUTElement>* elements,
                 const std::unordered_map<ResidueUTElement, Index, ResidueHash>* index,
                 std::shared_ptr<const void> keepalive)
      : elements_(elements), index_(index), keepalive_(std::move(keepalive)) {}
  Index multiply(Index a, Index b) const override { return index_->at((*elements_)[a] * (*elements_)[b]); }
  Index inverse(Index a) const override { return index_->at((*elements_)[a].inverse()); }

 private:
  const std::vector<ResidueUTElement>* elements_;
  const std::unordered_map<ResidueUTElement, Index, ResidueHash>* index_;
  std::shared_ptr<const void> keepalive_;
};

}  // namespace

std::optional<Index> CongruenceImage::index_of(const ResidueUTElement& r) const {
  auto it = store_->index.find(r);
  if (it == store_->index.end()) return std::nullopt;
  return it->second;
}

const ResidueUTElement& CongruenceImage::element(Index i) const { return store_->elements.at(i); }

CongruenceImage finite_closure(const std::vector<ResidueUTElement>& gens, std::size_t max_order) {
  if (gens.empty()) throw Error(ErrorKind::PreconditionViolated, "finite_closure: empty generator list");
  const std::size_t n = gens.front().dim();
  const Modulus mod = gens.front().modulus();
  for (const auto& g : gens)
    if (g.dim() != n || !(g.modulus() == mod))
      throw Error(ErrorKind::PreconditionViolated, "finite_closure: generators differ in dimension or modulus");

  auto store = std::make_shared<CongruenceImage::Store>();
  store->elements.emplace_back(n, mod);
  store->index.emplace(store->elements.front(), 0);
  for (std::size_t i = 0; i < store->elements.size(); ++i)
    for (const auto& g : gens) {
      ResidueUTElement y = store->elements[i] * g;
      if (store->index.contains(y)) continue;
      if (store->elements.size() >= max_order)
        throw Error(ErrorKind::SizeLimit, "finite_closure: more than " + std::to_string(max_order) +
                                              " elements modulo " + std::to_string(mod.value));
      store->index.emplace(y, static_cast<Index>(store->elements.size()));
      store->elements.push_back(std::move(y));
    }

  std::vector<std::string> names;
  names.reserve(store->elements.size());
  for (const auto& e : store->elements) names.push_back(e.str());
  std::vector<Index> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(store->index.at(g));
  auto backend = std::make_shared<ResidueBackend>(&store->elements, &store->index, store);
  FiniteGroup group = FiniteGroup::from_backend("UT(" + std::to_string(n) + ",Z/" + std::to_string(mod.value) + ")",
                                                std::move(names), std::move(backend), std::move(gen_idx));
  return CongruenceImage(std::move(group), std::move(store), mod);
}

namespace presets {

namespace {

FiniteGroup table_group(std::string label, std::vector<std::string> names,
                        const std::function<Index(Index, Index)>& mul, std::vector<Index> gens) {
  const std::size_t n = names.size();
  std::vector<Index> table(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[std::size_t(a) * n + b] = mul(a, b);
  return FiniteGroup::from_table(std::move(label), std::move(names), std::move(table), std::move(gens));
}

}  // namespace

FiniteGroup cyclic(unsigned n) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "cyclic group of order 0");
  std::vector<std::string> names{"e"};
  for (unsigned i = 1; i < n; ++i) names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<Index> gens;
  if (n > 1) gens.push_back(1);
  return table_group("C" + std::to_string(n), std::move(names), [n](Index a, Index b) { return (a + b) % n; },
                     std::move(gens));
}

FiniteGroup dihedral4() {
  // r^i s^a has index i + 4a
  std::vector<std::string> names{"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  auto mul = [](Index x, Index y) -> Index {
    const Index i = x % 4, a = x / 4, j = y % 4, b = y / 4;
    const Index rot = (a == 0 ? i + j : i + 4 - j) % 4;
    return rot + 4 * ((a + b) % 2);
  };
  return table_group("D4", std::move(names), mul, {1, 4});
}

FiniteGroup quaternion8() {
  // index 2u + sign with units 1, i, j, k
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products as (unit, sign)
  static constexpr std::array<std::array<std::array<Index, 2>, 4>, 4> units{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  auto mul = [](Index x, Index y) -> Index {
    const auto& r = units[x / 2][y / 2];
    return 2 * r[0] + ((x % 2 + y % 2 + r[1]) % 2);
  };
  return table_group("Q8", std::move(names), mul, {2, 4});
}

FiniteGroup symmetric3() {
  std::vector<std::string> names{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  static constexpr std::array<std::array<Index, 3>, 6> perms{{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  // apply x first, then y
  auto mul = [](Index x, Index y) -> Index {
    std::array<Index, 3> img{};
    for (Index t = 0; t < 3; ++t) img[t] = perms[y][perms[x][t]];
    for (Index k = 0; k < perms.size(); ++k)
      if (perms[k] == img) return k;
    return 0;
  };
  return table_group("S3", std::move(names), mul, {1, 4});
}

std::optional<FiniteGroup> by_name(std::string_view name) {
  if (name == "Q8") return quaternion8();
  if (name == "D4") return dihedral4();
  if (name == "S3") return symmetric3();
  if (name == "trivial" || name == "C1") return cyclic(1);
  if (name == "D4xC2") return direct_product(dihedral4(), cyclic(2));
  if (name.size() > 1 && name[0] == 'C') {
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 4096) return cyclic(n);
  }
  return std::nullopt;
}

}  // namespace presets

}  // namespace nilsep
