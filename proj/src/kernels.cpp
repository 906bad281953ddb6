#include "nilsep/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace nilsep::kernels {

namespace serial {

std::vector<Index> cayley_table(std::size_t order, const MulFn& mul) {
  std::vector<Index> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = mul(Index(a), Index(b));
  return table;
}

std::vector<Index> class_labels(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr Index unset = ~Index(0);
  std::vector<Index> label(n, unset);
  std::vector<Index> orbit;
  for (Index x = 0; x < n; ++x) {
    if (label[x] != unset) continue;
    // x is the least unlabelled element, hence the least of its class
    orbit.assign(1, x);
    label[x] = x;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Index h : g.generators()) {
        Index y = g.conj(orbit[i], h);
        if (label[y] == unset) {
          label[y] = x;
          orbit.push_back(y);
        }
      }
  }
  return label;
}

}  // namespace serial

namespace parallel {

std::vector<Index> cayley_table(std::size_t order, const MulFn& mul) {
  std::vector<Index> table(order * order);
  const auto rows = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < order; ++b) table[std::size_t(a) * order + b] = mul(Index(a), Index(b));
  return table;
}

std::vector<Index> class_labels(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& gens = g.generators();
  // action[k * n + x] = x conjugated by generator k
  std::vector<Index> action(gens.size() * n);
  const auto total = static_cast<std::int64_t>(action.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    action[std::size_t(i)] = g.conj(Index(std::size_t(i) % n), gens[std::size_t(i) / n]);

  std::vector<Index> parent(n);
  for (std::size_t x = 0; x < n; ++x) parent[x] = Index(x);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < action.size(); ++i) {
    const Index a = find(Index(i % n)), b = find(action[i]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Index> label(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < std::int64_t(n); ++x) {
    Index r = Index(x);
    while (parent[r] != r) r = parent[r];
    label[std::size_t(x)] = r;
  }
  return label;
}

}  // namespace parallel

}  // namespace nilsep::kernels
