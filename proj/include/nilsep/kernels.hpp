#pragma once

// Data-parallel kernels over finite groups. Each kernel has an OpenMP
// version used by the library and a serial reference kept for tests and
// benchmarks; both must return identical results.

#include <cstddef>
#include <functional>
#include <vector>

#include "nilsep/finite_group.hpp"

namespace nilsep::kernels {

using MulFn = std::function<Index(Index, Index)>;

namespace serial {

/// Row-major order x order multiplication table.
std::vector<Index> cayley_table(std::size_t order, const MulFn& mul);

/// label[x] = least index in the conjugacy class of x, found by orbit
/// search under conjugation by the generators.
std::vector<Index> class_labels(const FiniteGroup& g);

}  // namespace serial

namespace parallel {

std::vector<Index> cayley_table(std::size_t order, const MulFn& mul);

/// Same labels; conjugation tables per generator are built in parallel and
/// merged by union-find.
std::vector<Index> class_labels(const FiniteGroup& g);

}  // namespace parallel

}  // namespace nilsep::kernels
