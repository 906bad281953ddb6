#pragma once

// Shipped groups. Coordinates for each matrix preset are exponents of the
// listed elementary factors, multiplied left to right:
//
//   z          t                               t = I+E12
//   z2         (x, y)    = s^x t^y             s = I+E12, t = I+E13
//   heisenberg (x, y, z) = a^x b^y c^z         a = I+E12, b = I+E23, c = I+E13
//   heis5      (x1, x2, y1, y2, z)             a1, a2, b1, b2, c
//                                              a1 = I+E12, a2 = I+E13,
//                                              b1 = I+E24, b2 = I+E34, c = I+E14
//   ut4        (x12, x23, x34, x13, x24, x14)  I+E_ij in that order
//
// Product presets pair a matrix preset with a finite preset: zxq8, zxd4,
// zxc2, zxc3, zxc6, z2xq8, heisxc2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilsep/matrix_group.hpp"
#include "nilsep/product_group.hpp"

namespace nilsep::presets {

MatrixGroupSpec integers();
MatrixGroupSpec free_abelian2();
MatrixGroupSpec heisenberg();
MatrixGroupSpec heisenberg5();
MatrixGroupSpec unitriangular4();

std::optional<MatrixGroupSpec> matrix_by_name(std::string_view name);
/// Matrix presets (finite part trivial) and the product presets.
std::optional<ProductGroupSpec> product_by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace nilsep::presets
