#include "nilsep/group_presets.hpp"

namespace nilsep::presets {

namespace {

UTElement e(std::size_t n, std::size_t i, std::size_t j) { return UTElement::elementary(n, i - 1, j - 1); }

}  // namespace

MatrixGroupSpec integers() {
  MatrixGroupSpec s;
  s.name = "z";
  s.n = 2;
  s.generators = {e(2, 1, 2)};
  s.generator_names = {"t"};
  s.center_gens = {e(2, 1, 2)};
  s.declared_class = 1;
  s.coordinate_basis = s.generators;
  return s;
}

MatrixGroupSpec free_abelian2() {
  MatrixGroupSpec s;
  s.name = "z2";
  s.n = 3;
  s.generators = {e(3, 1, 2), e(3, 1, 3)};
  s.generator_names = {"s", "t"};
  s.center_gens = s.generators;
  s.declared_class = 1;
  s.coordinate_basis = s.generators;
  return s;
}

MatrixGroupSpec heisenberg() {
  MatrixGroupSpec s;
  s.name = "heisenberg";
  s.n = 3;
  s.generators = {e(3, 1, 2), e(3, 2, 3)};
  s.generator_names = {"a", "b"};
  s.center_gens = {e(3, 1, 3)};
  s.z2_rep = e(3, 1, 2);
  s.declared_class = 2;
  s.coordinate_basis = {e(3, 1, 2), e(3, 2, 3), e(3, 1, 3)};
  return s;
}

MatrixGroupSpec heisenberg5() {
  MatrixGroupSpec s;
  s.name = "heis5";
  s.n = 4;
  s.generators = {e(4, 1, 2), e(4, 1, 3), e(4, 2, 4), e(4, 3, 4)};
  s.generator_names = {"a1", "a2", "b1", "b2"};
  s.center_gens = {e(4, 1, 4)};
  s.z2_rep = e(4, 1, 2);
  s.declared_class = 2;
  s.coordinate_basis = {e(4, 1, 2), e(4, 1, 3), e(4, 2, 4), e(4, 3, 4), e(4, 1, 4)};
  return s;
}

MatrixGroupSpec unitriangular4() {
  MatrixGroupSpec s;
  s.name = "ut4";
  s.n = 4;
  s.generators = {e(4, 1, 2), e(4, 2, 3), e(4, 3, 4)};
  s.generator_names = {"x12", "x23", "x34"};
  s.center_gens = {e(4, 1, 4)};
  s.z2_rep = e(4, 1, 3);
  s.declared_class = 3;
  s.coordinate_basis = {e(4, 1, 2), e(4, 2, 3), e(4, 3, 4), e(4, 1, 3), e(4, 2, 4), e(4, 1, 4)};
  return s;
}

std::optional<MatrixGroupSpec> matrix_by_name(std::string_view name) {
  if (name == "z") return integers();
  if (name == "z2") return free_abelian2();
  if (name == "heisenberg") return heisenberg();
  if (name == "heis5") return heisenberg5();
  if (name == "ut4") return unitriangular4();
  return std::nullopt;
}

std::optional<ProductGroupSpec> product_by_name(std::string_view name) {
  if (auto m = matrix_by_name(name)) return ProductGroupSpec{*m, FiniteGroup::trivial(), std::string(name)};
  struct Entry {
    std::string_view name;
    MatrixGroupSpec (*matrix)();
    std::string_view finite;
  };
  static const Entry table[] = {
      {"zxq8", integers, "Q8"},   {"zxd4", integers, "D4"},         {"zxc2", integers, "C2"},
      {"zxc3", integers, "C3"},   {"zxc6", integers, "C6"},         {"z2xq8", free_abelian2, "Q8"},
      {"heisxc2", heisenberg, "C2"},
  };
  for (const auto& t : table) {
    if (t.name != name) continue;
    return ProductGroupSpec{t.matrix(), *by_name(t.finite), std::string(t.name)};
  }
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"z", "z2", "heisenberg", "heis5", "ut4", "zxq8", "zxd4", "zxc2", "zxc3", "zxc6", "z2xq8", "heisxc2"};
}

}  // namespace nilsep::presets
