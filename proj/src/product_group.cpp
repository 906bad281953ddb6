#include "nilsep/product_group.hpp"

namespace nilsep {

std::string ProductGroupSpec::name() const {
  if (!label.empty()) return label;
  if (finite_part.order() == 1) return matrix_part.name;
  return matrix_part.name + "x" + finite_part.label();
}

ProductElement product_mul(const ProductGroupSpec& g, const ProductElement& x, const ProductElement& y) {
  return {x.matrix * y.matrix, g.finite_part.mul(x.finite, y.finite)};
}

ProductElement product_inv(const ProductGroupSpec& g, const ProductElement& x) {
  return {ut_inv(x.matrix), g.finite_part.inv(x.finite)};
}

ProductElement product_conj(const ProductGroupSpec& g, const ProductElement& x, const ProductElement& h) {
  return {conjugate_by(x.matrix, h.matrix), g.finite_part.conj(x.finite, h.finite)};
}

ProductElement product_identity(const ProductGroupSpec& g) {
  return {UTElement::identity(g.matrix_part.n), g.finite_part.identity()};
}

FiniteGroup torsion_subgroup(const ProductGroupSpec& g) { return g.finite_part; }

std::vector<ResidueUTElement> reduced_generators(const MatrixGroupSpec& spec, const Modulus& mod) {
  std::vector<ResidueUTElement> gens;
  for (const auto& x : spec.generators) gens.push_back(reduce_mod(x, mod));
  return gens;
}

GroupHom<UTElement> congruence_hom(const MatrixGroupSpec& spec, const Int& p, unsigned level,
                                   std::size_t max_order) {
  const Modulus mod = make_modulus(p, level);
  auto image = std::make_shared<CongruenceImage>(finite_closure(reduced_generators(spec, mod), max_order));
  std::function<Index(const UTElement&)> map = [image](const UTElement& u) {
    auto i = image->index_of(reduce_mod(u, image->modulus()));
    if (!i) throw Error(ErrorKind::PreconditionViolated, "element " + u.str() + " is not in the generated group");
    return *i;
  };
  return {"reduction of " + spec.name + " mod " + std::to_string(mod.value), image->group(), std::move(map)};
}

GroupHom<ProductElement> product_congruence_hom(const ProductGroupSpec& g, const Int& p, unsigned level,
                                                std::size_t max_order) {
  GroupHom<UTElement> m = congruence_hom(g.matrix_part, p, level, max_order);
  const auto nf = static_cast<Index>(g.finite_part.order());
  FiniteGroup codomain = direct_product(m.codomain, g.finite_part);
  std::function<Index(const ProductElement&)> map = [mm = m.map, nf](const ProductElement& x) {
    return mm(x.matrix) * nf + x.finite;
  };
  return {m.description + " x " + g.finite_part.label(), std::move(codomain), std::move(map)};
}

}  // namespace nilsep
