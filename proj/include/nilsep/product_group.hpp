#pragma once

// Direct products (unitriangular integer group) x (finite group) and the
// congruence homomorphisms from them onto finite groups.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nilsep/finite_group.hpp"
#include "nilsep/matrix_group.hpp"

namespace nilsep {

struct ProductGroupSpec {
  MatrixGroupSpec matrix_part;
  FiniteGroup finite_part = FiniteGroup::trivial();
  std::string label;  // preset name; empty for composed groups

  std::string name() const;
};

struct ProductElement {
  UTElement matrix;
  Index finite = 0;

  friend bool operator==(const ProductElement&, const ProductElement&) = default;
};

ProductElement product_mul(const ProductGroupSpec& g, const ProductElement& x, const ProductElement& y);
ProductElement product_inv(const ProductGroupSpec& g, const ProductElement& x);
/// h^-1 x h
ProductElement product_conj(const ProductGroupSpec& g, const ProductElement& x, const ProductElement& h);
ProductElement product_identity(const ProductGroupSpec& g);

/// tau(G). Nonidentity unitriangular integer matrices have infinite order,
/// so the torsion of a direct product is {1} x finite_part.
FiniteGroup torsion_subgroup(const ProductGroupSpec& g);

/// A homomorphism from a group with elements of type `Element` onto a
/// finite group.
template <class Element>
struct GroupHom {
  std::string description;
  FiniteGroup codomain;
  std::function<Index(const Element&)> map;

  Index operator()(const Element& x) const { return map(x); }
};

/// Reduction of the matrix part modulo p^level; onto its image.
GroupHom<UTElement> congruence_hom(const MatrixGroupSpec& spec, const Int& p, unsigned level,
                                   std::size_t max_order = kDefaultClosureCap);

/// (m, f) -> (m mod p^level, f) onto (image of matrix part) x finite_part.
GroupHom<ProductElement> product_congruence_hom(const ProductGroupSpec& g, const Int& p, unsigned level,
                                                std::size_t max_order = kDefaultClosureCap);

/// Generators of the matrix part reduced modulo p^level.
std::vector<ResidueUTElement> reduced_generators(const MatrixGroupSpec& spec, const Modulus& mod);

}  // namespace nilsep
