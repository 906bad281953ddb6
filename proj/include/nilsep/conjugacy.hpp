#pragma once

// Conjugacy decisions: orbit search in finite groups, the commutator
// lattice criterion for class <= 2 matrix groups, abelian-by-finite direct
// products, and separability of cosets by finite p-quotients.

#include <optional>
#include <string>
#include <vector>

#include "nilsep/finite_group.hpp"
#include "nilsep/matrix_group.hpp"
#include "nilsep/product_group.hpp"

namespace nilsep {

enum class ConjugacyMethod { Orbit, Class2Lattice, Product };

const char* to_string(ConjugacyMethod m);

/// When `conjugate` holds, g^-1 x g == y for g = *conjugator.
template <class Element>
struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<Element> conjugator;
  ConjugacyMethod method = ConjugacyMethod::Orbit;
};

/// Breadth-first orbit of x under conjugation by the generators, in listed
/// order; the conjugator is the first one found.
ConjugacyAnswer<Index> conjugate_in_finite(const FiniteGroup& g, Index x, Index y);

/// Conjugacy in a class <= 2 group: y is conjugate to x iff x^-1 y lies in
/// the lattice spanned by the central commutators [x, g_i]. Throws
/// ClassTooHigh for declared class > 2, and PreconditionViolated when some
/// [x, g_i] is not central (x outside the group).
ConjugacyAnswer<UTElement> class2_conjugate(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y);

/// Direct product with abelian matrix part: (m1, f1) ~ (m2, f2) iff m1 == m2
/// and f1 ~ f2. Throws NonAbelianPart otherwise.
ConjugacyAnswer<ProductElement> conjugate_in_product(const ProductGroupSpec& g, const ProductElement& a,
                                                     const ProductElement& b);

inline constexpr std::size_t kDefaultEnumerationBudget = 512;

/// All normal subgroups of `x`, ordered by size then elements.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& x, std::size_t budget = kDefaultEnumerationBudget);

/// Normal subgroups H with |X : H| a power of p; always includes X.
std::vector<Subgroup> enumerate_p_quotient_kernels(const FiniteGroup& x, const Int& p,
                                                   std::size_t budget = kDefaultEnumerationBudget);

struct CosetQuery {
  FiniteGroup ambient;
  Subgroup normal;  // N
  Index coset_rep;  // b
  Index probe;      // a
  Int p;
};

enum class CosetVerdict { Yes, No, Vacuous };

const char* to_string(CosetVerdict v);

struct CosetAnswer {
  CosetVerdict verdict = CosetVerdict::Vacuous;
  std::optional<Subgroup> kernel;  // H with a not conjugate into bNH
};

/// Whether some p-quotient X/H keeps `probe` away from the conjugates of the
/// coset bN. Vacuous when the probe is already conjugate into bN.
CosetAnswer coset_conjugacy_separable(const CosetQuery& q);

struct SeparabilityCheck {
  bool separable = true;
  std::optional<std::pair<Index, Index>> failing_pair;  // non-conjugate, never separated
  std::size_t pairs_checked = 0;
};

/// Exhaustive conjugacy p-separability of a finite group over all its
/// p-quotients.
SeparabilityCheck conjugacy_p_separable(const FiniteGroup& x, const Int& p,
                                        std::size_t budget = kDefaultEnumerationBudget);

struct CosetCriterionReport {
  bool cosets_separable = false;    // every coset of N is conjugacy p-separable in X
  bool quotient_separable = false;  // X/N is conjugacy p-separable
  bool holds = false;               // the two sides agree
  std::size_t coset_queries = 0;
  std::size_t vacuous_queries = 0;
};

CosetCriterionReport prop1_equivalence_check(const FiniteGroup& x, const Subgroup& n, const Int& p,
                                    std::size_t budget = kDefaultEnumerationBudget);

}  // namespace nilsep
