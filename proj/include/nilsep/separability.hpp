#pragma once

// Conjugacy separability by finite p-groups for the supported backends:
// the classifier, inseparability witnesses for torsion-free non-abelian
// groups with their global and per-level verifiers, the constructive
// separation for abelian-by-finite products, and congruence tower scans.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsep/conjugacy.hpp"
#include "nilsep/finite_group.hpp"
#include "nilsep/lattice.hpp"
#include "nilsep/matrix_group.hpp"
#include "nilsep/product_group.hpp"

namespace nilsep {

struct SeparabilityVerdict {
  Int p;
  bool torsion_is_p_group = false;
  std::size_t torsion_order = 1;
  bool quotient_abelian = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;  // generators with [g_i, g_j] != 1
  bool separable = false;
  std::string reason;  // separable | torsion-not-p-group | quotient-non-abelian | both joined by '+'
};

/// Separable iff tau(G) is a p-group and G / tau(G) is abelian.
SeparabilityVerdict classify(const ProductGroupSpec& g, const Int& p);

/// Why z^(q^n) = c has no solution in Z1.
struct DivisibilityCertificate {
  IntVector c_coords;             // central coordinates of c
  Lattice center_basis;           // canonical basis of <center_gens>
  IntVector c_in_basis;           // c = center_basis * c_in_basis
  Int exponent;                   // q^n
  std::size_t offending_index = 0;  // a coefficient of c_in_basis not divisible by q^n
};

struct ConjugatorExponent {
  unsigned level = 0;  // m
  Int modulus;         // modulus k is inverted against; p^m for every preset
  Int k;               // q^n * k == 1 (mod modulus)
};

struct WitnessReport {
  Int p;
  UTElement a;  // z2_rep
  UTElement b;  // first generator with [a, b] != 1
  std::size_t b_index = 0;
  UTElement c;  // [a, b]
  Int q;
  unsigned n = 0;
  UTElement u;  // a^(q^n)
  UTElement v;  // a^(q^n) c
  DivisibilityCertificate certificate;
  std::vector<ConjugatorExponent> conjugator_exponents;  // m = 1..8
};

inline constexpr unsigned kConjugatorTableDepth = 8;

/// Throws AbelianGroup for abelian specs and NoZ2Rep when z2_rep is absent.
WitnessReport make_witness(const MatrixGroupSpec& spec, const Int& p);

/// Exponent k for level m: the inverse of q^n modulo the order of c mod p^m
/// (a power of p that is p^m whenever c = I + E_1n).
ConjugatorExponent conjugator_exponent(const WitnessReport& w, unsigned m);

struct GlobalVerification {
  bool divisibility_nonconjugate = false;       // z^(q^n) = c unsolvable
  std::optional<bool> lattice_nonconjugate;     // class2_conjugate(u, v) == NO; class <= 2 only
};

class VerificationFailedError : public Error {
 public:
  VerificationFailedError(std::string check, const std::string& detail)
      : Error(ErrorKind::VerificationFailed, "witness verification failed at " + check + ": " + detail),
        check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// Non-conjugacy of u and v in G by the divisibility certificate and, for
/// class <= 2, independently by the commutator lattice. Throws
/// VerificationFailedError naming the check that broke.
GlobalVerification verify_witness_global(const MatrixGroupSpec& spec, const WitnessReport& w);

struct LocalVerification {
  unsigned level = 0;
  Int modulus;  // p^m
  Int k;
  UTElement conjugator = UTElement::identity(1);  // b^k
  bool exact = false;    // reduce(g^-1 u g) == reduce(v)
  std::optional<bool> orbit_conjugate;     // orbit search in the materialised quotient
  std::optional<std::size_t> quotient_order;
};

inline constexpr std::size_t kCrossCheckCap = 1u << 15;

/// Conjugacy of u and v modulo p^m via b^k. For quotients with at most
/// `cross_check_cap` elements the answer is confirmed by orbit search.
/// Throws LocalCheckFailed when either route says non-conjugate.
LocalVerification verify_witness_local(const MatrixGroupSpec& spec, const WitnessReport& w, unsigned m,
                                       std::size_t cross_check_cap = kCrossCheckCap);

struct SeparationCertificate {
  Int p;
  unsigned level = 0;
  FiniteGroup quotient = FiniteGroup::trivial();
  Index image_a = 0;
  Index image_b = 0;
  bool nonconjugate = false;  // re-checked by orbit search
  std::string branch;         // abelian-part | torsion-part
};

class AreConjugateError : public Error {
 public:
  explicit AreConjugateError(ProductElement conjugator)
      : Error(ErrorKind::AreConjugate, "elements are conjugate"), conjugator_(std::move(conjugator)) {}
  const ProductElement& conjugator() const { return conjugator_; }

 private:
  ProductElement conjugator_;
};

/// Finite p-quotient separating two non-conjugate elements of an
/// abelian-by-(finite p-group) direct product. Throws NotApplicable when the
/// matrix part is non-abelian or the finite part is not a p-group, and
/// AreConjugateError when a and b are conjugate.
SeparationCertificate separate_prop4(const ProductGroupSpec& g, const ProductElement& a, const ProductElement& b,
                                     const Int& p, std::size_t max_order = kDefaultClosureCap);

struct TowerLevel {
  unsigned level = 0;
  std::optional<bool> conjugate;  // nullopt when undetermined
  std::string method;             // equal | identity | orbit | witness-conjugator | orbit+witness-conjugator | undetermined
  std::optional<std::size_t> quotient_order;
  bool size_limited = false;
};

struct TowerScan {
  std::vector<TowerLevel> levels;
  std::optional<unsigned> separated_at;
  std::string summary;
};

struct ScanOptions {
  std::size_t max_order = kCrossCheckCap;  // closure cap per level
  // Witness data enabling the explicit conjugator check b^k.
  const WitnessReport* witness = nullptr;
};

/// Conjugacy of the images of x and y modulo p^k for k = 1..depth.
TowerScan scan_tower(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y, const Int& p,
                     unsigned depth, const ScanOptions& options = {});

/// Least k with reduce_mod(g, p, k) != 1, i.e. one more than the least
/// p-adic valuation of a nonzero off-diagonal entry. Throws IdentityElement.
unsigned residual_depth(const UTElement& g, const Int& p);

}  // namespace nilsep
