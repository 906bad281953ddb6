#include "nilsep/separability.hpp"

#include <exception>
#include <limits>

namespace nilsep {

SeparabilityVerdict classify(const ProductGroupSpec& g, const Int& p) {
  SeparabilityVerdict v;
  v.p = p;
  const FiniteGroup torsion = torsion_subgroup(g);
  v.torsion_order = torsion.order();
  v.torsion_is_p_group = torsion.is_p_group(p);
  const AbelianCheck ab = is_abelian(g.matrix_part);
  v.quotient_abelian = ab.abelian;
  v.witness_pair = ab.witness;
  v.separable = v.torsion_is_p_group && v.quotient_abelian;
  if (v.separable) {
    v.reason = "separable";
  } else {
    v.reason.clear();
    if (!v.torsion_is_p_group) v.reason = "torsion-not-p-group";
    if (!v.quotient_abelian) v.reason += std::string(v.reason.empty() ? "" : "+") + "quotient-non-abelian";
  }
  return v;
}

namespace {

Int smallest_prime_other_than(const Int& p) { return p == 2 ? Int(3) : Int(2); }

Int witness_exponent(const WitnessReport& w) { return ipow(w.q, w.n); }

}  // namespace

ConjugatorExponent conjugator_exponent(const WitnessReport& w, unsigned m) {
  const Modulus mod = make_modulus(w.p, m);
  // order of c modulo p^m is a power of p
  Int order = 1;
  ResidueUTElement r = reduce_mod(w.c, mod);
  while (!r.is_identity()) {
    r = r.pow(w.p.get_ui());
    order *= w.p;
  }
  Int modulus(static_cast<unsigned long>(mod.value));
  if (order > modulus) modulus = order;
  return {m, modulus, mod_inverse(witness_exponent(w), modulus)};
}

WitnessReport make_witness(const MatrixGroupSpec& spec, const Int& p) {
  const AbelianCheck ab = is_abelian(spec);
  if (ab.abelian)
    throw Error(ErrorKind::AbelianGroup,
                "group is abelian; conjugacy F_" + p.get_str() + "-separable, no witness exists");
  if (!spec.z2_rep) throw Error(ErrorKind::NoZ2Rep, spec.name + " declares no element of Z2 \\ Z1");

  WitnessReport w{p,
                  *spec.z2_rep,
                  UTElement::identity(spec.n),
                  0,
                  UTElement::identity(spec.n),
                  smallest_prime_other_than(p),
                  0,
                  UTElement::identity(spec.n),
                  UTElement::identity(spec.n),
                  {{}, Lattice(upper_count(spec.n)), {}, 1, 0},
                  {}};
  bool found = false;
  for (std::size_t i = 0; i < spec.generators.size() && !found; ++i) {
    UTElement c = commutator(w.a, spec.generators[i]);
    if (!c.is_identity()) {
      w.b = spec.generators[i];
      w.b_index = i;
      w.c = std::move(c);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::PreconditionViolated, "z2_rep commutes with every generator of " + spec.name);

  const CentralCoordinates coords(spec);
  auto cv = coords(w.c);
  if (!cv || !lattice_contains(coords.center_lattice(), *cv).member)
    throw Error(ErrorKind::PreconditionViolated, "[a, b] is not in <center_gens>");
  const Lattice basis = coords.center_lattice().canonical();
  const IntVector in_basis = lattice_contains(basis, *cv).coefficients;

  // z^(q^n) = c fails once q^n exceeds the q-part of some coefficient
  unsigned long bound = 0;
  for (const auto& x : in_basis)
    if (x != 0) bound = std::max(bound, valuation(x, w.q));
  for (unsigned n = 1; n <= bound + 1; ++n) {
    if (!power_solvable(coords.center_lattice(), *cv, ipow(w.q, n)).solvable) {
      w.n = n;
      break;
    }
  }
  if (w.n == 0) throw Error(ErrorKind::VerificationFailed, "no failing exponent found below the valuation bound");

  const Int e = ipow(w.q, w.n);
  std::size_t offending = 0;
  for (std::size_t i = 0; i < in_basis.size(); ++i)
    if (!divides(e, in_basis[i])) {
      offending = i;
      break;
    }
  w.certificate = {*cv, basis, in_basis, e, offending};
  w.u = ut_pow(w.a, e);
  w.v = w.u * w.c;
  for (unsigned m = 1; m <= kConjugatorTableDepth; ++m) w.conjugator_exponents.push_back(conjugator_exponent(w, m));
  return w;
}

GlobalVerification verify_witness_global(const MatrixGroupSpec& spec, const WitnessReport& w) {
  GlobalVerification out;
  const CentralCoordinates coords(spec);
  const Int e = witness_exponent(w);

  // (1) z^(q^n) = c has no solution in Z1
  auto cv = coords(w.c);
  if (!cv || !lattice_contains(coords.center_lattice(), *cv).member)
    throw VerificationFailedError("divisibility", "c is not in <center_gens>");
  const PowerRoot root = power_solvable(coords.center_lattice(), *cv, e);
  if (root.solvable)
    throw VerificationFailedError("divisibility", "z^" + e.get_str() + " = c is solved by z with coordinates " +
                                                      to_string(root.root));
  out.divisibility_nonconjugate = true;

  if (w.c.is_identity() || !(w.c == commutator(w.a, w.b)))
    throw VerificationFailedError("structure", "c is not the nontrivial commutator [a, b]");
  if (!(w.u == ut_pow(w.a, e)) || !(w.v == w.u * w.c))
    throw VerificationFailedError("structure", "pair is not (a^(q^n), a^(q^n) c)");

  // (2) independent lattice criterion
  if (spec.declared_class <= 2) {
    const auto ans = class2_conjugate(spec, w.u, w.v);
    if (ans.conjugate)
      throw VerificationFailedError("lattice", "class-2 criterion finds conjugator " + ans.conjugator->str());
    out.lattice_nonconjugate = true;
  }
  return out;
}

LocalVerification verify_witness_local(const MatrixGroupSpec& spec, const WitnessReport& w, unsigned m,
                                       std::size_t cross_check_cap) {
  if (m < 1) throw Error(ErrorKind::PreconditionViolated, "level must be at least 1");
  const Modulus mod = make_modulus(w.p, m);
  const ConjugatorExponent ce = conjugator_exponent(w, m);
  LocalVerification out;
  out.level = m;
  out.modulus = Int(static_cast<unsigned long>(mod.value));
  out.k = ce.k;
  out.conjugator = ut_pow(w.b, ce.k);
  out.exact = reduce_mod(conjugate_by(w.u, out.conjugator), mod) == reduce_mod(w.v, mod);
  if (!out.exact)
    throw Error(ErrorKind::LocalCheckFailed, "b^" + ce.k.get_str() + " does not conjugate u to v mod " +
                                                 out.modulus.get_str());
  try {
    const CongruenceImage image = finite_closure(reduced_generators(spec, mod), cross_check_cap);
    const auto iu = image.index_of(reduce_mod(w.u, mod));
    const auto iv = image.index_of(reduce_mod(w.v, mod));
    if (!iu || !iv) throw Error(ErrorKind::LocalCheckFailed, "witness pair is outside the congruence image");
    out.quotient_order = image.group().order();
    out.orbit_conjugate = conjugate_in_finite(image.group(), *iu, *iv).conjugate;
    if (!*out.orbit_conjugate)
      throw Error(ErrorKind::LocalCheckFailed, "orbit search separates the witness pair mod " + out.modulus.get_str());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimit) throw;
  }
  return out;
}

SeparationCertificate separate_prop4(const ProductGroupSpec& g, const ProductElement& a, const ProductElement& b,
                                     const Int& p, std::size_t max_order) {
  if (!is_abelian(g.matrix_part).abelian)
    throw Error(ErrorKind::NotApplicable, "matrix part of " + g.name() + " is not abelian");
  if (!g.finite_part.is_p_group(p))
    throw Error(ErrorKind::NotApplicable, "torsion subgroup of " + g.name() + " has order " +
                                              std::to_string(g.finite_part.order()) + ", not a power of " + p.get_str());
  const auto ans = conjugate_in_product(g, a, b);
  if (ans.conjugate) throw AreConjugateError(*ans.conjugator);

  SeparationCertificate cert;
  cert.p = p;
  if (!(a.matrix == b.matrix)) {
    cert.branch = "abelian-part";
    unsigned long least = std::numeric_limits<unsigned long>::max();
    const IntVector da = a.matrix.upper_entries();
    const IntVector db = b.matrix.upper_entries();
    for (std::size_t i = 0; i < da.size(); ++i)
      if (da[i] != db[i]) least = std::min(least, valuation(da[i] - db[i], p));
    cert.level = static_cast<unsigned>(least + 1);
  } else {
    // with N = p-th powers of the matrix part, N meets F trivially
    cert.branch = "torsion-part";
    cert.level = 1;
  }
  GroupHom<ProductElement> hom = product_congruence_hom(g, p, cert.level, max_order);
  cert.quotient = hom.codomain;
  cert.image_a = hom(a);
  cert.image_b = hom(b);
  if (!cert.quotient.is_p_group(p))
    throw Error(ErrorKind::VerificationFailed, "separating quotient is not a " + p.get_str() + "-group");
  cert.nonconjugate = !conjugate_in_finite(cert.quotient, cert.image_a, cert.image_b).conjugate;
  if (!cert.nonconjugate)
    throw Error(ErrorKind::VerificationFailed, "images are conjugate in the " + cert.branch + " quotient");
  return cert;
}

namespace {

TowerLevel scan_level(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y, const Int& p,
                      unsigned k, const ScanOptions& options) {
  TowerLevel row;
  row.level = k;
  const Modulus mod = make_modulus(p, k);
  const ResidueUTElement rx = reduce_mod(x, mod);
  const ResidueUTElement ry = reduce_mod(y, mod);
  if (rx == ry) {
    row.conjugate = true;
    row.method = "equal";
    return row;
  }
  if (rx.is_identity() || ry.is_identity()) {
    row.conjugate = false;
    row.method = "identity";
    return row;
  }
  std::optional<bool> by_witness;
  if (options.witness && options.witness->u == x && options.witness->v == y) {
    const ConjugatorExponent ce = conjugator_exponent(*options.witness, k);
    const UTElement g = ut_pow(options.witness->b, ce.k);
    if (reduce_mod(conjugate_by(x, g), mod) == ry) by_witness = true;
  }
  try {
    const CongruenceImage image = finite_closure(reduced_generators(spec, mod), options.max_order);
    const auto ix = image.index_of(rx);
    const auto iy = image.index_of(ry);
    if (!ix || !iy) throw Error(ErrorKind::PreconditionViolated, "scan pair is outside the congruence image");
    row.quotient_order = image.group().order();
    row.conjugate = conjugate_in_finite(image.group(), *ix, *iy).conjugate;
    row.method = "orbit";
    if (by_witness) {
      if (!*row.conjugate)
        throw Error(ErrorKind::LocalCheckFailed, "orbit search contradicts the witness conjugator at level " +
                                                     std::to_string(k));
      row.method = "orbit+witness-conjugator";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimit) throw;
    row.size_limited = true;
    if (by_witness) {
      row.conjugate = true;
      row.method = "witness-conjugator";
    } else {
      row.method = "undetermined";
    }
  }
  return row;
}

}  // namespace

TowerScan scan_tower(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y, const Int& p,
                     unsigned depth, const ScanOptions& options) {
  TowerScan scan;
  scan.levels.resize(depth);
  std::vector<std::exception_ptr> errors(depth);
  const auto levels = static_cast<std::int64_t>(depth);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < levels; ++i) {
    try {
      scan.levels[std::size_t(i)] = scan_level(spec, x, y, p, static_cast<unsigned>(i + 1), options);
    } catch (...) {
      errors[std::size_t(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool undetermined = false;
  for (const auto& row : scan.levels) {
    if (row.conjugate == false && !scan.separated_at) scan.separated_at = row.level;
    if (!row.conjugate) undetermined = true;
  }
  if (scan.separated_at) {
    scan.summary = "separated at level " + std::to_string(*scan.separated_at);
  } else if (undetermined) {
    scan.summary = "no separation found; some levels undetermined";
  } else {
    scan.summary = "conjugate at all " + std::to_string(depth) + " levels";
  }
  return scan;
}

unsigned residual_depth(const UTElement& g, const Int& p) {
  if (g.is_identity()) throw Error(ErrorKind::IdentityElement, "residual_depth: element is the identity");
  unsigned long least = std::numeric_limits<unsigned long>::max();
  for (const auto& x : g.upper_entries())
    if (x != 0) least = std::min(least, valuation(x, p));
  return static_cast<unsigned>(least + 1);
}

}  // namespace nilsep
