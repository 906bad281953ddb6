#include "nilsep/conjugacy.hpp"

#include <algorithm>
#include <set>

#include "nilsep/kernels.hpp"

namespace nilsep {

const char* to_string(ConjugacyMethod m) {
  switch (m) {
    case ConjugacyMethod::Orbit: return "orbit";
    case ConjugacyMethod::Class2Lattice: return "class2-lattice";
    case ConjugacyMethod::Product: return "product";
  }
  return "?";
}

const char* to_string(CosetVerdict v) {
  switch (v) {
    case CosetVerdict::Yes: return "YES";
    case CosetVerdict::No: return "NO";
    case CosetVerdict::Vacuous: return "VACUOUS";
  }
  return "?";
}

ConjugacyAnswer<Index> conjugate_in_finite(const FiniteGroup& g, Index x, Index y) {
  if (x == y) return {true, g.identity(), ConjugacyMethod::Orbit};
  constexpr Index unseen = ~Index(0);
  std::vector<Index> conjugator(g.order(), unseen);
  std::vector<Index> queue{x};
  conjugator[x] = g.identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index z = queue[i];
    for (Index h : g.generators()) {
      const Index w = g.conj(z, h);
      if (conjugator[w] != unseen) continue;
      conjugator[w] = g.mul(conjugator[z], h);
      if (w == y) {
        if (g.conj(x, conjugator[w]) != y)
          throw Error(ErrorKind::VerificationFailed, "orbit conjugator does not re-verify in " + g.label());
        return {true, conjugator[w], ConjugacyMethod::Orbit};
      }
      queue.push_back(w);
    }
  }
  return {false, std::nullopt, ConjugacyMethod::Orbit};
}

ConjugacyAnswer<UTElement> class2_conjugate(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y) {
  if (spec.declared_class > 2)
    throw Error(ErrorKind::ClassTooHigh,
                "class2_conjugate: " + spec.name + " has class " + std::to_string(spec.declared_class));
  const ConjugacyAnswer<UTElement> no{false, std::nullopt, ConjugacyMethod::Class2Lattice};
  if (x == y) return {true, UTElement::identity(spec.n), ConjugacyMethod::Class2Lattice};

  const CentralCoordinates coords(spec);
  const auto diff = coords(ut_inv(x) * y);
  if (!diff || !lattice_contains(coords.center_lattice(), *diff).member) return no;

  std::vector<IntVector> comms;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    auto v = coords(commutator(x, spec.generators[i]));
    if (!v || !lattice_contains(coords.center_lattice(), *v).member)
      throw Error(ErrorKind::PreconditionViolated,
                  "[x, " + spec.generator_name(i) + "] is not central; x is not in " + spec.name);
    comms.push_back(std::move(*v));
  }
  const Membership m = lattice_contains(Lattice(upper_count(spec.n), std::move(comms)), *diff);
  if (!m.member) return no;

  // g -> [x, g] is a homomorphism into the centre, so prod g_i^{e_i} works
  UTElement g = UTElement::identity(spec.n);
  for (std::size_t i = 0; i < spec.generators.size(); ++i) g = g * ut_pow(spec.generators[i], m.coefficients[i]);
  if (!(conjugate_by(x, g) == y))
    throw Error(ErrorKind::VerificationFailed, "class-2 conjugator does not re-verify in " + spec.name);
  return {true, g, ConjugacyMethod::Class2Lattice};
}

ConjugacyAnswer<ProductElement> conjugate_in_product(const ProductGroupSpec& g, const ProductElement& a,
                                                     const ProductElement& b) {
  const AbelianCheck ab = is_abelian(g.matrix_part);
  if (!ab.abelian)
    throw Error(ErrorKind::NonAbelianPart, "conjugate_in_product: matrix part of " + g.name() + " is not abelian");
  if (!(a.matrix == b.matrix)) return {false, std::nullopt, ConjugacyMethod::Product};
  const auto f = conjugate_in_finite(g.finite_part, a.finite, b.finite);
  if (!f.conjugate) return {false, std::nullopt, ConjugacyMethod::Product};
  ProductElement h{UTElement::identity(g.matrix_part.n), *f.conjugator};
  if (!(product_conj(g, a, h) == b))
    throw Error(ErrorKind::VerificationFailed, "product conjugator does not re-verify");
  return {true, h, ConjugacyMethod::Product};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& x, std::size_t budget) {
  if (x.order() > budget)
    throw Error(ErrorKind::SizeLimit, "normal subgroup enumeration: order " + std::to_string(x.order()) +
                                          " exceeds budget " + std::to_string(budget));
  const std::vector<Index> labels = kernels::parallel::class_labels(x);
  std::vector<std::vector<Index>> classes;
  {
    std::vector<int> slot(x.order(), -1);
    for (Index e = 0; e < x.order(); ++e) {
      if (slot[labels[e]] < 0) {
        slot[labels[e]] = static_cast<int>(classes.size());
        classes.emplace_back();
      }
      classes[slot[labels[e]]].push_back(e);
    }
  }
  // normal closures of single classes, then joins until nothing new appears
  std::set<std::vector<bool>> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.mask).second) found.push_back(std::move(s));
  };
  add(make_subset(x, {x.identity()}));
  for (const auto& c : classes) add(generated_subgroup(x, c));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Index> gens = found[i].elements;
      gens.insert(gens.end(), found[j].elements.begin(), found[j].elements.end());
      add(generated_subgroup(x, gens));
    }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

std::vector<Subgroup> enumerate_p_quotient_kernels(const FiniteGroup& x, const Int& p, std::size_t budget) {
  std::vector<Subgroup> out;
  for (auto& h : normal_subgroups(x, budget)) {
    const Int index(static_cast<unsigned long>(x.order() / h.order()));
    if (prime_power_exponent(index, p)) out.push_back(std::move(h));
  }
  return out;
}

namespace {

// Shared state for repeated coset queries against one ambient group.
struct CosetContext {
  const FiniteGroup& x;
  std::vector<Index> labels;
  std::vector<Subgroup> kernels;

  CosetContext(const FiniteGroup& g, const Int& p, std::size_t budget)
      : x(g), labels(::nilsep::kernels::parallel::class_labels(g)), kernels(enumerate_p_quotient_kernels(g, p, budget)) {}

  // Some conjugate of a lies in the set s.
  bool meets(Index a, const std::vector<bool>& s) const {
    for (Index e = 0; e < x.order(); ++e)
      if (s[e] && labels[e] == labels[a]) return true;
    return false;
  }

  // b * n1 * n2 as a mask
  std::vector<bool> coset(Index b, const Subgroup& n1, const Subgroup* n2) const {
    std::vector<bool> s(x.order(), false);
    for (Index u : n1.elements) {
      const Index bu = x.mul(b, u);
      if (!n2) {
        s[bu] = true;
        continue;
      }
      for (Index v : n2->elements) s[x.mul(bu, v)] = true;
    }
    return s;
  }

  CosetAnswer query(const Subgroup& n, Index b, Index a) const {
    if (meets(a, coset(b, n, nullptr))) return {CosetVerdict::Vacuous, std::nullopt};
    for (const auto& h : kernels)
      if (!meets(a, coset(b, n, &h))) return {CosetVerdict::Yes, h};
    return {CosetVerdict::No, std::nullopt};
  }
};

}  // namespace

CosetAnswer coset_conjugacy_separable(const CosetQuery& q) {
  if (!is_normal(q.ambient, q.normal))
    throw Error(ErrorKind::PreconditionViolated, "coset query: N is not a normal subgroup");
  const CosetContext ctx(q.ambient, q.p, kDefaultEnumerationBudget);
  return ctx.query(q.normal, q.coset_rep, q.probe);
}

SeparabilityCheck conjugacy_p_separable(const FiniteGroup& x, const Int& p, std::size_t budget) {
  const CosetContext ctx(x, p, budget);
  std::vector<Index> reps;
  for (Index e = 0; e < x.order(); ++e)
    if (ctx.labels[e] == e) reps.push_back(e);
  SeparabilityCheck out;
  const Subgroup trivial = make_subset(x, {x.identity()});
  for (Index a : reps)
    for (Index b : reps) {
      if (a == b) continue;
      ++out.pairs_checked;
      if (ctx.query(trivial, b, a).verdict == CosetVerdict::No) {
        out.separable = false;
        out.failing_pair = std::make_pair(a, b);
        return out;
      }
    }
  return out;
}

CosetCriterionReport prop1_equivalence_check(const FiniteGroup& x, const Subgroup& n, const Int& p, std::size_t budget) {
  if (!is_normal(x, n)) throw Error(ErrorKind::PreconditionViolated, "coset criterion: N is not normal");
  const CosetContext ctx(x, p, budget);
  const Quotient q = quotient(x, n);

  CosetCriterionReport r;
  r.cosets_separable = true;
  std::vector<bool> rep_done(q.group.order(), false);
  for (Index b = 0; b < x.order(); ++b) {
    if (rep_done[q.projection[b]]) continue;
    rep_done[q.projection[b]] = true;
    for (Index a = 0; a < x.order(); ++a) {
      ++r.coset_queries;
      const CosetVerdict v = ctx.query(n, b, a).verdict;
      if (v == CosetVerdict::Vacuous) ++r.vacuous_queries;
      if (v == CosetVerdict::No) r.cosets_separable = false;
    }
  }
  r.quotient_separable = conjugacy_p_separable(q.group, p, budget).separable;
  r.holds = r.cosets_separable == r.quotient_separable;
  return r;
}

}  // namespace nilsep
