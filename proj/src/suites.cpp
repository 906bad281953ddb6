#include "nilsep/suites.hpp"

#include <functional>
#include <map>
#include <random>

#include "nilsep/conjugacy.hpp"
#include "nilsep/group_presets.hpp"

namespace nilsep::suites {

void SuiteResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

std::string hermite_violation(const HermiteForm& f) {
  const IntMatrix& h = f.H;
  for (std::size_t j = 0; j < f.rank; ++j) {
    const std::size_t pr = f.pivot_rows[j];
    if (j > 0 && pr <= f.pivot_rows[j - 1]) return "pivot rows not increasing";
    for (std::size_t r = 0; r < pr; ++r)
      if (h(r, j) != 0) return "nonzero above pivot";
    if (h(pr, j) <= 0) return "non-positive pivot";
    for (std::size_t k = 0; k < j; ++k)
      if (h(pr, k) < 0 || h(pr, k) >= h(pr, j)) return "entry left of pivot not reduced";
  }
  for (std::size_t j = f.rank; j < h.cols(); ++j)
    for (std::size_t r = 0; r < h.rows(); ++r)
      if (h(r, j) != 0) return "nonzero column beyond rank";
  return {};
}

std::string smith_violation(const IntMatrix& a, const SmithForm& f) {
  if (!(f.U * a * f.V == f.D)) return "U A V != D";
  if (abs(determinant(f.U)) != 1 || abs(determinant(f.V)) != 1) return "U or V not unimodular";
  for (std::size_t r = 0; r < f.D.rows(); ++r)
    for (std::size_t c = 0; c < f.D.cols(); ++c)
      if (r != c && f.D(r, c) != 0) return "D not diagonal";
  const auto d = f.invariants();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return "negative invariant";
    if (i + 1 < d.size() && !divides(d[i], d[i + 1])) return "divisibility chain broken";
  }
  return {};
}

}  // namespace

SuiteResult hnf_snf_identities(std::uint64_t seed, std::size_t count) {
  SuiteResult s{"hnf-snf-identities", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, 5));
    const IntMatrix a = random_matrix(rng, rows, cols, 9);
    ++s.cases;
    const HermiteForm h = hnf(a);
    std::string why;
    if (!(a * h.U == h.H))
      why = "A U != H";
    else if (abs(determinant(h.U)) != 1)
      why = "U not unimodular";
    else
      why = hermite_violation(h);
    if (why.empty()) why = smith_violation(a, snf(a));
    if (!why.empty()) s.fail(why + " for " + a.str());
  }
  return s;
}

SuiteResult lattice_vs_bruteforce(std::uint64_t seed, std::size_t count) {
  SuiteResult s{"lattice-vs-bruteforce", 0, 0, {}};
  Rng rng(seed);
  constexpr long kCoeff = 10;
  for (std::size_t i = 0; i < count; ++i) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto ngens = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<IntVector> gens(ngens, IntVector(dim));
    for (auto& g : gens)
      for (auto& x : g) x = uniform(rng, -4, 4);
    IntVector v(dim);
    if (uniform(rng, 0, 1) == 0) {
      for (const auto& g : gens) {
        const long c = uniform(rng, -kCoeff, kCoeff);
        for (std::size_t k = 0; k < dim; ++k) v[k] += c * g[k];
      }
    } else {
      for (auto& x : v) x = uniform(rng, -12, 12);
    }
    const Lattice l(dim, gens);
    const Membership m = lattice_contains(l, v);
    ++s.cases;

    bool brute = false;
    std::vector<long> c(ngens, -kCoeff);
    while (!brute) {
      IntVector w(dim);
      for (std::size_t j = 0; j < ngens; ++j)
        for (std::size_t k = 0; k < dim; ++k) w[k] += c[j] * gens[j][k];
      brute = w == v;
      std::size_t j = 0;
      while (j < ngens && c[j] == kCoeff) c[j++] = -kCoeff;
      if (j == ngens) break;
      ++c[j];
    }
    if (m.member && !(l.generator_matrix() * m.coefficients == v)) {
      s.fail("certificate does not reproduce " + to_string(v));
    } else if (brute && !m.member) {
      s.fail("bounded search finds " + to_string(v) + " but membership says NO");
    }
  }
  return s;
}

SuiteResult power_solvable_consistency(std::uint64_t seed, std::size_t count) {
  SuiteResult s{"power-solvable", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto ngens = static_cast<std::size_t>(uniform(rng, 1, dim));
    std::vector<IntVector> gens(ngens, IntVector(dim));
    for (auto& g : gens)
      for (auto& x : g) x = uniform(rng, -4, 4);
    IntVector c(dim);
    std::vector<long> coeff;
    for (const auto& g : gens) {
      coeff.push_back(uniform(rng, -12, 12));
      for (std::size_t k = 0; k < dim; ++k) c[k] += coeff.back() * g[k];
    }
    const Int e = uniform(rng, 1, 6);
    const Lattice l(dim, gens);
    ++s.cases;
    const PowerRoot r = power_solvable(l, c, e);
    const bool scaled_member = lattice_contains(l.scaled(e), c).member;
    if (r.solvable != scaled_member) {
      s.fail("power_solvable disagrees with scaled lattice for " + to_string(c));
      continue;
    }
    if (r.solvable && !(scaled(r.root, e) == c)) s.fail("root does not reproduce " + to_string(c));
    if (r.solvable && !lattice_contains(l, r.root).member) s.fail("root outside the lattice");
    if (dim == 1 && ngens == 1 && gens[0][0] != 0 && r.solvable != divides(e, Int(coeff[0])))
      s.fail("rank-1 divisibility mismatch");
  }
  return s;
}

SuiteResult mod_inverse_exhaustive(unsigned bound) {
  SuiteResult s{"mod-inverse", 0, 0, {}};
  for (unsigned m = 2; m <= bound; ++m)
    for (unsigned a = 1; a < m; ++a) {
      ++s.cases;
      Int g;
      mpz_gcd_ui(g.get_mpz_t(), Int(a).get_mpz_t(), m);
      if (g == 1) {
        const Int k = mod_inverse(a, m);
        if (k < 1 || k >= m || floor_mod(k * a, Int(m)) != 1)
          s.fail("mod_inverse(" + std::to_string(a) + ", " + std::to_string(m) + ")");
      } else {
        try {
          mod_inverse(a, m);
          s.fail("mod_inverse(" + std::to_string(a) + ", " + std::to_string(m) + ") did not reject");
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotCoprime) s.fail("wrong error kind for non-coprime pair");
        }
      }
    }
  return s;
}

SuiteResult class2_vs_orbit(std::uint64_t seed, std::size_t count) {
  SuiteResult s{"class2-vs-orbit", 0, 0, {}};
  const MatrixGroupSpec h = presets::heisenberg();
  std::map<std::pair<unsigned long, unsigned>, CongruenceImage> images;
  auto image = [&](unsigned long p, unsigned level) -> const CongruenceImage& {
    const auto key = std::make_pair(p, level);
    auto it = images.find(key);
    if (it == images.end())
      it = images.emplace(key, finite_closure(reduced_generators(h, make_modulus(p, level)), 1u << 16)).first;
    return it->second;
  };
  auto orbit_conjugate = [&](unsigned long p, unsigned level, const UTElement& x, const UTElement& y) {
    const CongruenceImage& img = image(p, level);
    const auto ix = img.index_of(reduce_mod(x, img.modulus()));
    const auto iy = img.index_of(reduce_mod(y, img.modulus()));
    return conjugate_in_finite(img.group(), *ix, *iy).conjugate;
  };
  static const std::pair<unsigned long, unsigned> kFallback[] = {{2, 1}, {2, 2}, {2, 4}, {2, 5}, {3, 1}, {3, 2},
                                                                 {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}};

  Rng rng(seed);
  auto coords = [&](long bound) {
    return IntVector{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
  };
  const UTElement c = h.center_gens[0];
  for (std::size_t i = 0; i < count; ++i) {
    const UTElement x = from_coordinates(h, coords(6));
    UTElement y = x;
    switch (i % 3) {
      case 0: y = conjugate_by(x, from_coordinates(h, coords(3))); break;
      case 1: y = x * ut_pow(c, uniform(rng, -6, 6)); break;
      default: y = from_coordinates(h, coords(6)); break;
    }
    ++s.cases;
    const auto ans = class2_conjugate(h, x, y);
    if (ans.conjugate) {
      if (!orbit_conjugate(2, 3, x, y) || !orbit_conjugate(3, 3, x, y))
        s.fail("conjugate in G but separated mod 8 or 27: " + x.str() + " " + y.str());
      continue;
    }
    bool separated = !orbit_conjugate(2, 3, x, y) || !orbit_conjugate(3, 3, x, y);
    for (const auto& [p, level] : kFallback) {
      if (separated) break;
      separated = !orbit_conjugate(p, level, x, y);
    }
    if (!separated) s.fail("non-conjugate in G but no tested quotient separates " + x.str() + " " + y.str());
  }
  return s;
}

std::vector<FiniteGroup> default_corpus() {
  return {presets::symmetric3(), presets::dihedral4(), presets::quaternion8(), presets::cyclic(6),
          direct_product(presets::dihedral4(), presets::cyclic(2))};
}

SuiteResult coset_criterion_corpus(const std::vector<FiniteGroup>& corpus, const std::vector<Int>& primes) {
  SuiteResult s{"coset-criterion", 0, 0, {}};
  for (const auto& x : corpus)
    for (const auto& n : normal_subgroups(x))
      for (const auto& p : primes) {
        ++s.cases;
        const CosetCriterionReport r = prop1_equivalence_check(x, n, p);
        if (!r.holds)
          s.fail(x.label() + " N of order " + std::to_string(n.order()) + " p=" + p.get_str() +
                 ": cosets " + (r.cosets_separable ? "separable" : "not separable") + ", quotient " +
                 (r.quotient_separable ? "separable" : "not separable"));
      }
  return s;
}

SuiteResult quotient_corpus(const std::vector<FiniteGroup>& corpus) {
  SuiteResult s{"p-group-quotients", 0, 0, {}};
  for (const auto& x : corpus) {
    if (!x.is_p_group(2)) continue;
    for (const auto& n : normal_subgroups(x)) {
      ++s.cases;
      const Quotient q = quotient(x, n);
      if (!conjugacy_p_separable(q.group, 2).separable)
        s.fail(x.label() + "/N with |N| = " + std::to_string(n.order()) + " is not conjugacy 2-separable");
    }
  }
  return s;
}

std::vector<SuiteResult> lattice_suites(std::uint64_t seed) {
  return {hnf_snf_identities(seed, 500), lattice_vs_bruteforce(seed + 1, 300),
          power_solvable_consistency(seed + 2, 300), mod_inverse_exhaustive(1000)};
}

}  // namespace nilsep::suites
