// Acceptance criteria 1-8. One PASS/FAIL line per criterion; exit status is
// the number of failures. Tolerances are exact; runtime limits in kCriteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "nilsep/conjugacy.hpp"
#include "nilsep/group_presets.hpp"
#include "nilsep/report.hpp"
#include "nilsep/separability.hpp"
#include "nilsep/suites.hpp"

using namespace nilsep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

ProductGroupSpec preset(const char* name) { return *presets::product_by_name(name); }

bool all_checks_pass(const RunReport& r, Outcome& o, const std::string& label) {
  if (const ReportCheck* f = r.first_failure()) {
    o.require(false, label + ": check " + f->name + " failed");
    return false;
  }
  return true;
}

Outcome heisenberg_witness_p2() {
  Outcome o;
  const RunReport r = run_witness({"heisenberg", preset("heisenberg")}, 2, 6, RunOptions{});
  all_checks_pass(r, o, "witness report");
  const Json& res = r.result;
  o.require(res.at("q") == 3 && res.at("n") == 1, "expected q = 3, n = 1");
  o.require(res.at("u").at("coords") == "(3,0,0)" && res.at("v").at("coords") == "(3,0,1)",
            "expected pair (3,0,0), (3,0,1)");
  o.require(res.at("global").at("divisibility_nonconjugate") == true &&
                res.at("global").at("lattice_nonconjugate") == true,
            "global non-conjugacy");
  const std::vector<std::size_t> orders{8, 64, 512};
  for (unsigned m = 1; m <= 6; ++m) {
    const Json& l = res.at("local")[m - 1];
    const Int mod = ipow(Int(2), m);
    o.require(l.at("exact") == true, "local check at m = " + std::to_string(m));
    o.require(json_to_int(l.at("k")) == mod_inverse(3, mod), "k != 3^-1 mod 2^" + std::to_string(m));
    if (m <= 3)
      o.require(l.at("orbit_conjugate") == true && l.at("quotient_order") == orders[m - 1],
                "orbit confirmation at level " + std::to_string(m));
  }
  return o;
}

Outcome swapped_and_ut4() {
  Outcome o;
  const RunReport h3 = run_witness({"heisenberg", preset("heisenberg")}, 3, 6, RunOptions{});
  all_checks_pass(h3, o, "heisenberg p=3");
  o.require(h3.result.at("q") == 2, "heisenberg p=3: expected q = 2");
  for (long p : {2L, 3L}) {
    const RunReport u = run_witness({"ut4", preset("ut4")}, p, 6, RunOptions{});
    all_checks_pass(u, o, "ut4 p=" + std::to_string(p));
    o.require(u.result.at("global").at("divisibility_nonconjugate") == true,
              "ut4 p=" + std::to_string(p) + ": divisibility certificate");
  }
  return o;
}

Outcome classifier_table() {
  Outcome o;
  struct Row {
    const char* name;
    long p;
    bool separable;
    const char* reason;
  };
  const Row rows[] = {
      {"z2", 2, true, "separable"},          {"z2", 3, true, "separable"},
      {"zxq8", 2, true, "separable"},        {"zxd4", 2, true, "separable"},
      {"zxc2", 2, true, "separable"},        {"heisenberg", 2, false, "quotient-non-abelian"},
      {"heisenberg", 3, false, "quotient-non-abelian"}, {"heisenberg", 5, false, "quotient-non-abelian"},
      {"heisenberg", 7, false, "quotient-non-abelian"}, {"zxc3", 2, false, "torsion-not-p-group"},
      {"heisxc2", 2, false, "quotient-non-abelian"},
  };
  for (const Row& row : rows) {
    const auto v = classify(preset(row.name), row.p);
    o.require(v.separable == row.separable && v.reason == row.reason,
              std::string(row.name) + " p=" + std::to_string(row.p) + ": got " + v.reason);
  }
  return o;
}

Outcome zxd4_separation() {
  Outcome o;
  const ProductGroupSpec g = preset("zxd4");
  const UTElement t = g.matrix_part.generators[0];
  std::map<unsigned, GroupHom<ProductElement>> homs;
  std::size_t separated = 0, conjugate = 0;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (Index f = 0; f < 8; ++f)
        for (Index h = 0; h < 8; ++h) {
          const ProductElement a{ut_pow(t, x), f}, b{ut_pow(t, y), h};
          const std::string label = format_element(g, a) + " vs " + format_element(g, b);
          const bool truth = conjugate_in_product(g, a, b).conjugate;
          try {
            const SeparationCertificate cert = separate_prop4(g, a, b, 2);
            ++separated;
            o.require(!truth, label + ": separated a conjugate pair");
            auto it = homs.find(cert.level);
            if (it == homs.end()) it = homs.emplace(cert.level, product_congruence_hom(g, 2, cert.level)).first;
            const auto& hom = it->second;
            o.require(hom.codomain.is_p_group(2) && hom.codomain.order() == cert.quotient.order(),
                      label + ": quotient is not the expected 2-group");
            o.require(!conjugate_in_finite(hom.codomain, hom(a), hom(b)).conjugate,
                      label + ": images conjugate by orbit search");
          } catch (const AreConjugateError& e) {
            ++conjugate;
            o.require(truth, label + ": reported conjugate");
            o.require(product_conj(g, a, e.conjugator()) == b, label + ": conjugator does not verify");
          }
        }
  o.require(separated + conjugate == 49 * 64, "pair count");
  if (o.pass) o.detail = std::to_string(separated) + " separated, " + std::to_string(conjugate) + " conjugate";
  return o;
}

Outcome suite_outcome(const suites::SuiteResult& s) {
  Outcome o;
  o.require(s.ok(), s.name + ": " + s.first_failure);
  o.require(s.cases > 0, s.name + ": no cases");
  if (o.pass) o.detail = std::to_string(s.cases) + " cases";
  return o;
}

Outcome coset_criterion() {
  return suite_outcome(suites::coset_criterion_corpus(suites::default_corpus(), {2, 3}));
}

Outcome quotient_separability() { return suite_outcome(suites::quotient_corpus(suites::default_corpus())); }

unsigned min_valuation(const UTElement& g, const Int& p) {
  unsigned best = ~0u;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (g(i, j) == 0) continue;
      Int x = g(i, j);
      unsigned v = 0;
      while (divides(p, x)) {
        x /= p;
        ++v;
      }
      best = std::min(best, v);
    }
  return best;
}

Outcome heisenberg_residuality() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> entry(-64, 64);
  const Int primes[] = {2, 3, 5};
  for (int i = 0; i < 100; ++i) {
    IntMatrix m = IntMatrix::identity(3);
    do {
      m(0, 1) = entry(rng);
      m(1, 2) = entry(rng);
      m(0, 2) = entry(rng);
    } while (m(0, 1) == 0 && m(1, 2) == 0 && m(0, 2) == 0);
    const UTElement g(m);
    const Int& p = primes[i % 3];
    const unsigned d = residual_depth(g, p);
    const std::string label = g.str() + " p=" + p.get_str();
    o.require(d == min_valuation(g, p) + 1, label + ": depth disagrees with valuation");
    o.require(!reduce_mod(g, p, d).is_identity(), label + ": identity at residual depth");
    for (unsigned k = 1; k < d; ++k) o.require(reduce_mod(g, p, k).is_identity(), label + ": shallower level");
  }
  return o;
}

Outcome oracle_suites() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& s : {suites::lattice_vs_bruteforce(8001, 300), suites::class2_vs_orbit(8002, 200),
                        suites::hnf_snf_identities(8003, 500)}) {
    o.require(s.ok(), s.name + ": " + s.first_failure);
    cases += s.cases;
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {1, "heisenberg witness, p=2", 2.0, heisenberg_witness_p2},
    {2, "heisenberg p=3 and ut4 p=2,3 witnesses", 5.0, swapped_and_ut4},
    {3, "classifier table", 1.0, classifier_table},
    {4, "Z x D4 constructive separation, exhaustive", 10.0, zxd4_separation},
    {5, "coset criterion on the finite corpus", 30.0, coset_criterion},
    {6, "quotients of finite 2-groups", 10.0, quotient_separability},
    {7, "heisenberg residual depth", 1.0, heisenberg_residuality},
    {8, "oracle-equivalence suites", 30.0, oracle_suites},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.limit_s) o.require(false, "runtime over limit");
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " C" << c.id << " " << c.name << " (" << std::fixed
         << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures;
}
