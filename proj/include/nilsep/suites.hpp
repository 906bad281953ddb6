#pragma once

// Randomized and exhaustive self-check suites shared by the CLI selftest,
// the unit tests and the acceptance runner. Each suite is deterministic for
// a given seed.

#include <cstdint>
#include <string>
#include <vector>

#include "nilsep/finite_group.hpp"
#include "nilsep/lattice.hpp"

namespace nilsep::suites {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
};

/// A U = H, |det U| = 1 and H in Hermite form; U A V = D in Smith form.
/// Random matrices up to 5x5 with entries in [-9, 9].
SuiteResult hnf_snf_identities(std::uint64_t seed, std::size_t count);

/// lattice_contains against exhaustive search over coefficients in
/// [-10, 10], lattices of rank <= 3 with generator entries in [-4, 4].
SuiteResult lattice_vs_bruteforce(std::uint64_t seed, std::size_t count);

/// power_solvable against scaled-lattice membership and, in rank 1,
/// integer divisibility.
SuiteResult power_solvable_consistency(std::uint64_t seed, std::size_t count);

/// a * mod_inverse(a, m) == 1 (mod m) for every coprime pair with m <= bound;
/// NotCoprime otherwise.
SuiteResult mod_inverse_exhaustive(unsigned bound);

/// class2_conjugate on the Heisenberg group against orbit search in
/// UT(3, Z/8) and UT(3, Z/27): YES must survive in both quotients, NO must
/// be confirmed in some prime-power quotient.
SuiteResult class2_vs_orbit(std::uint64_t seed, std::size_t count);


/// S3, D4, Q8, C6, D4xC2.
std::vector<FiniteGroup> default_corpus();

/// The coset criterion on every group, every normal subgroup and p in {2, 3}.
SuiteResult coset_criterion_corpus(const std::vector<FiniteGroup>& corpus, const std::vector<Int>& primes = {2, 3});

/// Every quotient of every 2-group in the corpus is conjugacy 2-separable.
SuiteResult quotient_corpus(const std::vector<FiniteGroup>& corpus);

/// The lattice-core suites with their default sizes.
std::vector<SuiteResult> lattice_suites(std::uint64_t seed = 20240601);

}  // namespace nilsep::suites
