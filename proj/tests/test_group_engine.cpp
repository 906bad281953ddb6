#include <doctest.h>

#include <random>

#include "nilsep/group_presets.hpp"
#include "nilsep/product_group.hpp"

using namespace nilsep;

namespace {

UTElement e(std::size_t n, std::size_t i, std::size_t j, long v = 1) {
  return UTElement::elementary(n, i - 1, j - 1, v);
}

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

UTElement random_ut(std::mt19937_64& rng, std::size_t n, int digits) {
  IntMatrix m = IntMatrix::identity(n);
  std::uniform_int_distribution<int> d(0, 9);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string s = (rng() % 2) ? "-" : "";
      for (int k = 0; k < digits; ++k) s += static_cast<char>('0' + d(rng));
      m(i, j) = Int(s, 10);
    }
  return UTElement(std::move(m));
}

}  // namespace

TEST_CASE("ut_pow examples") {
  CHECK(ut_pow(UTElement::identity(3), 1000000).is_identity());
  const UTElement a = e(3, 1, 2);
  CHECK(ut_pow(a, 3) == e(3, 1, 2, 3));
  const UTElement c = e(3, 1, 3);
  CHECK(ut_pow(c, -2) == e(3, 1, 3, -2));
  CHECK(ut_pow(c, 5) == e(3, 1, 3, 5));
  CHECK(ut_pow(a, -4) == ut_inv(ut_pow(a, 4)));
}

TEST_CASE("commutator convention") {
  const UTElement a = e(3, 1, 2), b = e(3, 2, 3);
  CHECK(commutator(a, a).is_identity());
  CHECK(commutator(a, UTElement::identity(3)).is_identity());
  // [a,b] = a^-1 b^-1 a b = I + E13
  CHECK(commutator(a, b) == e(3, 1, 3));
  CHECK(commutator(b, a) == e(3, 1, 3, -1));
  CHECK(conjugate_by(a, b) == a * e(3, 1, 3));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(ut_mul(UTElement::identity(2), UTElement::identity(3)), Error);
  CHECK_THROWS_AS(UTElement(IntMatrix::from_rows({{1, 0}, {1, 1}})), Error);
  CHECK_THROWS_AS(UTElement(IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("group axioms with thirty-digit entries") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 4;
    const UTElement x = random_ut(rng, n, 30), y = random_ut(rng, n, 30), z = random_ut(rng, n, 30);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * ut_inv(x)).is_identity());
    CHECK((ut_inv(x) * x).is_identity());
    CHECK(x * UTElement::identity(n) == x);
    CHECK(ut_pow(x, 7) == ut_pow(x, 3) * ut_pow(x, 4));
  }
}

TEST_CASE("verify_spec accepts the presets") {
  for (const auto& name : {"z", "z2", "heisenberg", "heis5", "ut4"}) {
    INFO(name);
    const auto spec = *presets::matrix_by_name(name);
    CHECK(check_spec(spec).ok());
    CHECK_NOTHROW(verify_spec(spec));
  }
  CHECK(presets::free_abelian2().declared_class == 1);
  CHECK_FALSE(presets::free_abelian2().z2_rep.has_value());
}

TEST_CASE("verify_spec rejects a non-central center generator") {
  MatrixGroupSpec s = presets::heisenberg();
  s.center_gens = {s.generators[0]};
  try {
    verify_spec(s);
    FAIL("expected SpecRejected");
  } catch (const SpecRejectedError& err) {
    CHECK(err.kind() == ErrorKind::SpecRejected);
    CHECK(err.failed().name == "center-commutes");
    CHECK(err.failed().detail.find("b") != std::string::npos);
  }
}

TEST_CASE("verify_spec rejects every single mutation of the center data") {
  for (const auto& name : {"z", "z2", "heisenberg", "heis5", "ut4"}) {
    const MatrixGroupSpec spec = *presets::matrix_by_name(name);
    std::vector<std::pair<std::string, MatrixGroupSpec>> mutants;
    for (std::size_t i = 0; i < spec.center_gens.size(); ++i) {
      MatrixGroupSpec drop = spec;
      drop.center_gens.erase(drop.center_gens.begin() + static_cast<long>(i));
      mutants.emplace_back("drop center " + std::to_string(i), drop);
      MatrixGroupSpec square = spec;
      square.center_gens[i] = ut_pow(square.center_gens[i], 2);
      mutants.emplace_back("square center " + std::to_string(i), square);
      for (std::size_t j = 0; j < spec.generators.size(); ++j) {
        if (spec.generators[j] == spec.center_gens[i]) continue;
        MatrixGroupSpec swap = spec;
        swap.center_gens[i] = spec.generators[j];
        if (CentralCoordinates(swap).center_lattice() == CentralCoordinates(spec).center_lattice()) continue;
        mutants.emplace_back("center " + std::to_string(i) + " := " + spec.generator_name(j), swap);
      }
    }
    if (spec.z2_rep) {
      MatrixGroupSpec central = spec;
      central.z2_rep = spec.center_gens[0];
      mutants.emplace_back("z2_rep := center", central);
      MatrixGroupSpec id = spec;
      id.z2_rep = UTElement::identity(spec.n);
      mutants.emplace_back("z2_rep := 1", id);
      MatrixGroupSpec none = spec;
      none.z2_rep.reset();
      mutants.emplace_back("z2_rep dropped", none);
    }
    for (const auto& [what, m] : mutants) {
      INFO(name << ": " << what);
      CHECK_FALSE(check_spec(m).ok());
      CHECK_THROWS_AS(verify_spec(m), SpecRejectedError);
    }
  }
}

TEST_CASE("ut4 z2 representative outside Z2 is rejected") {
  MatrixGroupSpec s = presets::unitriangular4();
  s.z2_rep = s.generators[0];
  const auto v = check_spec(s);
  REQUIRE_FALSE(v.ok());
  CHECK(v.first_failure()->name == "z2-commutators-central");
}

TEST_CASE("central coordinates") {
  const auto h = presets::heisenberg();
  const CentralCoordinates cc(h);
  CHECK(cc.scale() == 1);
  CHECK(*cc(ut_pow(h.center_gens[0], 5)) == vec({0, 5, 0}));
  CHECK(cc.in_center(ut_pow(h.center_gens[0], -3)));
  CHECK_FALSE(cc.in_center(h.generators[0]));
}

TEST_CASE("reduce_mod examples") {
  const auto h = presets::heisenberg();
  CHECK(reduce_mod(UTElement::identity(3), 2, 3).is_identity());
  const UTElement x = from_coordinates(h, vec({3, 0, 1}));
  CHECK(reduce_mod(x, 2, 1) == reduce_mod(from_coordinates(h, vec({1, 0, 1})), 2, 1));
  const ResidueUTElement r = reduce_mod(from_coordinates(h, vec({-1, 0, 0})), 2, 3);
  CHECK(r.at(0, 1) == 7u);
}

TEST_CASE("reduce_mod is a homomorphism") {
  std::mt19937_64 rng(5);
  const std::pair<long, unsigned> levels[] = {{2, 1}, {2, 3}, {3, 2}, {5, 1}};
  for (const auto& [p, k] : levels) {
    const Modulus mod = make_modulus(p, k);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 3 + rng() % 2;
      const UTElement u = random_ut(rng, n, 6), v = random_ut(rng, n, 6);
      CHECK(reduce_mod(u * v, mod) == reduce_mod(u, mod) * reduce_mod(v, mod));
      CHECK(reduce_mod(ut_inv(u), mod) == reduce_mod(u, mod).inverse());
    }
  }
}

TEST_CASE("modulus limits") {
  CHECK_THROWS_AS(make_modulus(4, 1), Error);
  CHECK_THROWS_AS(make_modulus(2, 0), Error);
  try {
    make_modulus(2, 62);
    FAIL("expected ModulusTooLarge");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ModulusTooLarge);
  }
  CHECK(make_modulus(2, 61).value == (std::uint64_t{1} << 61));
}

TEST_CASE("finite_closure orders") {
  const auto h = presets::heisenberg();
  CHECK(finite_closure({ResidueUTElement(3, make_modulus(2, 1))}).group().order() == 1);
  CHECK(finite_closure(reduced_generators(h, make_modulus(2, 1))).group().order() == 8);
  CHECK(finite_closure(reduced_generators(h, make_modulus(2, 3))).group().order() == 512);
  for (long p : {2, 3})
    for (unsigned k : {1u, 2u, 3u}) {
      INFO("p=" << p << " k=" << k);
      const auto img = finite_closure(reduced_generators(h, make_modulus(p, k)));
      CHECK(Int(static_cast<unsigned long>(img.group().order())) == ipow(Int(p), 3 * k));
      CHECK(img.group().is_p_group(p));
    }
}

TEST_CASE("finite_closure size cap") {
  const auto h = presets::heisenberg();
  try {
    finite_closure(reduced_generators(h, make_modulus(2, 3)), 100);
    FAIL("expected SizeLimit");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("closure indices round-trip") {
  const auto h = presets::heisenberg();
  const auto img = finite_closure(reduced_generators(h, make_modulus(3, 1)));
  for (Index i = 0; i < img.group().order(); ++i) CHECK(img.index_of(img.element(i)) == i);
  CHECK(img.element(img.group().identity()).is_identity());
}

TEST_CASE("torsion_subgroup") {
  CHECK(torsion_subgroup(*presets::product_by_name("z2xq8")).order() == 8);
  CHECK(torsion_subgroup(*presets::product_by_name("heisenberg")).order() == 1);
  CHECK(torsion_subgroup(*presets::product_by_name("zxc6")).order() == 6);
}

TEST_CASE("is_abelian") {
  CHECK(is_abelian(presets::free_abelian2()).abelian);
  const auto h = is_abelian(presets::heisenberg());
  CHECK_FALSE(h.abelian);
  CHECK(h.witness == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK_FALSE(is_abelian(presets::unitriangular4()).abelian);
}

TEST_CASE("finite presets") {
  using namespace presets;
  CHECK(dihedral4().order() == 8);
  CHECK(quaternion8().order() == 8);
  CHECK(symmetric3().order() == 6);
  CHECK(cyclic(6).order() == 6);
  const FiniteGroup d = dihedral4();
  CHECK(d.pow(d.at("r"), 4) == d.identity());
  CHECK(d.mul(d.at("s"), d.at("s")) == d.identity());
  const FiniteGroup q = quaternion8();
  CHECK(q.mul(q.at("i"), q.at("j")) == q.at("k"));
  CHECK(q.mul(q.at("i"), q.at("i")) == q.at("-1"));
  const FiniteGroup dc = direct_product(dihedral4(), cyclic(2));
  CHECK(dc.order() == 16);
  CHECK(dc.is_p_group(2));
  CHECK_FALSE(symmetric3().is_p_group(2));
  CHECK(by_name("D4xC2")->order() == 16);
  CHECK_FALSE(by_name("X9").has_value());
}

TEST_CASE("table validation names the failed property") {
  std::vector<std::string> names{"e", "g"};
  try {
    FiniteGroup::from_table("bad", names, {0, 1, 1, 2}, {1});
    FAIL("expected InvalidTableError");
  } catch (const InvalidTableError& err) {
    CHECK(err.property() == "closure");
  }
  try {
    FiniteGroup::from_table("bad", names, {0, 1, 1, 1}, {1});
    FAIL("expected InvalidTableError");
  } catch (const InvalidTableError& err) {
    CHECK(err.property() == "inverse");
  }
  CHECK(FiniteGroup::from_table("C2", names, {0, 1, 1, 0}, {1}).order() == 2);
}

TEST_CASE("quotients and subgroups") {
  const FiniteGroup d = presets::dihedral4();
  const Subgroup center = generated_subgroup(d, {d.at("r2")});
  CHECK(center.order() == 2);
  CHECK(is_normal(d, center));
  const Quotient q = quotient(d, center);
  CHECK(q.group.order() == 4);
  for (Index x = 0; x < d.order(); ++x)
    for (Index y = 0; y < d.order(); ++y)
      CHECK(q.projection[d.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
  CHECK_FALSE(is_normal(d, generated_subgroup(d, {d.at("s")})));
}

TEST_CASE("product congruence homomorphism preserves products") {
  const ProductGroupSpec g = *presets::product_by_name("zxd4");
  const auto hom = product_congruence_hom(g, 2, 2);
  CHECK(hom.codomain.order() == 32);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const ProductElement x{from_coordinates(g.matrix_part, vec({long(rng() % 9) - 4})), Index(rng() % 8)};
    const ProductElement y{from_coordinates(g.matrix_part, vec({long(rng() % 9) - 4})), Index(rng() % 8)};
    CHECK(hom(product_mul(g, x, y)) == hom.codomain.mul(hom(x), hom(y)));
  }
}

TEST_CASE("coordinates round-trip") {
  std::mt19937_64 rng(13);
  for (const auto& name : {"heisenberg", "heis5", "ut4", "z2"}) {
    const auto spec = *presets::matrix_by_name(name);
    for (int i = 0; i < 50; ++i) {
      IntVector c;
      for (std::size_t k = 0; k < spec.coordinate_basis.size(); ++k) c.emplace_back(long(rng() % 21) - 10);
      CHECK(to_coordinates(spec, from_coordinates(spec, c)) == c);
    }
  }
}
