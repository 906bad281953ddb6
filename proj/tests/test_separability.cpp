#include <doctest.h>

#include "nilsep/group_presets.hpp"
#include "nilsep/separability.hpp"

using namespace nilsep;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ProductGroupSpec preset(const char* name) { return *presets::product_by_name(name); }

}  // namespace

TEST_CASE("classifier examples") {
  CHECK(classify(preset("z2"), 5).separable);
  CHECK(classify(preset("z"), 2).separable);

  const auto h = classify(preset("heisenberg"), 2);
  CHECK_FALSE(h.separable);
  CHECK(h.reason == "quotient-non-abelian");
  REQUIRE(h.witness_pair.has_value());
  CHECK(h.witness_pair->first == 0);
  CHECK(h.witness_pair->second == 1);

  const auto q8_2 = classify(preset("zxq8"), 2);
  CHECK(q8_2.separable);
  CHECK(q8_2.torsion_order == 8);

  const auto q8_3 = classify(preset("zxq8"), 3);
  CHECK_FALSE(q8_3.separable);
  CHECK(q8_3.reason == "torsion-not-p-group");

  CHECK(classify(preset("zxc3"), 3).separable);
  CHECK_FALSE(classify(preset("zxc6"), 2).separable);
  CHECK(classify(preset("heisxc2"), 3).reason == "torsion-not-p-group+quotient-non-abelian");
  CHECK_FALSE(classify(preset("ut4"), 7).separable);
}

TEST_CASE("Heisenberg witness for p = 2") {
  const auto h = presets::heisenberg();
  const WitnessReport w = make_witness(h, 2);
  CHECK(w.q == 3);
  CHECK(w.n == 1);
  CHECK(w.a == h.generators[0]);
  CHECK(w.b == h.generators[1]);
  CHECK(w.c == h.center_gens[0]);
  CHECK(w.u == from_coordinates(h, vec({3, 0, 0})));
  CHECK(w.v == from_coordinates(h, vec({3, 0, 1})));
  CHECK(w.certificate.exponent == 3);
  CHECK(w.conjugator_exponents.size() == kConjugatorTableDepth);
  const std::vector<long> ks{1, 3, 3, 11, 11, 43, 43, 171};
  for (unsigned m = 1; m <= kConjugatorTableDepth; ++m) {
    const auto& e = w.conjugator_exponents[m - 1];
    CHECK(e.level == m);
    CHECK(e.k == ks[m - 1]);
    CHECK(floor_mod(e.k * 3, e.modulus) == 1);
  }
  const auto g = verify_witness_global(h, w);
  CHECK(g.divisibility_nonconjugate);
  REQUIRE(g.lattice_nonconjugate.has_value());
  CHECK(*g.lattice_nonconjugate);
}

TEST_CASE("Heisenberg witness for p = 3") {
  const auto h = presets::heisenberg();
  const WitnessReport w = make_witness(h, 3);
  CHECK(w.q == 2);
  CHECK(w.n == 1);
  CHECK(w.u == from_coordinates(h, vec({2, 0, 0})));
  CHECK(w.v == from_coordinates(h, vec({2, 0, 1})));
  CHECK(verify_witness_global(h, w).divisibility_nonconjugate);
}

TEST_CASE("witness preconditions") {
  try {
    make_witness(presets::free_abelian2(), 2);
    FAIL("expected AbelianGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AbelianGroup);
  }
  auto h = presets::heisenberg();
  h.z2_rep.reset();
  try {
    make_witness(h, 2);
    FAIL("expected NoZ2Rep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoZ2Rep);
  }
}

TEST_CASE("tampered witnesses fail global verification") {
  const auto h = presets::heisenberg();
  const WitnessReport good = make_witness(h, 2);

  WitnessReport zero = good;
  zero.n = 0;
  zero.certificate.exponent = 1;
  zero.u = zero.a;
  zero.v = zero.a * zero.c;
  try {
    verify_witness_global(h, zero);
    FAIL("expected VerificationFailedError");
  } catch (const VerificationFailedError& e) {
    CHECK(e.check() == "divisibility");
  }

  WitnessReport cubed = good;
  cubed.c = ut_pow(good.c, 3);
  cubed.v = cubed.u * cubed.c;
  try {
    verify_witness_global(h, cubed);
    FAIL("expected VerificationFailedError");
  } catch (const VerificationFailedError& e) {
    CHECK(e.check() == "divisibility");
  }
}

TEST_CASE("local verification examples") {
  const auto h = presets::heisenberg();
  const WitnessReport w2 = make_witness(h, 2);

  const auto m3 = verify_witness_local(h, w2, 3);
  CHECK(m3.modulus == 8);
  CHECK(m3.k == 3);
  CHECK(m3.exact);
  CHECK(m3.conjugator == ut_pow(w2.b, 3));
  REQUIRE(m3.orbit_conjugate.has_value());
  CHECK(*m3.orbit_conjugate);
  CHECK(m3.quotient_order == 512u);

  const auto m1 = verify_witness_local(h, w2, 1);
  CHECK(m1.k == 1);
  CHECK(m1.exact);

  const WitnessReport w3 = make_witness(h, 3);
  const auto p3 = verify_witness_local(h, w3, 2);
  CHECK(p3.modulus == 9);
  CHECK(p3.k == 5);
  CHECK(p3.exact);
}

TEST_CASE("witnesses are never separated in the tower") {
  struct Case {
    const char* name;
    long p;
  };
  for (const Case& cs : {Case{"heisenberg", 2}, Case{"heisenberg", 3}, Case{"heis5", 2}, Case{"heis5", 3},
                         Case{"ut4", 2}, Case{"ut4", 3}}) {
    const MatrixGroupSpec spec = *presets::matrix_by_name(cs.name);
    const WitnessReport w = make_witness(spec, cs.p);
    CHECK(verify_witness_global(spec, w).divisibility_nonconjugate);
    for (unsigned m = 1; m <= 8; ++m) {
      INFO(cs.name << " p=" << cs.p << " m=" << m);
      CHECK(verify_witness_local(spec, w, m, 1u << 12).exact);
    }
  }
}

TEST_CASE("tampered conjugator fails local verification") {
  const auto h = presets::heisenberg();
  WitnessReport w = make_witness(h, 2);
  w.v = w.u * ut_pow(w.c, 2);
  try {
    verify_witness_local(h, w, 3);
    FAIL("expected LocalCheckFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LocalCheckFailed);
  }
}

TEST_CASE("abelian-part separation") {
  const auto z = preset("z");
  const UTElement t = z.matrix_part.generators[0];
  const auto cert = separate_prop4(z, {t, 0}, {ut_pow(t, 3), 0}, 2);
  CHECK(cert.branch == "abelian-part");
  CHECK(cert.level == 2);
  CHECK(cert.quotient.order() == 4);
  CHECK(cert.nonconjugate);
  CHECK(cert.image_a != cert.image_b);
}

TEST_CASE("torsion-part separation") {
  const auto g = preset("zxd4");
  const FiniteGroup& d = g.finite_part;
  const UTElement one = UTElement::identity(2);
  const auto cert = separate_prop4(g, {one, d.at("r")}, {one, d.at("s")}, 2);
  CHECK(cert.branch == "torsion-part");
  CHECK(cert.level == 1);
  CHECK(cert.quotient.order() == 16);
  CHECK(cert.quotient.is_p_group(2));
  CHECK(cert.nonconjugate);
}

TEST_CASE("separation preconditions") {
  const auto g = preset("zxd4");
  const FiniteGroup& d = g.finite_part;
  const UTElement one = UTElement::identity(2);
  try {
    separate_prop4(g, {one, d.at("r")}, {one, d.at("r3")}, 2);
    FAIL("expected AreConjugateError");
  } catch (const AreConjugateError& e) {
    CHECK(product_conj(g, {one, d.at("r")}, e.conjugator()) == ProductElement{one, d.at("r3")});
  }
  for (const char* name : {"zxc3", "heisenberg", "zxc6"}) {
    const auto bad = preset(name);
    INFO(name);
    try {
      separate_prop4(bad, product_identity(bad), product_identity(bad), 2);
      FAIL("expected NotApplicable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotApplicable);
    }
  }
}

TEST_CASE("tower scan examples") {
  const auto h = presets::heisenberg();
  const UTElement c = h.center_gens[0];
  const auto id = UTElement::identity(3);

  const auto sep = scan_tower(h, id, c, 2, 4);
  REQUIRE(sep.separated_at.has_value());
  CHECK(*sep.separated_at == 1);
  CHECK(sep.summary == "separated at level 1");

  const auto deep = scan_tower(h, id, ut_pow(c, 8), 2, 5);
  CHECK(deep.separated_at == 4u);
  CHECK(deep.levels[0].method == "equal");
  CHECK(scan_tower(h, id, c, 2, 1).levels[0].method == "identity");

  const auto same = scan_tower(h, c, c, 3, 3);
  CHECK_FALSE(same.separated_at.has_value());
  CHECK(same.levels[0].method == "equal");

  const WitnessReport w = make_witness(h, 2);
  ScanOptions opts;
  opts.witness = &w;
  const auto ws = scan_tower(h, w.u, w.v, 2, 6, opts);
  CHECK_FALSE(ws.separated_at.has_value());
  CHECK(ws.summary == "conjugate at all 6 levels");
  for (const auto& l : ws.levels) CHECK(l.conjugate == true);

  ScanOptions tiny;
  tiny.max_order = 16;
  const auto und = scan_tower(h, w.u, w.v, 2, 3, tiny);
  CHECK(und.levels[2].method == "undetermined");
  CHECK(und.summary == "no separation found; some levels undetermined");
}

TEST_CASE("residual depth") {
  const auto h = presets::heisenberg();
  const UTElement c = h.center_gens[0];
  CHECK(residual_depth(ut_pow(c, 8), 2) == 4);
  CHECK(residual_depth(c, 5) == 1);
  CHECK(residual_depth(from_coordinates(h, vec({9, 18, 0})), 3) == 3);
  try {
    residual_depth(UTElement::identity(3), 2);
    FAIL("expected IdentityElement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdentityElement);
  }
}

TEST_CASE("classifier agrees with witnesses and separations") {
  for (const auto& name : presets::names()) {
    const auto g = preset(name.c_str());
    for (long p : {2L, 3L, 5L}) {
      INFO(name << " p=" << p);
      const auto v = classify(g, p);
      if (!v.quotient_abelian && g.finite_part.order() == 1 && g.matrix_part.z2_rep) {
        const WitnessReport w = make_witness(g.matrix_part, p);
        CHECK(verify_witness_global(g.matrix_part, w).divisibility_nonconjugate);
        CHECK(verify_witness_local(g.matrix_part, w, 2, 1u << 12).exact);
        CHECK_FALSE(v.separable);
      }
      if (v.separable) {
        CHECK(v.torsion_is_p_group);
        CHECK(v.quotient_abelian);
      }
    }
  }
}
