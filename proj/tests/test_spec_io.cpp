#include <doctest.h>

#include "nilsep/group_presets.hpp"
#include "nilsep/spec_io.hpp"

using namespace nilsep;

namespace {

const std::string kFixtures = NILSEP_FIXTURES;

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("integers accept numbers and decimal strings") {
  CHECK(json_to_int(Json(42)) == 42);
  CHECK(json_to_int(Json(-7)) == -7);
  CHECK(json_to_int(Json("123456789012345678901234567890")) == Int("123456789012345678901234567890"));
  CHECK(int_to_json(Int(5)) == Json(5));
  CHECK(int_to_json(Int("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(kind_of([] { json_to_int(Json("12x")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { json_to_int(Json(1.5)); }) == ErrorKind::Parse);
}

TEST_CASE("spec file round trip") {
  const ProductGroupSpec g = load_spec_file(kFixtures + "/heisenberg_spec.json");
  CHECK(g.matrix_part.n == 3);
  CHECK(g.matrix_part.generators == presets::heisenberg().generators);
  CHECK(g.matrix_part.coordinate_basis.size() == 3);
  CHECK(g.finite_part.order() == 1);
  const ProductGroupSpec back = spec_from_json(spec_to_json(g));
  CHECK(spec_to_json(back) == spec_to_json(g));
}

TEST_CASE("preset specs round trip") {
  for (const auto& name : presets::names()) {
    INFO(name);
    const ProductGroupSpec g = *presets::product_by_name(name);
    const ProductGroupSpec back = spec_from_json(spec_to_json(g));
    CHECK(back.matrix_part.generators == g.matrix_part.generators);
    CHECK(back.matrix_part.center_gens == g.matrix_part.center_gens);
    CHECK(back.finite_part.order() == g.finite_part.order());
  }
}

TEST_CASE("spec errors are parse errors") {
  CHECK(kind_of([] { load_spec_file(kFixtures + "/malformed.json"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { load_spec_file(kFixtures + "/missing.json"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { spec_from_json(Json::array()); }) == ErrorKind::Parse);
  Json j = spec_to_json(*presets::product_by_name("heisenberg"));
  j.erase("center_gens");
  CHECK(kind_of([&] { spec_from_json(j); }) == ErrorKind::Parse);
  j = spec_to_json(*presets::product_by_name("heisenberg"));
  j["generators"][0][1] = Json::array({0, 1});
  CHECK(kind_of([&] { spec_from_json(j); }) == ErrorKind::Parse);
  j = spec_to_json(*presets::product_by_name("heisenberg"));
  j["finite_part"] = Json{{"kind", "preset"}, {"name", "A5"}};
  CHECK(kind_of([&] { spec_from_json(j); }) == ErrorKind::Parse);
  CHECK(kind_of([] { resolve_group("nope", ""); }) == ErrorKind::Parse);
  CHECK(kind_of([] { resolve_group("", ""); }) == ErrorKind::Parse);
}

TEST_CASE("element syntax") {
  const ProductGroupSpec h = *presets::product_by_name("heisenberg");
  CHECK(parse_element(h, "3,0,1").matrix == from_coordinates(h.matrix_part, vec({3, 0, 1})));
  CHECK(parse_element(h, " -2 , 5 , 0 ").matrix == from_coordinates(h.matrix_part, vec({-2, 5, 0})));
  CHECK(parse_element(h, "").matrix.is_identity());
  CHECK(parse_element(h, "@" + kFixtures + "/a_cubed_c.json").matrix ==
        from_coordinates(h.matrix_part, vec({3, 0, 1})));
  CHECK(kind_of([&] { parse_element(h, "1,2"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse_element(h, "1,x,2"); }) == ErrorKind::Parse);

  const ProductGroupSpec d = *presets::product_by_name("zxd4");
  const ProductElement r = parse_element(d, "0|r");
  CHECK(r.matrix.is_identity());
  CHECK(r.finite == d.finite_part.at("r"));
  CHECK(parse_element(d, "|s").finite == d.finite_part.at("s"));
  CHECK(parse_element(d, "-2").finite == d.finite_part.identity());
  CHECK(kind_of([&] { parse_element(d, "0|q"); }) == ErrorKind::Parse);
}

TEST_CASE("element formatting") {
  const ProductGroupSpec h = *presets::product_by_name("heisenberg");
  CHECK(format_element(h, parse_element(h, "3,0,1")) == "(3,0,1)");
  const ProductGroupSpec d = *presets::product_by_name("zxd4");
  CHECK(format_element(d, parse_element(d, "-2|rs")) == "(-2)|rs");
  const ProductGroupSpec raw = load_spec_file(kFixtures + "/heisenberg_no_basis.json");
  const ProductElement a3 = parse_element(raw, "@" + kFixtures + "/a_cubed.json");
  CHECK(format_element(raw, a3) == a3.matrix.str());
  CHECK(kind_of([&] { parse_element(raw, "3,0,0"); }) == ErrorKind::Parse);
}

TEST_CASE("finite group tables") {
  const FiniteGroup c4 = load_finite_group_file(kFixtures + "/c4.json");
  CHECK(c4.order() == 4);
  CHECK(c4.pow(c4.at("g"), 3) == c4.at("g3"));
  try {
    load_finite_group_file(kFixtures + "/corrupt_c4.json");
    FAIL("expected InvalidTableError");
  } catch (const InvalidTableError& e) {
    CHECK(e.property() == "closure");
  }
  Json j = Json::parse(R"({"name":"X","elements":["e","a"],"table":[[0,1],[1,1]],"generators":[1]})");
  try {
    finite_group_from_json(j);
    FAIL("expected InvalidTableError");
  } catch (const InvalidTableError& e) {
    CHECK(e.property() != "closure");
  }
  CHECK(kind_of([] { finite_group_from_json(Json::parse(R"({"name":"X"})")); }) == ErrorKind::Parse);
}

TEST_CASE("matrix files") {
  CHECK(load_matrix_file(kFixtures + "/a_cubed.json", 3) == ut_pow(presets::heisenberg().generators[0], 3));
  CHECK(kind_of([] { load_matrix_file(kFixtures + "/a_cubed.json", 4); }) == ErrorKind::Parse);
}
