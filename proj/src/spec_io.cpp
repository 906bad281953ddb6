#include "nilsep/spec_io.hpp"

#include <fstream>
#include <limits>

#include "nilsep/group_presets.hpp"

namespace nilsep {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Int parse_int(const std::string& s) {
  Int x;
  if (s.empty() || x.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) parse_error("not an integer: '" + s + "'");
  return x;
}

std::vector<UTElement> matrices_from_json(const Json& j, std::size_t n, const std::string& key) {
  if (!j.is_array()) parse_error("'" + key + "' must be a list of matrices");
  std::vector<UTElement> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, n));
  return out;
}

Json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

}  // namespace

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  parse_error("expected an integer, got " + j.dump());
}

Json int_to_json(const Int& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

UTElement matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) parse_error("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) parse_error("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = json_to_int(j[r][c]);
  }
  return UTElement(std::move(m));
}

Json matrix_to_json(const UTElement& u) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < u.dim(); ++c) row.push_back(int_to_json(u(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ProductGroupSpec spec_from_json(const Json& j) {
  if (!j.is_object()) parse_error("spec document must be a JSON object");
  for (const char* key : {"name", "n", "generators", "center_gens", "declared_class"})
    if (!j.contains(key)) parse_error(std::string("spec is missing '") + key + "'");
  ProductGroupSpec g;
  MatrixGroupSpec& s = g.matrix_part;
  try {
    s.name = j.at("name").get<std::string>();
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1 || n > 64) parse_error("'n' must be in [1, 64]");
    s.n = static_cast<std::size_t>(n);
    s.generators = matrices_from_json(j.at("generators"), s.n, "generators");
    s.center_gens = matrices_from_json(j.at("center_gens"), s.n, "center_gens");
    if (j.contains("z2_rep") && !j.at("z2_rep").is_null()) s.z2_rep = matrix_from_json(j.at("z2_rep"), s.n);
    const auto cls = j.at("declared_class").get<std::int64_t>();
    if (cls < 1) parse_error("'declared_class' must be positive");
    s.declared_class = static_cast<unsigned>(cls);
    if (j.contains("generator_names")) s.generator_names = j.at("generator_names").get<std::vector<std::string>>();
    if (j.contains("coordinate_basis"))
      s.coordinate_basis = matrices_from_json(j.at("coordinate_basis"), s.n, "coordinate_basis");
    if (j.contains("finite_part") && !j.at("finite_part").is_null()) {
      const Json& f = j.at("finite_part");
      if (f.value("kind", "") != "preset") parse_error("finite_part.kind must be \"preset\"");
      const std::string fname = f.at("name").get<std::string>();
      auto fg = presets::by_name(fname);
      if (!fg) parse_error("unknown finite preset '" + fname + "'");
      g.finite_part = *fg;
    }
  } catch (const Json::exception& e) {
    parse_error(std::string("spec: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    parse_error(std::string("spec: ") + e.what());
  }
  return g;
}

Json spec_to_json(const ProductGroupSpec& g) {
  const MatrixGroupSpec& s = g.matrix_part;
  Json j;
  j["name"] = s.name;
  j["n"] = s.n;
  Json gens = Json::array();
  for (const auto& u : s.generators) gens.push_back(matrix_to_json(u));
  j["generators"] = std::move(gens);
  Json center = Json::array();
  for (const auto& u : s.center_gens) center.push_back(matrix_to_json(u));
  j["center_gens"] = std::move(center);
  j["z2_rep"] = s.z2_rep ? matrix_to_json(*s.z2_rep) : Json(nullptr);
  j["declared_class"] = s.declared_class;
  if (!s.generator_names.empty()) j["generator_names"] = s.generator_names;
  if (!s.coordinate_basis.empty()) {
    Json basis = Json::array();
    for (const auto& u : s.coordinate_basis) basis.push_back(matrix_to_json(u));
    j["coordinate_basis"] = std::move(basis);
  }
  if (g.finite_part.order() > 1)
    j["finite_part"] = Json{{"kind", "preset"}, {"name", g.finite_part.label()}};
  else
    j["finite_part"] = nullptr;
  return j;
}

ProductGroupSpec load_spec_file(const std::filesystem::path& path) { return spec_from_json(parse_json_file(path)); }

ProductGroupSpec resolve_group(const std::string& preset, const std::string& spec_file) {
  if (!preset.empty()) {
    auto g = presets::product_by_name(preset);
    if (!g) parse_error("unknown preset '" + preset + "'");
    return *g;
  }
  if (spec_file.empty()) parse_error("one of --preset or --spec is required");
  return load_spec_file(spec_file);
}

FiniteGroup finite_group_from_json(const Json& j) {
  std::vector<std::string> names;
  std::vector<Index> table;
  std::vector<Index> gens;
  std::string label;
  try {
    label = j.at("name").get<std::string>();
    names = j.at("elements").get<std::vector<std::string>>();
    auto index = [&](const Json& e) -> Index {
      if (e.is_number_integer()) return static_cast<Index>(e.get<std::int64_t>());
      const std::string s = e.get<std::string>();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<Index>(i);
      return static_cast<Index>(names.size());  // rejected as "closure"
    };
    for (const auto& row : j.at("table"))
      for (const auto& e : row) table.push_back(index(e));
    for (const auto& g : j.at("generators")) gens.push_back(index(g));
  } catch (const Json::exception& e) {
    parse_error(std::string("finite group table: ") + e.what());
  }
  return FiniteGroup::from_table(std::move(label), std::move(names), std::move(table), std::move(gens));
}

FiniteGroup load_finite_group_file(const std::filesystem::path& path) {
  return finite_group_from_json(parse_json_file(path));
}

UTElement load_matrix_file(const std::filesystem::path& path, std::size_t n) {
  return matrix_from_json(parse_json_file(path), n);
}

ProductElement parse_element(const ProductGroupSpec& g, std::string_view text) {
  const MatrixGroupSpec& s = g.matrix_part;
  const auto bar = text.find('|');
  const std::string mpart = trim(text.substr(0, bar));
  const std::string fpart = bar == std::string_view::npos ? std::string() : trim(text.substr(bar + 1));

  ProductElement x{UTElement::identity(s.n), g.finite_part.identity()};
  if (!mpart.empty() && mpart[0] == '@') {
    x.matrix = load_matrix_file(mpart.substr(1), s.n);
  } else if (!mpart.empty()) {
    if (s.coordinate_basis.empty())
      parse_error(s.name + " has no coordinate basis; give the matrix part as @file.json");
    IntVector coords;
    std::size_t start = 0;
    while (true) {
      const auto comma = mpart.find(',', start);
      coords.push_back(parse_int(trim(std::string_view(mpart).substr(start, comma - start))));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coords.size() != s.coordinate_basis.size())
      parse_error("element '" + std::string(text) + "': expected " + std::to_string(s.coordinate_basis.size()) +
                  " coordinates for " + s.name);
    x.matrix = from_coordinates(s, coords);
  }
  if (!fpart.empty()) {
    auto f = g.finite_part.find(fpart);
    if (!f) parse_error("no element named '" + fpart + "' in " + g.finite_part.label());
    x.finite = *f;
  }
  return x;
}

std::string format_matrix_element(const MatrixGroupSpec& spec, const UTElement& u) {
  if (!spec.coordinate_basis.empty()) {
    try {
      return to_string(to_coordinates(spec, u));
    } catch (const Error&) {
    }
  }
  return u.str();
}

std::string format_element(const ProductGroupSpec& g, const ProductElement& x) {
  std::string out = format_matrix_element(g.matrix_part, x.matrix);
  if (g.finite_part.order() > 1) out += "|" + g.finite_part.name(x.finite);
  return out;
}

}  // namespace nilsep
