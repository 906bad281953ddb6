#pragma once

// Group-spec documents, preset lookup and element syntax.
//
// Spec document:
//   { "name": "...", "n": 3,
//     "generators": [[[1,1,0],[0,1,0],[0,0,1]], ...],
//     "center_gens": [...], "z2_rep": [[...]] | null, "declared_class": 2,
//     "finite_part": {"kind": "preset", "name": "Q8"} | null }
// Optional keys: "generator_names", "coordinate_basis". Integers may be
// JSON numbers or decimal strings.
//
// Element syntax: "<coords>|<finite>", e.g. "3,0,1", "0|r", "|s", "-2|e".
// Coordinates are exponents over the spec's coordinate basis; an element
// given as "@path.json" is read as a full matrix.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nilsep/product_group.hpp"

namespace nilsep {

using Json = nlohmann::ordered_json;

Int json_to_int(const Json& j);
Json int_to_json(const Int& x);  // number when it fits in 64 bits, else string

UTElement matrix_from_json(const Json& j, std::size_t n);
Json matrix_to_json(const UTElement& u);

ProductGroupSpec spec_from_json(const Json& j);
Json spec_to_json(const ProductGroupSpec& g);
ProductGroupSpec load_spec_file(const std::filesystem::path& path);

/// Preset name, or spec file when `preset` is empty.
ProductGroupSpec resolve_group(const std::string& preset, const std::string& spec_file);

/// Finite group from an explicit Cayley table:
///   { "name": "X", "elements": ["e", "a", ...], "table": [[0, 1, ...], ...],
///     "generators": ["a"] }
/// Entries are indices or element names; the identity is listed first. The
/// table is validated (InvalidTableError names the failed property).
FiniteGroup finite_group_from_json(const Json& j);
FiniteGroup load_finite_group_file(const std::filesystem::path& path);

UTElement load_matrix_file(const std::filesystem::path& path, std::size_t n);

ProductElement parse_element(const ProductGroupSpec& g, std::string_view text);
/// Coordinates when the spec has a basis, else the matrix; finite part by name.
std::string format_element(const ProductGroupSpec& g, const ProductElement& x);
std::string format_matrix_element(const MatrixGroupSpec& spec, const UTElement& u);

}  // namespace nilsep
