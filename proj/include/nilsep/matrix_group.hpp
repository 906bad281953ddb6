#pragma once

// Finitely generated subgroups of UT(n, Z) together with declared
// upper-central-series data, and the checks that keep that data honest.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsep/errors.hpp"
#include "nilsep/lattice.hpp"
#include "nilsep/unitriangular.hpp"

namespace nilsep {

struct MatrixGroupSpec {
  std::string name;
  std::size_t n = 0;
  std::vector<UTElement> generators;
  std::vector<UTElement> center_gens;  // declared generators of the centre Z1
  std::optional<UTElement> z2_rep;     // declared element of Z2 \ Z1
  unsigned declared_class = 1;

  // Display names for generators ("a", "b", ...); defaults to g1, g2, ...
  std::vector<std::string> generator_names;
  // Ordered elementary factors for Mal'cev-style coordinates; empty for
  // specs that only accept full matrices.
  std::vector<UTElement> coordinate_basis;

  std::string generator_name(std::size_t i) const;
};

/// Coordinates of central elements: the strictly-upper entries of the
/// matrix logarithm, scaled by the common denominator of the centre
/// generators' logarithms. The centre lattice is the integer span of the
/// generators' coordinates; for elements with N^2 = 0 the coordinates are
/// just the matrix entries.
class CentralCoordinates {
 public:
  explicit CentralCoordinates(const MatrixGroupSpec& spec);

  /// nullopt when the scaled logarithm is not integral, which already
  /// rules out membership in <center_gens>.
  std::optional<IntVector> operator()(const UTElement& u) const;

  const Lattice& center_lattice() const { return lattice_; }
  const Int& scale() const { return scale_; }
  /// u lies in <center_gens>.
  bool in_center(const UTElement& u) const;

 private:
  Int scale_ = 1;
  Lattice lattice_;
};

struct SpecCheck {
  std::string name;  // center-commutes | z2-commutators-central | z2-outside-center | declared-class | dimensions
  bool pass = true;
  std::string detail;
};

struct SpecVerification {
  std::vector<SpecCheck> checks;
  bool ok() const;
  const SpecCheck* first_failure() const;
};

class SpecRejectedError : public Error {
 public:
  explicit SpecRejectedError(SpecCheck failed)
      : Error(ErrorKind::SpecRejected, "spec rejected at check " + failed.name + ": " + failed.detail),
        failed_(std::move(failed)) {}
  const SpecCheck& failed() const { return failed_; }

 private:
  SpecCheck failed_;
};

/// Runs every check and reports each outcome without throwing.
SpecVerification check_spec(const MatrixGroupSpec& spec);

/// Throws SpecRejectedError carrying the first failed check.
SpecVerification verify_spec(const MatrixGroupSpec& spec);

struct AbelianCheck {
  bool abelian = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // generator indices with [g_i, g_j] != 1
};

AbelianCheck is_abelian(const MatrixGroupSpec& spec);

/// Product of basis[i]^coords[i] in order.
UTElement from_coordinates(const MatrixGroupSpec& spec, const IntVector& coords);

/// Inverse of from_coordinates; throws PreconditionViolated when the spec
/// has no coordinate basis or `u` is not a product of basis powers.
IntVector to_coordinates(const MatrixGroupSpec& spec, const UTElement& u);

}  // namespace nilsep
