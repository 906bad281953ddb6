#include "nilsep/matrix_group.hpp"

#include <algorithm>

namespace nilsep {

std::string MatrixGroupSpec::generator_name(std::size_t i) const {
  if (i < generator_names.size()) return generator_names[i];
  return "g" + std::to_string(i + 1);
}

namespace {

Int denominator_lcm(const std::vector<mpq_class>& entries) {
  Int l = 1;
  for (const auto& q : entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

CentralCoordinates::CentralCoordinates(const MatrixGroupSpec& spec) : lattice_(upper_count(spec.n)) {
  std::vector<std::vector<mpq_class>> logs;
  for (const auto& c : spec.center_gens) {
    logs.push_back(log_upper_entries(c));
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), denominator_lcm(logs.back()).get_mpz_t());
  }
  std::vector<IntVector> gens;
  for (const auto& l : logs) {
    IntVector v;
    for (const auto& q : l) v.push_back(Int(q * scale_));
    gens.push_back(std::move(v));
  }
  lattice_ = Lattice(upper_count(spec.n), std::move(gens));
}

std::optional<IntVector> CentralCoordinates::operator()(const UTElement& u) const {
  IntVector v;
  for (const auto& q : log_upper_entries(u)) {
    mpq_class s = q * scale_;
    s.canonicalize();
    if (s.get_den() != 1) return std::nullopt;
    v.push_back(s.get_num());
  }
  return v;
}

bool CentralCoordinates::in_center(const UTElement& u) const {
  auto v = (*this)(u);
  return v && lattice_contains(lattice_, *v).member;
}

bool SpecVerification::ok() const { return first_failure() == nullptr; }

const SpecCheck* SpecVerification::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

SpecVerification check_spec(const MatrixGroupSpec& spec) {
  SpecVerification out;

  SpecCheck dims{"dimensions", true, ""};
  auto check_dim = [&](const UTElement& u, const std::string& what) {
    if (dims.pass && u.dim() != spec.n) {
      dims.pass = false;
      dims.detail = what + " has dimension " + std::to_string(u.dim()) + ", expected " + std::to_string(spec.n);
    }
  };
  for (std::size_t i = 0; i < spec.generators.size(); ++i) check_dim(spec.generators[i], spec.generator_name(i));
  for (std::size_t i = 0; i < spec.center_gens.size(); ++i)
    check_dim(spec.center_gens[i], "center generator " + std::to_string(i + 1));
  if (spec.z2_rep) check_dim(*spec.z2_rep, "z2_rep");
  if (dims.pass && spec.generators.empty()) {
    dims.pass = false;
    dims.detail = "no generators";
  }
  out.checks.push_back(dims);
  if (!dims.pass) return out;

  // (i) centre generators commute with every generator and with each other
  SpecCheck central{"center-commutes", true, ""};
  for (std::size_t i = 0; i < spec.center_gens.size() && central.pass; ++i) {
    const auto& z = spec.center_gens[i];
    for (std::size_t j = 0; j < spec.generators.size() && central.pass; ++j)
      if (!commutator(z, spec.generators[j]).is_identity()) {
        central.pass = false;
        central.detail = "center generator " + std::to_string(i + 1) + " and " + spec.generator_name(j) + " do not commute";
      }
    for (std::size_t j = 0; j < i && central.pass; ++j)
      if (!commutator(z, spec.center_gens[j]).is_identity()) {
        central.pass = false;
        central.detail = "center generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " do not commute";
      }
  }
  out.checks.push_back(central);
  if (!central.pass) return out;

  const CentralCoordinates coords(spec);

  // (ii) commutators of z2_rep with the generators are central
  SpecCheck z2c{"z2-commutators-central", true, ""};
  SpecCheck z2o{"z2-outside-center", true, ""};
  if (spec.z2_rep) {
    for (std::size_t j = 0; j < spec.generators.size() && z2c.pass; ++j)
      if (!coords.in_center(commutator(*spec.z2_rep, spec.generators[j]))) {
        z2c.pass = false;
        z2c.detail = "[z2_rep, " + spec.generator_name(j) + "] is not in <center_gens>";
      }
    // (iii)
    if (coords.in_center(*spec.z2_rep)) {
      z2o.pass = false;
      z2o.detail = "z2_rep lies in <center_gens>";
    }
  }
  out.checks.push_back(z2c);
  out.checks.push_back(z2o);

  SpecCheck cls{"declared-class", true, ""};
  const AbelianCheck ab = is_abelian(spec);
  auto fail_class = [&](std::string why) {
    if (cls.pass) {
      cls.pass = false;
      cls.detail = std::move(why);
    }
  };
  if (spec.declared_class < 1 || spec.declared_class > std::max<std::size_t>(1, spec.n - 1))
    fail_class("class " + std::to_string(spec.declared_class) + " impossible in UT(" + std::to_string(spec.n) + ")");
  if (spec.declared_class == 1) {
    if (!ab.abelian)
      fail_class("declared abelian but [" + spec.generator_name(ab.witness->first) + "," +
                 spec.generator_name(ab.witness->second) + "] != 1");
    for (std::size_t j = 0; j < spec.generators.size(); ++j)
      if (!coords.in_center(spec.generators[j]))
        fail_class("declared abelian but " + spec.generator_name(j) + " is not in <center_gens>");
  } else {
    if (ab.abelian) fail_class("declared class " + std::to_string(spec.declared_class) + " but generators commute");
    if (!spec.z2_rep) fail_class("class >= 2 requires z2_rep");
    bool all_central = true;
    for (std::size_t i = 0; i < spec.generators.size() && all_central; ++i)
      for (std::size_t j = i + 1; j < spec.generators.size() && all_central; ++j)
        all_central = coords.in_center(commutator(spec.generators[i], spec.generators[j]));
    if (spec.declared_class == 2 && !all_central) fail_class("declared class 2 but [G,G] is not in <center_gens>");
    if (spec.declared_class >= 3 && all_central)
      fail_class("declared class " + std::to_string(spec.declared_class) + " but [G,G] lies in <center_gens>");
  }
  out.checks.push_back(cls);
  return out;
}

SpecVerification verify_spec(const MatrixGroupSpec& spec) {
  SpecVerification v = check_spec(spec);
  if (const SpecCheck* f = v.first_failure()) throw SpecRejectedError(*f);
  return v;
}

AbelianCheck is_abelian(const MatrixGroupSpec& spec) {
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    for (std::size_t j = i + 1; j < spec.generators.size(); ++j)
      if (!commutator(spec.generators[i], spec.generators[j]).is_identity())
        return {false, std::make_pair(i, j)};
  return {};
}

UTElement from_coordinates(const MatrixGroupSpec& spec, const IntVector& coords) {
  if (spec.coordinate_basis.empty())
    throw Error(ErrorKind::PreconditionViolated, spec.name + " has no coordinate basis; give full matrices");
  if (coords.size() != spec.coordinate_basis.size())
    throw Error(ErrorKind::Parse, spec.name + " expects " + std::to_string(spec.coordinate_basis.size()) +
                                      " coordinates, got " + std::to_string(coords.size()));
  UTElement u = UTElement::identity(spec.n);
  for (std::size_t i = 0; i < coords.size(); ++i) u = u * ut_pow(spec.coordinate_basis[i], coords[i]);
  return u;
}

IntVector to_coordinates(const MatrixGroupSpec& spec, const UTElement& u) {
  if (spec.coordinate_basis.empty())
    throw Error(ErrorKind::PreconditionViolated, spec.name + " has no coordinate basis");
  // Peel factors left to right: each basis element is I + s E_ij and the
  // ordering makes entry (i, j) of the remainder equal s times the exponent.
  UTElement rest = u;
  IntVector coords;
  for (const auto& b : spec.coordinate_basis) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = 0; i < b.dim() && !found; ++i)
      for (std::size_t j = i + 1; j < b.dim() && !found; ++j)
        if (b(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found || !divides(b(pi, pj), rest(pi, pj)))
      throw Error(ErrorKind::PreconditionViolated, "element " + u.str() + " has no coordinates in " + spec.name);
    Int e = rest(pi, pj) / b(pi, pj);
    coords.push_back(e);
    rest = ut_pow(b, -e) * rest;
  }
  if (!rest.is_identity())
    throw Error(ErrorKind::PreconditionViolated, "element " + u.str() + " has no coordinates in " + spec.name);
  return coords;
}

}  // namespace nilsep
