#pragma once

// Upper unitriangular matrices over Z and over Z/p^k.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nilsep/integer.hpp"
#include "nilsep/lattice.hpp"

namespace nilsep {

/// Number of strictly-upper positions of an n x n matrix.
constexpr std::size_t upper_count(std::size_t n) { return n * (n - 1) / 2; }

/// Row-major index of strictly-upper position (i, j), i < j.
constexpr std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

class UTElement {
 public:
  /// Throws NotUnitriangular unless `m` is square with unit diagonal and
  /// zeros below it.
  explicit UTElement(IntMatrix m);

  static UTElement identity(std::size_t n);
  /// I + value * E_ij (0-based, i < j).
  static UTElement elementary(std::size_t n, std::size_t i, std::size_t j, const Int& value = 1);

  std::size_t dim() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_identity() const;

  /// Strictly-upper entries, row-major.
  IntVector upper_entries() const;

  friend bool operator==(const UTElement& a, const UTElement& b) = default;

  std::string str() const { return m_.str(); }

 private:
  IntMatrix m_;
};

UTElement ut_mul(const UTElement& u, const UTElement& v);
UTElement ut_inv(const UTElement& u);
/// Square-and-multiply; negative exponents go through the inverse.
UTElement ut_pow(const UTElement& u, const Int& e);
/// [x, y] = x^-1 y^-1 x y.
UTElement commutator(const UTElement& x, const UTElement& y);
/// g^-1 x g.
UTElement conjugate_by(const UTElement& x, const UTElement& g);

inline UTElement operator*(const UTElement& u, const UTElement& v) { return ut_mul(u, v); }

/// Strictly-upper entries of log(u) = sum_k (-1)^{k+1} (u - I)^k / k.
std::vector<mpq_class> log_upper_entries(const UTElement& u);

struct Modulus {
  std::uint64_t p = 0;
  unsigned level = 0;
  std::uint64_t value = 1;  // p^level

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

/// Throws ModulusTooLarge when p^level >= 2^62.
Modulus make_modulus(const Int& p, unsigned level);

/// Unitriangular matrix over Z/p^k, stored by its strictly-upper entries.
class ResidueUTElement {
 public:
  ResidueUTElement(std::size_t n, Modulus mod);  // identity

  std::size_t dim() const { return n_; }
  const Modulus& modulus() const { return mod_; }
  const std::vector<std::uint64_t>& upper() const { return upper_; }
  std::uint64_t at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::uint64_t value);
  bool is_identity() const;

  ResidueUTElement inverse() const;
  ResidueUTElement pow(std::uint64_t e) const;

  friend ResidueUTElement operator*(const ResidueUTElement& a, const ResidueUTElement& b);
  friend bool operator==(const ResidueUTElement& a, const ResidueUTElement& b) = default;

  std::string str() const;  // upper entries, e.g. "[1,0,1]"

 private:
  std::size_t n_;
  Modulus mod_;
  std::vector<std::uint64_t> upper_;
};

ResidueUTElement reduce_mod(const UTElement& u, const Modulus& mod);
ResidueUTElement reduce_mod(const UTElement& u, const Int& p, unsigned level);

struct ResidueHash {
  std::size_t operator()(const ResidueUTElement& r) const noexcept;
};

}  // namespace nilsep
