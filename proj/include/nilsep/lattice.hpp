#pragma once

// Exact integer linear algebra: dense integer matrices, column Hermite
// normal form, Smith normal form, lattice membership and the small
// number-theoretic helpers the group code builds on.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nilsep/integer.hpp"

namespace nilsep {

using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Int>& entries() const { return entries_; }

  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntMatrix transposed() const;
  bool is_zero() const;

  // Elementary operations; all unimodular except scale by a non-unit.
  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& factor);  // col dst += factor * col src
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);     // row dst += factor * row src
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
Int determinant(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H;  // A * U == H
  IntMatrix U;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[j] is the pivot row of column j < rank
};

/// Column Hermite normal form: columns [0, rank) are the echelon part with
/// positive pivots, every entry left of a pivot lies in [0, pivot), and the
/// remaining columns are zero.
HermiteForm hnf(const IntMatrix& a);

struct SmithForm {
  IntMatrix D;  // U * A * V == D
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> invariants() const;  // diagonal of D
};

SmithForm snf(const IntMatrix& a);

/// Subgroup of Z^ambient_rank given by a (possibly redundant) generating set.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank, std::vector<IntVector> generators = {});

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  IntMatrix generator_matrix() const;  // generators as columns
  Lattice canonical() const;           // HNF basis, zero columns dropped
  Lattice scaled(const Int& factor) const;
  std::size_t rank() const;

  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> generators_;
};

struct Membership {
  bool member = false;
  IntVector coefficients;  // generator_matrix * coefficients == v when member
};

Membership lattice_contains(const Lattice& lattice, const IntVector& v);

struct PowerRoot {
  bool solvable = false;
  IntVector root;  // e * root == c when solvable, root in the lattice
};

/// Decides whether z^e = c has a solution z in the free abelian group
/// spanned by `z1`, i.e. whether c lies in e * z1. Throws NotInLattice when
/// c is not in z1 itself.
PowerRoot power_solvable(const Lattice& z1, const IntVector& c, const Int& e);

/// Inverse of a modulo m in [0, m). Throws NotCoprime when gcd(a, m) > 1.
Int mod_inverse(const Int& a, const Int& m);

/// e with n == p^e, if any.
std::optional<unsigned> prime_power_exponent(const Int& n, const Int& p);

bool is_prime(const Int& n);
Int next_prime(const Int& n);  // least prime > n

IntVector scaled(const IntVector& v, const Int& factor);
std::string to_string(const IntVector& v);

}  // namespace nilsep
