#include "nilsep/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nilsep/errors.hpp"

namespace nilsep {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Int> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "IntMatrix: ragged rows");
    for (long x : row) entries.emplace_back(x);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "IntMatrix: column length mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "IntMatrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "IntMatrix * vector: shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Replace columns (p, j) of both matrices by (s*p + t*j, -(b/g)*p + (a/g)*j).
// The 2x2 transform has determinant 1.
void combine_columns(IntMatrix& h, IntMatrix& u, std::size_t p, std::size_t j,
                     const Int& s, const Int& t, const Int& bg, const Int& ag) {
  for (IntMatrix* m : {&h, &u}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      Int x = (*m)(i, p);
      Int y = (*m)(i, j);
      (*m)(i, p) = s * x + t * y;
      (*m)(i, j) = ag * y - bg * x;
    }
  }
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t pc = 0;
  for (std::size_t row = 0; row < h.rows() && pc < h.cols(); ++row) {
    for (std::size_t j = pc + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0) continue;
      Int s, t;
      const Int av = h(row, pc);
      const Int bv = h(row, j);
      Int g = ext_gcd(av, bv, s, t);
      combine_columns(h, u, pc, j, s, t, Int(bv / g), Int(av / g));
    }
    if (h(row, pc) == 0) continue;
    if (h(row, pc) < 0) {
      h.negate_column(pc);
      u.negate_column(pc);
    }
    const Int pivot = h(row, pc);
    for (std::size_t k = 0; k < pc; ++k) {
      Int q = floor_div(h(row, k), pivot);
      if (q != 0) {
        h.add_column_multiple(k, pc, -q);
        u.add_column_multiple(k, pc, -q);
      }
    }
    out.pivot_rows.push_back(row);
    ++pc;
  }
  out.rank = pc;
  return out;
}

std::vector<Int> SmithForm::invariants() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm snf(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();

  auto swap_r = [&](std::size_t x, std::size_t y) { d.swap_rows(x, y); u.swap_rows(x, y); };
  auto swap_c = [&](std::size_t x, std::size_t y) { d.swap_columns(x, y); v.swap_columns(x, y); };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(bi, bj)))) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    swap_r(t, bi);
    swap_c(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a nonzero remainder is smaller than the pivot; move it in
        std::size_t mi = t, mj = t;
        auto consider = [&](std::size_t i, std::size_t j) {
          if (d(i, j) == 0) return;
          if ((mi == t && mj == t) || abs(d(i, j)) < abs(d(mi, mj))) {
            mi = i;
            mj = j;
          }
        };
        for (std::size_t i = t + 1; i < rows; ++i) consider(i, t);
        for (std::size_t j = t + 1; j < cols; ++j) consider(t, j);
        if (mi != t) swap_r(t, mi);
        if (mj != t) swap_c(t, mj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (!divides(d(t, t), d(i, j))) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

Lattice::Lattice(std::size_t ambient_rank, std::vector<IntVector> generators)
    : ambient_rank_(ambient_rank), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != ambient_rank_)
      throw Error(ErrorKind::DimensionMismatch, "Lattice: generator length differs from ambient rank");
}

IntMatrix Lattice::generator_matrix() const {
  return IntMatrix::from_columns(ambient_rank_, generators_);
}

Lattice Lattice::canonical() const {
  HermiteForm hf = hnf(generator_matrix());
  std::vector<IntVector> basis;
  for (std::size_t j = 0; j < hf.rank; ++j) basis.push_back(hf.H.column(j));
  return Lattice(ambient_rank_, std::move(basis));
}

Lattice Lattice::scaled(const Int& factor) const {
  std::vector<IntVector> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(nilsep::scaled(g, factor));
  return Lattice(ambient_rank_, std::move(gens));
}

std::size_t Lattice::rank() const { return hnf(generator_matrix()).rank; }

bool operator==(const Lattice& a, const Lattice& b) {
  return a.ambient_rank_ == b.ambient_rank_ && a.canonical().generators_ == b.canonical().generators_;
}

Membership lattice_contains(const Lattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient_rank())
    throw Error(ErrorKind::DimensionMismatch, "lattice_contains: vector length differs from ambient rank");
  const std::size_t m = lattice.generators().size();
  if (m == 0) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    return {zero, {}};
  }
  HermiteForm hf = hnf(lattice.generator_matrix());
  IntVector residual = v;
  IntVector y(m);
  std::size_t next_row = 0;
  for (std::size_t j = 0; j < hf.rank; ++j) {
    const std::size_t pr = hf.pivot_rows[j];
    for (; next_row < pr; ++next_row)
      if (residual[next_row] != 0) return {false, {}};
    const Int& pivot = hf.H(pr, j);
    if (!divides(pivot, residual[pr])) return {false, {}};
    y[j] = residual[pr] / pivot;
    for (std::size_t i = pr; i < residual.size(); ++i) residual[i] -= y[j] * hf.H(i, j);
    next_row = pr + 1;
  }
  for (std::size_t i = next_row; i < residual.size(); ++i)
    if (residual[i] != 0) return {false, {}};
  return {true, hf.U * y};
}

PowerRoot power_solvable(const Lattice& z1, const IntVector& c, const Int& e) {
  if (e < 1) throw Error(ErrorKind::PreconditionViolated, "power_solvable: exponent must be positive");
  if (!lattice_contains(z1, c).member)
    throw Error(ErrorKind::NotInLattice, "power_solvable: " + to_string(c) + " is not in the lattice");
  Membership m = lattice_contains(z1.scaled(e), c);
  if (!m.member) return {false, {}};
  return {true, z1.generator_matrix() * m.coefficients};
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw Error(ErrorKind::PreconditionViolated, "mod_inverse: modulus must be positive");
  Int s, t;
  Int g = ext_gcd(floor_mod(a, m), m, s, t);
  if (g != 1) {
    throw Error(ErrorKind::NotCoprime,
                "mod_inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") = " + g.get_str());
  }
  return floor_mod(s, m);
}

std::optional<unsigned> prime_power_exponent(const Int& n, const Int& p) {
  if (n < 1) return std::nullopt;
  Int t = n;
  unsigned e = 0;
  while (t != 1) {
    if (!divides(p, t)) return std::nullopt;
    t /= p;
    ++e;
  }
  return e;
}

bool is_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

IntVector scaled(const IntVector& v, const Int& factor) {
  IntVector out(v);
  for (auto& x : out) x *= factor;
  return out;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace nilsep
