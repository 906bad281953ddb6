#include "nilsep/unitriangular.hpp"

#include "nilsep/errors.hpp"

namespace nilsep {

UTElement::UTElement(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw Error(ErrorKind::NotUnitriangular, "UTElement: matrix must be square and nonempty");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (m_(i, i) != 1) throw Error(ErrorKind::NotUnitriangular, "UTElement: diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (m_(i, j) != 0) throw Error(ErrorKind::NotUnitriangular, "UTElement: nonzero entry below diagonal");
  }
}

UTElement UTElement::identity(std::size_t n) { return UTElement(IntMatrix::identity(n)); }

UTElement UTElement::elementary(std::size_t n, std::size_t i, std::size_t j, const Int& value) {
  if (i >= j || j >= n) throw Error(ErrorKind::NotUnitriangular, "elementary: position must be strictly upper");
  IntMatrix m = IntMatrix::identity(n);
  m(i, j) = value;
  return UTElement(std::move(m));
}

bool UTElement::is_identity() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (m_(i, j) != 0) return false;
  return true;
}

IntVector UTElement::upper_entries() const {
  IntVector v;
  v.reserve(upper_count(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) v.push_back(m_(i, j));
  return v;
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "unitriangular dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

UTElement ut_mul(const UTElement& u, const UTElement& v) {
  require_same_dim(u.dim(), v.dim());
  const std::size_t n = u.dim();
  IntMatrix out = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int s = u(i, j) + v(i, j);
      for (std::size_t l = i + 1; l < j; ++l) s += u(i, l) * v(l, j);
      out(i, j) = std::move(s);
    }
  return UTElement(std::move(out));
}

UTElement ut_inv(const UTElement& u) {
  const std::size_t n = u.dim();
  IntMatrix b = IntMatrix::identity(n);
  // (u b)_ij = 0 for i < j gives b_ij = -(u_ij + sum_{i<l<j} u_il b_lj)
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int s = u(i, j);
      for (std::size_t l = i + 1; l < j; ++l) s += u(i, l) * b(l, j);
      b(i, j) = -s;
    }
  return UTElement(std::move(b));
}

UTElement ut_pow(const UTElement& u, const Int& e) {
  UTElement base = e < 0 ? ut_inv(u) : u;
  Int k = abs(e);
  UTElement acc = UTElement::identity(u.dim());
  while (k != 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = ut_mul(acc, base);
    k >>= 1;
    if (k != 0) base = ut_mul(base, base);
  }
  return acc;
}

UTElement commutator(const UTElement& x, const UTElement& y) {
  return ut_mul(ut_mul(ut_inv(x), ut_inv(y)), ut_mul(x, y));
}

UTElement conjugate_by(const UTElement& x, const UTElement& g) {
  return ut_mul(ut_mul(ut_inv(g), x), g);
}

std::vector<mpq_class> log_upper_entries(const UTElement& u) {
  const std::size_t n = u.dim();
  std::vector<mpq_class> nil(n * n), power(n * n), acc(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) nil[i * n + j] = mpq_class(u(i, j));
  power = nil;
  for (std::size_t k = 1; k < n; ++k) {
    const mpq_class coeff = mpq_class((k % 2 == 1) ? 1 : -1, static_cast<unsigned long>(k));
    for (std::size_t t = 0; t < n * n; ++t) acc[t] += coeff * power[t];
    std::vector<mpq_class> next(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = i + 1; l < n; ++l) {
        if (power[i * n + l] == 0) continue;
        for (std::size_t j = l + 1; j < n; ++j) next[i * n + j] += power[i * n + l] * nil[l * n + j];
      }
    power = std::move(next);
  }
  std::vector<mpq_class> out;
  out.reserve(upper_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      acc[i * n + j].canonicalize();
      out.push_back(acc[i * n + j]);
    }
  return out;
}

Modulus make_modulus(const Int& p, unsigned level) {
  if (!is_prime(p)) throw Error(ErrorKind::PreconditionViolated, "modulus base " + p.get_str() + " is not prime");
  if (level < 1) throw Error(ErrorKind::PreconditionViolated, "congruence level must be at least 1");
  Int value = ipow(p, level);
  if (value >= (Int(1) << 62)) {
    throw Error(ErrorKind::ModulusTooLarge,
                "modulus " + p.get_str() + "^" + std::to_string(level) + " exceeds 2^62");
  }
  return Modulus{p.get_ui(), level, value.get_ui()};
}

ResidueUTElement::ResidueUTElement(std::size_t n, Modulus mod)
    : n_(n), mod_(mod), upper_(upper_count(n), 0) {}

std::uint64_t ResidueUTElement::at(std::size_t i, std::size_t j) const {
  if (i == j) return 1 % mod_.value;
  if (i > j) return 0;
  return upper_[upper_index(n_, i, j)];
}

void ResidueUTElement::set(std::size_t i, std::size_t j, std::uint64_t value) {
  upper_[upper_index(n_, i, j)] = value % mod_.value;
}

bool ResidueUTElement::is_identity() const {
  for (auto x : upper_)
    if (x != 0) return false;
  return true;
}

ResidueUTElement operator*(const ResidueUTElement& a, const ResidueUTElement& b) {
  if (a.n_ != b.n_) require_same_dim(a.n_, b.n_);
  if (!(a.mod_ == b.mod_)) throw Error(ErrorKind::DimensionMismatch, "residue moduli differ");
  const std::size_t n = a.n_;
  const unsigned __int128 m = a.mod_.value;
  ResidueUTElement out(n, a.mod_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      unsigned __int128 s = static_cast<unsigned __int128>(a.upper_[upper_index(n, i, j)]) +
                            b.upper_[upper_index(n, i, j)];
      for (std::size_t l = i + 1; l < j; ++l) {
        s += static_cast<unsigned __int128>(a.upper_[upper_index(n, i, l)]) * b.upper_[upper_index(n, l, j)] % m;
      }
      out.upper_[upper_index(n, i, j)] = static_cast<std::uint64_t>(s % m);
    }
  return out;
}

ResidueUTElement ResidueUTElement::inverse() const {
  const unsigned __int128 m = mod_.value;
  ResidueUTElement b(n_, mod_);
  for (std::size_t i = n_; i-- > 0;)
    for (std::size_t j = i + 1; j < n_; ++j) {
      unsigned __int128 s = upper_[upper_index(n_, i, j)];
      for (std::size_t l = i + 1; l < j; ++l)
        s += static_cast<unsigned __int128>(upper_[upper_index(n_, i, l)]) * b.upper_[upper_index(n_, l, j)] % m;
      const auto r = static_cast<std::uint64_t>(s % m);
      b.upper_[upper_index(n_, i, j)] = r == 0 ? 0 : mod_.value - r;
    }
  return b;
}

ResidueUTElement ResidueUTElement::pow(std::uint64_t e) const {
  ResidueUTElement acc(n_, mod_);
  ResidueUTElement base = *this;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

std::string ResidueUTElement::str() const {
  std::string s = "[";
  for (std::size_t t = 0; t < upper_.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(upper_[t]);
  }
  return s + "]";
}

ResidueUTElement reduce_mod(const UTElement& u, const Modulus& mod) {
  const Int m(static_cast<unsigned long>(mod.value));
  ResidueUTElement r(u.dim(), mod);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j) r.set(i, j, floor_mod(u(i, j), m).get_ui());
  return r;
}

ResidueUTElement reduce_mod(const UTElement& u, const Int& p, unsigned level) {
  return reduce_mod(u, make_modulus(p, level));
}

std::size_t ResidueHash::operator()(const ResidueUTElement& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ r.dim();
  for (auto x : r.upper()) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace nilsep
