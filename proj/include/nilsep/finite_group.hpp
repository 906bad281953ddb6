#pragma once

// Fully enumerated finite groups. Elements are indices 0..order-1 with the
// identity at 0; multiplication goes through a Cayley table when the group
// is small and through a backend (residue matrices, direct products)
// otherwise.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilsep/errors.hpp"
#include "nilsep/integer.hpp"
#include "nilsep/unitriangular.hpp"

namespace nilsep {

using Index = std::uint32_t;

/// Multiplication on element indices; implementations must be thread-safe.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;
  virtual Index multiply(Index a, Index b) const = 0;
  virtual Index inverse(Index a) const = 0;
};

/// Groups at most this large get a dense Cayley table.
inline constexpr std::size_t kDenseTableLimit = 2048;

class FiniteGroup {
 public:
  /// Validates closure, identity at index 0, inverses, associativity and
  /// that `generators` generate; throws InvalidTableError naming the first
  /// failed property.
  static FiniteGroup from_table(std::string label, std::vector<std::string> names, std::vector<Index> table,
                                std::vector<Index> generators);

  static FiniteGroup from_backend(std::string label, std::vector<std::string> names,
                                  std::shared_ptr<const GroupBackend> backend, std::vector<Index> generators);

  /// Same as from_table without validation; for tables built by
  /// construction (quotients).
  static FiniteGroup from_trusted_table(std::string label, std::vector<std::string> names,
                                        std::vector<Index> table, std::vector<Index> generators);

  static FiniteGroup trivial();

  const std::string& label() const { return d_->label; }
  std::size_t order() const { return d_->names.size(); }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  /// g^-1 x g
  Index conj(Index x, Index g) const { return mul(mul(inv(g), x), g); }
  Index pow(Index a, std::uint64_t e) const;

  const std::vector<Index>& generators() const { return d_->generators; }
  const std::string& name(Index a) const { return d_->names.at(a); }
  const std::vector<std::string>& names() const { return d_->names; }
  std::optional<Index> find(std::string_view name) const;
  /// Throws PreconditionViolated naming the unknown element.
  Index at(std::string_view name) const;

  bool has_table() const { return !d_->table.empty(); }
  bool is_p_group(const Int& p) const;

 private:
  struct Data {
    std::string label;
    std::vector<std::string> names;
    std::unordered_map<std::string, Index> by_name;
    std::vector<Index> generators;
    std::vector<Index> table;     // order*order when dense
    std::vector<Index> inverses;  // filled when dense
    std::shared_ptr<const GroupBackend> backend;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup make(std::string label, std::vector<std::string> names, std::vector<Index> table,
                          std::vector<Index> inverses, std::shared_ptr<const GroupBackend> backend,
                          std::vector<Index> generators);

  std::shared_ptr<const Data> d_;
};

class InvalidTableError : public Error {
 public:
  InvalidTableError(std::string property, const std::string& detail)
      : Error(ErrorKind::InvalidTable, "invalid Cayley table (" + property + "): " + detail),
        property_(std::move(property)) {}
  const std::string& property() const { return property_; }

 private:
  std::string property_;
};

/// Direct product A x B; element (a, b) has index a * |B| + b and name "(a,b)".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Subset of a finite group as a membership mask plus sorted element list.
struct Subgroup {
  std::vector<bool> mask;
  std::vector<Index> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Index x) const { return mask[x]; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask == b.mask; }
};

Subgroup make_subset(const FiniteGroup& g, const std::vector<Index>& elements);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Index>& generators);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

struct Quotient {
  FiniteGroup group;
  std::vector<Index> projection;  // element of g -> coset index
};

/// g / n for a normal subgroup n; cosets are numbered by their least element.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

class CongruenceImage;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure under right multiplication by the generators.
/// Throws SizeLimit when more than `max_order` elements appear.
CongruenceImage finite_closure(const std::vector<ResidueUTElement>& gens,
                               std::size_t max_order = kDefaultClosureCap);

/// Image of the generators of an integer unitriangular group modulo p^k,
/// materialised by breadth-first closure.
class CongruenceImage {
 public:
  const FiniteGroup& group() const { return group_; }
  const Modulus& modulus() const { return mod_; }
  std::optional<Index> index_of(const ResidueUTElement& r) const;
  const ResidueUTElement& element(Index i) const;

  friend CongruenceImage finite_closure(const std::vector<ResidueUTElement>& gens, std::size_t max_order);

 private:
  struct Store;
  CongruenceImage(FiniteGroup g, std::shared_ptr<const Store> s, Modulus mod)
      : group_(std::move(g)), store_(std::move(s)), mod_(mod) {}
  FiniteGroup group_;
  std::shared_ptr<const Store> store_;
  Modulus mod_;
};

namespace presets {

FiniteGroup cyclic(unsigned n);  // elements e, g, g2, ...
FiniteGroup dihedral4();         // e, r, r2, r3, s, rs, r2s, r3s
FiniteGroup quaternion8();       // 1, -1, i, -i, j, -j, k, -k
FiniteGroup symmetric3();        // e, (12), (13), (23), (123), (132)

/// Look up a finite preset by name: Q8, D4, S3, C<n>, D4xC2, trivial.
std::optional<FiniteGroup> by_name(std::string_view name);

}  // namespace presets

}  // namespace nilsep
