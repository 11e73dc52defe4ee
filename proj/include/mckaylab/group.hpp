#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mckaylab/permutation.hpp"

namespace mckaylab {

/// Index of a group element in its group's enumeration. The identity is always 0.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 5000;

/// A finite permutation group with every element enumerated.
///
/// Elements are listed breadth-first from the identity, applying generators
/// in input order on the left. Group is a cheap shared handle; the
/// underlying data is immutable and may be shared across threads.
class Group {
public:
  /// Closure of `gens` acting on {1..degree}. Throws CapExceeded once the
  /// closure grows past `max_order`, InvalidArgument on a malformed generator.
  static Group from_generators(std::size_t degree, std::vector<Perm> gens,
                               std::size_t max_order = kDefaultMaxOrder, std::string name = {});

  /// Wraps an already enumerated, multiplicatively closed element list whose
  /// first entry is the identity.
  static Group from_elements(std::size_t degree, std::vector<Perm> elements, std::string name = {});

  /// Builds the left-regular permutation representation of the group with the
  /// given Cayley table (`table[a * n + b]` = index of a*b, index 0 the identity).
  static Group from_cayley_table(std::size_t order, std::vector<Elem> table, std::string name = {});

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm> &generators() const;
  const std::vector<Perm> &elements() const;
  const Perm &element(Elem e) const;
  const std::string &name() const;
  Group renamed(std::string name) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

  std::optional<Elem> find(const Perm &p) const;
  Elem index_of(const Perm &p) const;

  std::size_t element_order(Elem e) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  /// For i > 0: element(i) = generators()[word_generator(i)] * element(word_parent(i)).
  std::size_t word_generator(Elem e) const;
  Elem word_parent(Elem e) const;

  /// FNV-1a hash of the Cayley table in element order.
  std::uint64_t table_hash() const;
  std::string hash_hex() const;

  /// Same object, or same degree and identical element list.
  bool same_as(const Group &other) const;

  struct Impl; // opaque

private:
  explicit Group(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// A subgroup stored as a sorted set of parent element indices.
class Subgroup {
public:
  /// Validates identity membership and closure.
  Subgroup(Group parent, std::vector<Elem> elements);

  /// Skips the closure scan; for element sets that are subgroups by construction.
  struct Unchecked {};
  Subgroup(Group parent, std::vector<Elem> elements, Unchecked);

  static Subgroup whole(const Group &g);
  static Subgroup trivial(const Group &g);

  const Group &parent() const;
  const std::vector<Elem> &elements() const;
  std::size_t order() const;
  bool contains(Elem e) const;

  /// The subgroup as a Group in its own right, elements in increasing parent
  /// index order (local index i <-> parent index elements()[i]). Computed once.
  const Group &as_group() const;
  Elem to_parent(Elem local) const { return elements()[local]; }
  std::optional<Elem> to_local(Elem parent_elem) const;

  bool operator==(const Subgroup &other) const;

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

bool is_prime(std::uint64_t n);

struct ClassPartition {
  /// Classes ordered by their minimal element; each class sorted ascending.
  std::vector<std::vector<Elem>> classes;
  std::vector<std::uint32_t> class_of;
};

ClassPartition class_partition(const Group &g);
std::vector<std::vector<Elem>> conjugacy_classes(const Group &g);

Subgroup centralizer(const Group &g, Elem x);

/// Smallest subgroup containing `gens`.
Subgroup subgroup_generated(const Group &g, std::span<const Elem> gens);

/// Sylow p-subgroup grown one p-element at a time, always adding the
/// lowest-index p-element that normalizes the current subgroup.
Subgroup sylow_subgroup(const Group &g, std::uint64_t p);

Subgroup normalizer(const Group &g, const Subgroup &h);

/// { g^-1 h g : h in H }
std::vector<Elem> conjugate_elements(const Subgroup &h, Elem g);

Subgroup derived_subgroup(const Group &g);

/// One subgroup from each conjugacy class of subgroups, ordered by subgroup
/// order then discovery. Throws CapExceeded past `max_classes`.
std::vector<Subgroup> subgroup_class_representatives(const Group &g, std::size_t max_classes = 500);

} // namespace mckaylab
