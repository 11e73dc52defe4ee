#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckaylab/cohomology.hpp"
#include "mckaylab/group.hpp"

namespace mckaylab {

/// Sorted multiset of positive integers: simple-module dimensions or quantum
/// dimensions.
class DegreeMultiset {
public:
  DegreeMultiset() = default;
  explicit DegreeMultiset(std::vector<std::uint64_t> degrees);

  const std::vector<std::uint64_t> &degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::uint64_t sum_of_squares() const;
  std::size_t count_equal(std::uint64_t d) const;
  /// Entries coprime to p.
  std::size_t count_coprime(std::uint64_t p) const;

  /// Merges another multiset, each entry multiplied by `scale`.
  void add_scaled(const DegreeMultiset &other, std::uint64_t scale = 1);

  /// "1 1 2"
  std::string to_string() const;

  bool operator==(const DegreeMultiset &other) const = default;

private:
  std::vector<std::uint64_t> degrees_;
};

/// Irreducible character degrees by the Burnside-Dixon method over F_q.
/// Results are memoized per Cayley-table hash. Throws VerificationError if the
/// result fails its degree-sum, class-count, or linear-character checks.
DegreeMultiset character_degrees(const Group &g);

/// Number of irreducible degrees coprime to p. Throws InvalidArgument unless p is prime.
std::size_t mu_group(const Group &g, std::uint64_t p);

/// The prime used by character_degrees: the least prime q > 2 sqrt(order)
/// with q = 1 mod exponent.
std::uint64_t dixon_prime(const Group &g);

/// L = {(a, g)} with (a,g)(b,h) = (a + b + theta(g,h), gh); element (a, g)
/// has index a * |G| + g.
struct CentralExtension {
  Group base;
  std::uint32_t modulus = 1;
  Group total;
  /// (1, identity)
  Elem z = 0;

  Elem project(Elem l) const { return static_cast<Elem>(l % base.order()); }
  Elem section(Elem g) const { return g; }
  Elem make(std::uint32_t a, Elem g) const { return static_cast<Elem>(a * base.order() + g); }
};

/// Throws InvalidArgument unless theta is a normalized 2-cocycle, and
/// CapExceeded when m |G| > max_order.
CentralExtension central_extension(const Group &g, const CocycleTable &theta,
                                   std::size_t max_order = kDefaultMaxOrder);

/// Degrees of theta-projective irreducibles: the irreducibles of the central
/// extension on which z acts by r^root_exponent, r a fixed primitive m-th root
/// of unity. root_exponent must be a unit mod m; the multiset does not depend
/// on it.
DegreeMultiset twisted_degrees(const Group &g, const CocycleTable &theta,
                               std::uint32_t root_exponent = 1);

std::size_t mu_twisted(const Group &g, const CocycleTable &theta, std::uint64_t p);

} // namespace mckaylab
