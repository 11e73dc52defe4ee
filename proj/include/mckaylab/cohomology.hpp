#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "mckaylab/group.hpp"
#include "mckaylab/gset.hpp"

namespace mckaylab {

/// An n-cochain G^n -> mu_m stored as exponents in Z/m (value = zeta_m^exponent),
/// dense over element-index tuples in lexicographic order.
class CocycleTable {
public:
  /// The zero table.
  CocycleTable(Group group, int degree, std::uint32_t modulus);
  /// Throws InvalidArgument on missing entries or values outside [0, m).
  CocycleTable(Group group, int degree, std::uint32_t modulus, std::vector<std::uint32_t> values);

  const Group &group() const { return group_; }
  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<std::uint32_t> &values() const { return values_; }

  std::size_t index(std::span<const Elem> args) const;
  std::uint32_t at(std::span<const Elem> args) const { return values_[index(args)]; }
  std::uint32_t operator()(Elem a) const { return values_[a]; }
  std::uint32_t operator()(Elem a, Elem b) const { return values_[a * n_ + b]; }
  std::uint32_t operator()(Elem a, Elem b, Elem c) const { return values_[(a * n_ + b) * n_ + c]; }
  void set(std::span<const Elem> args, std::uint32_t value);

  /// Zero whenever some argument is the identity.
  bool is_normalized() const;
  bool is_zero() const;

  CocycleTable operator+(const CocycleTable &other) const;
  CocycleTable scaled(std::int64_t k) const;
  /// Same cochain read in Z/(m*factor) via zeta_m = zeta_{m*factor}^factor.
  CocycleTable lifted(std::uint32_t factor) const;

  bool operator==(const CocycleTable &other) const;

private:
  Group group_;
  int degree_;
  std::uint32_t modulus_;
  std::size_t n_;
  std::vector<std::uint32_t> values_;
};

/// Exhaustive check of the cocycle identity d c = 0 in the table's degree
/// (trivial coefficients). For degree 2:
/// c(h,k) + c(g,hk) = c(gh,k) + c(g,h).
bool cocycle_check(const CocycleTable &c);

/// Bar-resolution differential with trivial action; degree n -> n+1.
CocycleTable coboundary(const CocycleTable &f);

/// Bound on the number of linear equations a cohomology computation may set up.
inline constexpr std::size_t kDefaultCochainBudget = 110'000;

/// Image of H^2(G, mu_m) in H^2(G, C*): 2-cocycles with values in mu_m modulo
/// those that become coboundaries over C*.
struct H2Structure {
  std::uint32_t modulus = 1;
  std::vector<CocycleTable> generators;
  /// Class order of each generator; the group is their direct sum.
  std::vector<std::uint32_t> divisors;
  /// Spans the C*-coboundaries inside Z^2(G, mu_m).
  std::vector<CocycleTable> coboundary_generators;

  std::size_t order() const;
};

H2Structure h2_structure(const Group &g, std::uint32_t modulus,
                         std::size_t budget = kDefaultCochainBudget);

/// Least k >= 1 with k*c a coboundary. Degree 2 uses C*-coboundaries (the
/// class in H^2(G, C*)); degree 3 uses coboundaries of mu_m-valued 2-cochains.
/// Throws InvalidArgument if c is not a normalized cocycle.
std::uint32_t class_order(const CocycleTable &c, std::size_t budget = kDefaultCochainBudget);

/// Restriction to H, as a table over H.as_group().
CocycleTable restrict_cocycle(const CocycleTable &c, const Subgroup &h);

/// A family alpha_x(g, h), x in X, of 2-cochains on G with values in mu_m.
class CocycleFamily {
public:
  CocycleFamily(GSet gset, std::uint32_t modulus);
  CocycleFamily(GSet gset, std::uint32_t modulus, std::vector<std::uint32_t> values);

  const GSet &gset() const { return gset_; }
  const Group &group() const { return gset_.group(); }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<std::uint32_t> &values() const { return values_; }

  std::uint32_t operator()(Point x, Elem g, Elem h) const
  {
    return values_[(static_cast<std::size_t>(x) * n_ + g) * n_ + h];
  }
  void set(Point x, Elem g, Elem h, std::uint32_t value)
  {
    values_[(static_cast<std::size_t>(x) * n_ + g) * n_ + h] = value;
  }

  /// alpha_x restricted to Stab_G(x), over stabilizer(gset, x).as_group().
  CocycleTable component(Point x) const;

private:
  GSet gset_;
  std::uint32_t modulus_;
  std::size_t n_;
  std::vector<std::uint32_t> values_;
};

/// Normalization plus the twisted identity
/// alpha_x(g,h) alpha_x(gh,k) = alpha_x(g,hk) alpha_{g^-1.x}(h,k), exhaustively.
bool family_check(const CocycleFamily &alpha);

/// alpha_x = theta for every x.
CocycleFamily constant_family(const GSet &x, const CocycleTable &theta);

/// alpha_x(g,h) = w(x,g,h) w(g,h,(gh)^-1 x gh) / w(g, g^-1 x g, h) over the
/// conjugation G-set. Throws InvalidArgument if w is not a normalized 3-cocycle.
CocycleFamily transgression_family(const CocycleTable &omega);

/// The transgression component at x, restricted to the centralizer C_G(x).
CocycleTable dpr_transgression(const CocycleTable &omega, Elem x);

/// The n tables c_q(a,b,c) = q a floor((b+c)/n) (m/n) mod m, q = 0..n-1, on a
/// cyclic group of order n (elements read as powers of its first element of
/// order n). Each table is verified with cocycle_check.
std::vector<CocycleTable> standard_3cocycles_cyclic(const Group &cyclic, std::uint32_t modulus);

/// w(x,y,z) = a(x) floor((a(y)+a(z))/k) mod k for each generator a of
/// Hom(G, Z/k), read with lifts in [0, k): the standard generator of
/// H^3(Z/k, C*) pulled back along a.
std::vector<CocycleTable> inflated_3cocycles(const Group &g, std::uint32_t k);

/// alpha_x(g, h) for g, h in H, over restrict_gset(alpha.gset(), h).
CocycleFamily restrict_family(const CocycleFamily &alpha, const Subgroup &h);

/// {"degree", "modulus", "group" (table hash), "values" (flat, lexicographic)}.
nlohmann::json cocycle_to_json(const CocycleTable &c);
CocycleTable cocycle_from_json(const nlohmann::json &j, const Group &g);

} // namespace mckaylab
