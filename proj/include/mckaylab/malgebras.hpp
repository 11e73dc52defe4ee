#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mckaylab/cohomology.hpp"
#include "mckaylab/group.hpp"
#include "mckaylab/gset.hpp"
#include "mckaylab/repdegrees.hpp"

namespace mckaylab {

inline constexpr std::size_t kDefaultMaxAlgebraDim = 2500;

/// b_i b_j = zeta_m^exponent b_target, or zero.
struct Product {
  static constexpr std::uint32_t kZero = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t target = kZero;
  std::uint32_t exponent = 0;
  bool is_zero() const { return target == kZero; }
};

/// Structure constants of an algebra with basis e(x) (x) g in which every
/// product of basis elements is a root of unity times a basis element, or zero.
class AlgebraTable {
public:
  using Label = std::pair<Point, Elem>;

  AlgebraTable(std::vector<Label> labels, std::uint32_t modulus, std::vector<Product> products);

  std::size_t dim() const { return labels_.size(); }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<Label> &labels() const { return labels_; }
  const Label &label(std::size_t i) const { return labels_[i]; }
  const Product &product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const std::vector<Product> &products() const { return products_; }

  bool operator==(const AlgebraTable &other) const;

private:
  std::vector<Label> labels_;
  std::uint32_t modulus_;
  std::vector<Product> products_;
};

/// (e(x) (x) g)(e(y) (x) h) = delta_{x, g.y} e(x) (x) gh; basis index x |G| + g.
AlgebraTable dxg(const Group &g, const GSet &x, std::size_t max_dim = kDefaultMaxAlgebraDim);

/// The same product scaled by alpha_x(g, h). Throws VerificationError unless
/// alpha passes family_check.
AlgebraTable dxg_twisted(const CocycleFamily &alpha, std::size_t max_dim = kDefaultMaxAlgebraDim);

/// g o h = theta(g, h) gh.
AlgebraTable twisted_group_algebra(const CocycleTable &theta);

/// D(G) = D_X(G) for X = G under conjugation.
AlgebraTable quantum_double(const Group &g, std::size_t max_dim = kDefaultMaxAlgebraDim);

/// D^omega(G), twisted by the transgression of omega.
AlgebraTable twisted_quantum_double(const CocycleTable &omega,
                                    std::size_t max_dim = kDefaultMaxAlgebraDim);

/// The two-sided ideal spanned by {e(y) (x) g : y in Y} for each orbit Y, in
/// orbit order. Throws VerificationError if products across orbits are nonzero.
std::vector<AlgebraTable> orbit_ideals(const AlgebraTable &a, const GSet &x);

/// Exhaustive over all triples when dim <= exhaustive_limit, otherwise
/// `samples` random triples from the seed.
bool check_associativity(const AlgebraTable &a, std::size_t exhaustive_limit = 300,
                         std::size_t samples = 100'000, std::uint64_t seed = 1);

/// Sum of the basis elements with group label the identity is a two-sided identity.
bool check_identity(const AlgebraTable &a);

enum class Provenance { morita, oracle };

struct SimpleDims {
  DegreeMultiset dims;
  Provenance provenance = Provenance::morita;
};

/// Union over orbits Y (representative y) of |Y| * degs(Stab(y)); degs are
/// the alpha_y-twisted degrees when a family is given.
SimpleDims simple_dims_morita(const GSet &x, const CocycleFamily *alpha = nullptr);

struct OracleOptions {
  std::uint64_t seed = 20240601;
  std::size_t budget = 400;
  double tolerance = 1e-6;
  int max_draws = 20;
};

/// Simple-module dimensions of a semisimple table computed numerically: the
/// center from the commutation equations, primitive central idempotents from
/// the spectrum of a random central element, and d^2 = trace of left
/// multiplication by each idempotent. Throws CapExceeded above the budget and
/// VerificationError on any numerical inconsistency.
SimpleDims wedderburn_oracle(const AlgebraTable &a, const OracleOptions &options = {});

std::size_t mu_algebra(const SimpleDims &dims, std::uint64_t p);

/// {"dimension", "modulus", "labels": [[x, g]...], "products": [[i, j, k, e]...]};
/// zero products are listed with k = e = -1.
nlohmann::json algebra_to_json(const AlgebraTable &a);

} // namespace mckaylab
