#include "mckaylab/malgebras.hpp"

#include <random>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

AlgebraTable::AlgebraTable(std::vector<Label> labels, std::uint32_t modulus,
                           std::vector<Product> products)
    : labels_(std::move(labels)), modulus_(modulus), products_(std::move(products))
{
  if (modulus == 0)
    throw InvalidArgument("modulus must be positive");
  if (products_.size() != labels_.size() * labels_.size())
    throw InvalidArgument("product table has the wrong size");
  for (const auto &p : products_)
    if (!p.is_zero() && (p.target >= labels_.size() || p.exponent >= modulus))
      throw InvalidArgument("product entry out of range");
}

bool AlgebraTable::operator==(const AlgebraTable &other) const
{
  if (labels_ != other.labels_ || modulus_ != other.modulus_)
    return false;
  for (std::size_t i = 0; i < products_.size(); ++i) {
    const auto &a = products_[i];
    const auto &b = other.products_[i];
    if (a.target != b.target || (!a.is_zero() && a.exponent != b.exponent))
      return false;
  }
  return true;
}

namespace {

AlgebraTable build(const GSet &x, std::uint32_t modulus, const CocycleFamily *alpha,
                   std::size_t max_dim)
{
  const Group &g = x.group();
  const std::size_t n = g.order();
  const std::size_t dim = x.size() * n;
  if (dim > max_dim)
    throw CapExceeded(fmt::format("algebra dimension {} exceeds cap {}", dim, max_dim));
  std::vector<AlgebraTable::Label> labels;
  labels.reserve(dim);
  for (Point p = 0; p < x.size(); ++p)
    for (Elem e = 0; e < n; ++e)
      labels.emplace_back(p, e);
  std::vector<Product> products(dim * dim);
  for (Point px = 0; px < x.size(); ++px)
    for (Elem a = 0; a < n; ++a)
      for (Point py = 0; py < x.size(); ++py) {
        if (x.act(a, py) != px)
          continue;
        for (Elem b = 0; b < n; ++b) {
          auto &p = products[(px * n + a) * dim + (py * n + b)];
          p.target = static_cast<std::uint32_t>(px * n + g.mul(a, b));
          p.exponent = alpha ? (*alpha)(px, a, b) : 0;
        }
      }
  return AlgebraTable(std::move(labels), modulus, std::move(products));
}

} // namespace

AlgebraTable dxg(const Group &g, const GSet &x, std::size_t max_dim)
{
  if (!x.group().same_as(g))
    throw InvalidArgument("G-set is for a different group");
  return build(x, 1, nullptr, max_dim);
}

AlgebraTable dxg_twisted(const CocycleFamily &alpha, std::size_t max_dim)
{
  if (!family_check(alpha))
    throw VerificationError("cocycle family fails the twisted cocycle identity");
  return build(alpha.gset(), alpha.modulus(), &alpha, max_dim);
}

AlgebraTable twisted_group_algebra(const CocycleTable &theta)
{
  if (theta.degree() != 2)
    throw InvalidArgument("twisted group algebra needs a 2-cochain");
  return dxg_twisted(constant_family(trivial_gset(theta.group(), 1), theta));
}

AlgebraTable quantum_double(const Group &g, std::size_t max_dim)
{
  return dxg(g, conjugation_gset(g), max_dim);
}

AlgebraTable twisted_quantum_double(const CocycleTable &omega, std::size_t max_dim)
{
  const std::size_t n = omega.group().order();
  if (n * n > max_dim)
    throw CapExceeded(fmt::format("algebra dimension {} exceeds cap {}", n * n, max_dim));
  return dxg_twisted(transgression_family(omega), max_dim);
}

std::vector<AlgebraTable> orbit_ideals(const AlgebraTable &a, const GSet &x)
{
  const std::size_t dim = a.dim();
  const auto orbits = action_orbits(x);
  std::vector<std::uint32_t> orbit_of_basis(dim);
  std::vector<std::uint32_t> local(dim);
  std::vector<std::vector<std::uint32_t>> members(orbits.orbits.size());
  for (std::size_t i = 0; i < dim; ++i) {
    const Point p = a.label(i).first;
    if (p >= x.size())
      throw InvalidArgument("table labels do not match the G-set");
    const auto o = orbits.orbit_of[p];
    orbit_of_basis[i] = o;
    local[i] = static_cast<std::uint32_t>(members[o].size());
    members[o].push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto &p = a.product(i, j);
      if (p.is_zero())
        continue;
      if (orbit_of_basis[i] != orbit_of_basis[j] || orbit_of_basis[p.target] != orbit_of_basis[i])
        throw VerificationError("orbit summands are not two-sided ideals");
    }
  std::vector<AlgebraTable> out;
  for (const auto &basis : members) {
    std::vector<AlgebraTable::Label> labels;
    for (auto i : basis)
      labels.push_back(a.label(i));
    std::vector<Product> products(basis.size() * basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Product p = a.product(basis[r], basis[c]);
        if (!p.is_zero())
          p.target = local[p.target];
        products[r * basis.size() + c] = p;
      }
    out.emplace_back(std::move(labels), a.modulus(), std::move(products));
  }
  return out;
}

bool check_associativity(const AlgebraTable &a, std::size_t exhaustive_limit, std::size_t samples,
                         std::uint64_t seed)
{
  const std::size_t dim = a.dim();
  const std::uint32_t m = a.modulus();
  auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Product &ij = a.product(i, j);
    const Product &jk = a.product(j, k);
    if (ij.is_zero() || jk.is_zero()) {
      const bool left_zero = ij.is_zero() || a.product(ij.target, k).is_zero();
      const bool right_zero = jk.is_zero() || a.product(i, jk.target).is_zero();
      return left_zero && right_zero;
    }
    const Product &l = a.product(ij.target, k);
    const Product &r = a.product(i, jk.target);
    if (l.is_zero() || r.is_zero())
      return l.is_zero() && r.is_zero();
    return l.target == r.target && (ij.exponent + l.exponent) % m == (jk.exponent + r.exponent) % m;
  };
  if (dim <= exhaustive_limit) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (!triple(i, j, k))
            return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!triple(pick(rng), pick(rng), pick(rng)))
      return false;
  return true;
}

bool check_identity(const AlgebraTable &a)
{
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.label(i).second == 0)
      units.push_back(i);
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (bool left : {true, false}) {
      std::size_t hits = 0;
      for (auto u : units) {
        const Product &p = left ? a.product(u, j) : a.product(j, u);
        if (p.is_zero())
          continue;
        if (p.target != j || p.exponent != 0)
          return false;
        ++hits;
      }
      if (hits != 1)
        return false;
    }
  return true;
}

SimpleDims simple_dims_morita(const GSet &x, const CocycleFamily *alpha)
{
  if (alpha && !alpha->gset().group().same_as(x.group()))
    throw InvalidArgument("cocycle family is for a different group");
  const auto orbits = action_orbits(x);
  DegreeMultiset dims;
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
    const Point y = orbits.representatives[o];
    const std::uint64_t size = orbits.orbits[o].size();
    if (alpha) {
      CocycleTable c = alpha->component(y);
      dims.add_scaled(twisted_degrees(c.group(), c), size);
    } else {
      dims.add_scaled(character_degrees(stabilizer(x, y).as_group()), size);
    }
  }
  const std::uint64_t expected = x.size() * x.group().order();
  if (dims.sum_of_squares() != expected)
    throw VerificationError(fmt::format("Morita dimensions square-sum to {}, expected {}",
                                        dims.sum_of_squares(), expected));
  return {dims, Provenance::morita};
}

std::size_t mu_algebra(const SimpleDims &dims, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(fmt::format("{} is not prime", p));
  return dims.dims.count_coprime(p);
}

nlohmann::json algebra_to_json(const AlgebraTable &a)
{
  nlohmann::json labels = nlohmann::json::array();
  for (const auto &[x, g] : a.labels())
    labels.push_back({x, g});
  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto &p = a.product(i, j);
      if (p.is_zero())
        products.push_back({i, j, -1, -1});
      else
        products.push_back({i, j, p.target, p.exponent});
    }
  return {{"dimension", a.dim()}, {"modulus", a.modulus()}, {"labels", labels},
          {"products", products}};
}

} // namespace mckaylab
