#include <gtest/gtest.h>

#include <random>

#include <fmt/format.h>

#include "mckaylab/cohomology.hpp"
#include "mckaylab/error.hpp"
#include "mckaylab/mpair.hpp"
#include "mckaylab/presets.hpp"
#include "oracles.hpp"

using namespace mckaylab;

namespace {

CocycleTable random_cochain(const Group &g, int degree, std::uint32_t m, std::mt19937 &rng)
{
  CocycleTable f(g, degree, m);
  std::uniform_int_distribution<std::uint32_t> pick(0, m - 1);
  std::vector<Elem> args(static_cast<std::size_t>(degree));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == args.size()) {
      if (std::none_of(args.begin(), args.end(), [](Elem e) { return e == 0; }))
        f.set(args, pick(rng));
      return;
    }
    for (Elem e = 0; e < g.order(); ++e) {
      args[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
  return f;
}

// theta(g,h) - theta(h,g) on an abelian group: zero iff the class dies in H^2(G, C*).
std::vector<std::uint32_t> commutator_pairing(const CocycleTable &c)
{
  const std::size_t n = c.group().order();
  std::vector<std::uint32_t> b(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      b[g * n + h] = (c(g, h) + c.modulus() - c(h, g)) % c.modulus();
  return b;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
  return std::gcd(a, std::gcd(b, c));
}

} // namespace

TEST(Cochains, CoboundaryOfCoboundaryVanishes)
{
  std::mt19937 rng(7);
  for (const auto &name : {"C2", "C4", "V4", "S3", "C2xC4", "D8", "Q8", "A4", "C2xC2xC2", "C3xC3", "D16"})
    for (std::uint32_t m : {2u, 3u, 4u}) {
      const Group g = preset_group(name);
      for (int degree : {1, 2}) {
        const auto f = random_cochain(g, degree, m, rng);
        const auto df = coboundary(f);
        EXPECT_TRUE(cocycle_check(df)) << name;
        EXPECT_TRUE(coboundary(df).is_zero()) << name << " m=" << m;
      }
    }
}

TEST(Cochains, ZeroTablesAndNormalization)
{
  const Group g = preset_group("S3");
  EXPECT_TRUE(coboundary(CocycleTable(g, 1, 3)).is_zero());
  EXPECT_TRUE(cocycle_check(CocycleTable(g, 2, 5)));
  EXPECT_TRUE(cocycle_check(CocycleTable(g, 3, 2)));
  EXPECT_THROW(CocycleTable(g, 2, 2, {1}), InvalidArgument);
}

TEST(Cochains, CocycleCheckMatchesRawIdentity)
{
  std::mt19937 rng(11);
  const Group g = preset_group("V4");
  const auto theta = h2_structure(g, 2).generators.at(0);
  EXPECT_TRUE(cocycle_check(theta));
  EXPECT_TRUE(oracle::is_2cocycle(g, theta.values(), 2));
  // Flipping a single entry breaks the identity.
  for (Elem a = 1; a < 4; ++a)
    for (Elem b = 1; b < 4; ++b) {
      auto bad = theta;
      Elem args[2] = {a, b};
      bad.set(args, (theta(a, b) + 1) % 2);
      EXPECT_FALSE(cocycle_check(bad));
      EXPECT_FALSE(oracle::is_2cocycle(g, bad.values(), 2));
    }
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_cochain(g, 2, 2, rng);
    EXPECT_EQ(cocycle_check(f), oracle::is_2cocycle(g, f.values(), 2));
  }
}

TEST(H2, CyclicGroupsAreTrivial)
{
  for (std::size_t n : {2, 3, 4, 5, 6, 8, 12})
    for (std::uint32_t m : {2u, 3u, 4u, 6u})
      EXPECT_EQ(h2_structure(preset_group(fmt::format("C{}", n)), m).order(), 1u);
}

TEST(H2, KnownMultipliers)
{
  EXPECT_EQ(h2_structure(preset_group("V4"), 2).divisors, (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(h2_structure(preset_group("C2xC4"), 4).order(), 2u);
  EXPECT_EQ(h2_structure(preset_group("C4xC4"), 4).order(), 4u);
  EXPECT_EQ(h2_structure(preset_group("C4xC4"), 2).order(), 2u);
  EXPECT_EQ(h2_structure(preset_group("C2xC2xC2"), 2).order(), 8u);
  EXPECT_EQ(h2_structure(preset_group("C3xC3"), 3).order(), 3u);
  EXPECT_EQ(h2_structure(preset_group("C3xC3"), 2).order(), 1u);
  for (const auto &name : {"S3", "Q8", "SL23", "C5"})
    EXPECT_EQ(h2_structure(preset_group(name), 2).order(), 1u) << name;
  for (const auto &name : {"D8", "A4", "S4", "D12", "S3xS3"})
    EXPECT_EQ(h2_structure(preset_group(name), 2).order(), 2u) << name;
  EXPECT_EQ(h2_structure(preset_group("A4"), 3).order(), 1u);
}

TEST(H2, BruteForceOnV4)
{
  // Enumerate every normalized Z/m-valued 2-cochain on V4. Classes in
  // H^2(V4, C*) are detected by the commutator pairing.
  const Group g = preset_group("V4");
  for (std::uint32_t m : {2u, 4u}) {
    std::set<std::vector<std::uint32_t>> pairings;
    std::size_t total = 1;
    for (int i = 0; i < 9; ++i)
      total *= m;
    for (std::size_t code = 0; code < total; ++code) {
      CocycleTable c(g, 2, m);
      std::size_t rest = code;
      for (Elem a = 1; a < 4; ++a)
        for (Elem b = 1; b < 4; ++b) {
          Elem args[2] = {a, b};
          c.set(args, static_cast<std::uint32_t>(rest % m));
          rest /= m;
        }
      if (oracle::is_2cocycle(g, c.values(), m))
        pairings.insert(commutator_pairing(c));
    }
    EXPECT_EQ(h2_structure(g, m).order(), pairings.size()) << "m=" << m;
  }
}

TEST(H2, AbelianGroupsMatchAlternatingPairings)
{
  // For A = Z/a x Z/b x ..., the C*-image of H^2(A, Z/m) has order
  // prod_{i<j} gcd(n_i, n_j, m), and distinct classes have distinct pairings.
  const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> groups = {
      {"V4", {2, 2}},          {"C2xC4", {2, 4}},       {"C4xC4", {4, 4}},
      {"C2xC2xC2", {2, 2, 2}}, {"C3xC3", {3, 3}},       {"C2xC6", {2, 6}},
      {"C2xC2xC4", {2, 2, 4}}, {"C2xC2xC2xC2", {2, 2, 2, 2}}};
  for (const auto &[name, factors] : groups) {
    const Group g = preset_group(name);
    for (std::uint32_t m : {2u, 3u, 4u}) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
          expected *= gcd3(factors[i], factors[j], m);
      const auto h2 = h2_structure(g, m);
      ASSERT_EQ(h2.order(), expected) << name << " m=" << m;
      // Enumerate all combinations of generators and count distinct pairings.
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<std::uint32_t> k(h2.generators.size(), 0);
      while (true) {
        CocycleTable c(g, 2, m);
        for (std::size_t i = 0; i < k.size(); ++i)
          c = c + h2.generators[i].scaled(k[i]);
        seen.insert(commutator_pairing(c));
        std::size_t i = 0;
        while (i < k.size() && ++k[i] == h2.divisors[i])
          k[i++] = 0;
        if (i == k.size())
          break;
      }
      EXPECT_EQ(seen.size(), expected) << name << " m=" << m;
    }
  }
}

TEST(H2, GeneratorsAreNormalizedCocyclesWithListedOrders)
{
  for (const auto &name : {"V4", "D8", "A4", "S4", "C2xQ8", "C4xC4", "C2xD8"})
    for (std::uint32_t m : {2u, 4u}) {
      const auto h2 = h2_structure(preset_group(name), m);
      ASSERT_EQ(h2.generators.size(), h2.divisors.size());
      for (std::size_t i = 0; i < h2.generators.size(); ++i) {
        EXPECT_TRUE(h2.generators[i].is_normalized());
        EXPECT_TRUE(cocycle_check(h2.generators[i]));
        EXPECT_EQ(class_order(h2.generators[i]), h2.divisors[i]) << name;
        EXPECT_GT(h2.divisors[i], 1u);
      }
    }
}

TEST(H2, BudgetIsEnforced)
{
  EXPECT_THROW(h2_structure(preset_group("S4"), 2, 10), CapExceeded);
}

TEST(ClassOrder, InvariantUnderCoboundaries)
{
  std::mt19937 rng(3);
  for (const auto &name : {"V4", "D8", "A4", "C4xC4"}) {
    const Group g = preset_group(name);
    for (std::uint32_t m : {2u, 4u})
      for (const auto &theta : h2_structure(g, m).generators)
        for (int trial = 0; trial < 3; ++trial) {
          const auto shifted = theta + coboundary(random_cochain(g, 1, m, rng));
          EXPECT_EQ(class_order(shifted), class_order(theta)) << name;
        }
    EXPECT_EQ(class_order(CocycleTable(g, 2, 2)), 1u);
    EXPECT_EQ(class_order(coboundary(random_cochain(g, 1, 4, rng))), 1u);
  }
}

TEST(ClassOrder, RejectsNonCocycles)
{
  const Group g = preset_group("V4");
  CocycleTable bad(g, 2, 2);
  Elem args[2] = {1, 2};
  bad.set(args, 1);
  EXPECT_THROW(class_order(bad), InvalidArgument);
}

TEST(Restriction, WholeTrivialAndCyclicSubgroups)
{
  const Group g = preset_group("V4");
  const auto theta = h2_structure(g, 2).generators.at(0);
  EXPECT_EQ(restrict_cocycle(theta, Subgroup::whole(g)).values(), theta.values());
  EXPECT_TRUE(restrict_cocycle(theta, Subgroup::trivial(g)).is_zero());
  for (Elem e = 1; e < 4; ++e) {
    const auto c2 = subgroup_generated(g, std::vector<Elem>{e});
    EXPECT_EQ(class_order(restrict_cocycle(theta, c2)), 1u);
  }
}

TEST(Restriction, PPartInjectsIntoSylowNormalizer)
{
  for (const auto &name : {"V4", "D8", "A4", "S4", "D12", "S3xS3", "C2xA4", "C4xC4", "C2xS4"})
    for (std::uint32_t m : {2u, 3u, 4u}) {
      const Group g = preset_group(name);
      for (const auto &theta : h2_structure(g, m).generators)
        for (auto p : prime_divisors(g.order())) {
          if (class_order(theta) % p != 0)
            continue;
          const auto n = sylow_normalizer(g, p);
          EXPECT_EQ(class_order(restrict_cocycle(theta, n)) % p, 0u) << name << " p=" << p;
        }
    }
}

TEST(Cyclic3Cocycles, SingleEntryForC2)
{
  const Group g = preset_group("C2");
  const auto cs = standard_3cocycles_cyclic(g, 2);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(cs[0].is_zero());
  std::size_t nonzero = 0;
  for (auto v : cs[1].values())
    nonzero += v != 0 ? 1 : 0;
  EXPECT_EQ(nonzero, 1u);
  EXPECT_EQ(cs[1](1, 1, 1), 1u);
  EXPECT_THROW(standard_3cocycles_cyclic(g, 3), InvalidArgument);
  EXPECT_THROW(standard_3cocycles_cyclic(preset_group("V4"), 4), InvalidArgument);
}

TEST(Cyclic3Cocycles, PairwiseNonCohomologous)
{
  for (std::size_t n = 2; n <= 8; ++n) {
    const Group g = preset_group(fmt::format("C{}", n));
    const auto cs = standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(n));
    for (std::size_t q = 0; q < n; ++q) {
      EXPECT_TRUE(cocycle_check(cs[q]));
      EXPECT_EQ(class_order(cs[q]), n / std::gcd(q == 0 ? n : q, n)) << "n=" << n << " q=" << q;
      for (std::size_t r = q + 1; r < n; ++r)
        EXPECT_GT(class_order(cs[r] + cs[q].scaled(-1)), 1u);
    }
  }
}

TEST(Cyclic3Cocycles, InflatedTablesAreCocycles)
{
  for (const auto &name : {"S3", "D8", "C2xC4", "A4", "S3xS3"})
    for (std::uint32_t k : {2u, 3u, 4u})
      for (const auto &w : inflated_3cocycles(preset_group(name), k)) {
        EXPECT_TRUE(cocycle_check(w));
        EXPECT_TRUE(w.is_normalized());
      }
  EXPECT_EQ(inflated_3cocycles(preset_group("S3"), 2).size(), 1u);
  EXPECT_TRUE(inflated_3cocycles(preset_group("A4"), 2).empty());
}

TEST(Transgression, FamilySatisfiesTwistedIdentityForCyclicGroups)
{
  for (std::size_t n = 2; n <= 8; ++n) {
    const Group g = preset_group(fmt::format("C{}", n));
    for (const auto &w : standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(n))) {
      const auto fam = transgression_family(w);
      EXPECT_TRUE(family_check(fam));
      for (Elem x = 0; x < n; ++x) {
        const auto a = dpr_transgression(w, x);
        EXPECT_TRUE(cocycle_check(a));
        EXPECT_EQ(a.group().order(), n);
      }
      EXPECT_TRUE(dpr_transgression(w, 0).is_zero());
    }
  }
}

TEST(Transgression, NonabelianInflatedCocycles)
{
  for (const auto &name : {"S3", "D8", "Q8", "A4", "D12"}) {
    const Group g = preset_group(name);
    for (std::uint32_t k : {2u, 3u})
      for (const auto &w : inflated_3cocycles(g, k)) {
        const auto fam = transgression_family(w);
        EXPECT_TRUE(family_check(fam)) << name;
        for (Elem x = 0; x < g.order(); ++x) {
          const auto a = dpr_transgression(w, x);
          EXPECT_EQ(a.group().order(), centralizer(g, x).order());
          EXPECT_TRUE(cocycle_check(a)) << name << " x=" << x;
        }
      }
  }
}

TEST(Transgression, TrivialOmegaGivesTrivialFamily)
{
  const Group g = preset_group("S3");
  const auto fam = transgression_family(CocycleTable(g, 3, 2));
  for (auto v : fam.values())
    EXPECT_EQ(v, 0u);
}

TEST(Transgression, RejectsNonCocycle)
{
  const Group g = preset_group("C2");
  CocycleTable bad(g, 3, 2);
  Elem args[3] = {1, 1, 1};
  bad.set(args, 1);
  EXPECT_NO_THROW(transgression_family(bad));
  CocycleTable worse(preset_group("C3"), 3, 3);
  Elem args2[3] = {1, 2, 1};
  worse.set(args2, 1);
  EXPECT_FALSE(cocycle_check(worse));
  EXPECT_THROW(transgression_family(worse), InvalidArgument);
}

TEST(Families, RestrictionMatchesPointwise)
{
  const Group g = preset_group("S4");
  const auto theta = h2_structure(g, 2).generators.at(0);
  const auto fam = constant_family(natural_gset(g), theta);
  const auto n = sylow_normalizer(g, 3);
  const auto r = restrict_family(fam, n);
  EXPECT_TRUE(family_check(r));
  for (Point x = 0; x < 4; ++x)
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem b = 0; b < n.order(); ++b)
        EXPECT_EQ(r(x, a, b), fam(x, n.to_parent(a), n.to_parent(b)));
}

TEST(Json, CocycleRoundTrip)
{
  const Group g = preset_group("D8");
  const auto theta = h2_structure(g, 2).generators.at(0);
  const auto j = cocycle_to_json(theta);
  EXPECT_EQ(cocycle_from_json(j, g), theta);
  EXPECT_THROW(cocycle_from_json(j, preset_group("Q8")), InvalidArgument);
  EXPECT_THROW(cocycle_from_json(nlohmann::json{{"degree", 2}}, g), ParseError);
}
