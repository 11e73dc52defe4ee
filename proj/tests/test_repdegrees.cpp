#include <gtest/gtest.h>

#include <fmt/format.h>

#include "mckaylab/error.hpp"
#include "mckaylab/malgebras.hpp"
#include "mckaylab/mpair.hpp"
#include "mckaylab/presets.hpp"
#include "mckaylab/repdegrees.hpp"
#include "oracles.hpp"

using namespace mckaylab;

namespace {

DegreeMultiset degs(std::vector<std::uint64_t> d) { return DegreeMultiset(std::move(d)); }

std::size_t involutions(const Group &g)
{
  std::size_t count = 0;
  for (Elem e = 0; e < g.order(); ++e)
    count += g.element_order(e) == 2 ? 1 : 0;
  return count;
}

} // namespace

TEST(DegreeMultiset, BasicOperations)
{
  DegreeMultiset d = degs({3, 1, 2, 1});
  EXPECT_EQ(d.degrees(), (std::vector<std::uint64_t>{1, 1, 2, 3}));
  EXPECT_EQ(d.sum_of_squares(), 15u);
  EXPECT_EQ(d.count_equal(1), 2u);
  EXPECT_EQ(d.count_coprime(2), 3u);
  EXPECT_EQ(d.count_coprime(3), 3u);
  EXPECT_EQ(d.to_string(), "1 1 2 3");
  d.add_scaled(degs({1, 2}), 3);
  EXPECT_EQ(d.to_string(), "1 1 2 3 3 6");
  EXPECT_THROW(degs({0}), InvalidArgument);
}

TEST(CharacterDegrees, KnownGroups)
{
  EXPECT_EQ(character_degrees(preset_group("S3")), degs({1, 1, 2}));
  EXPECT_EQ(character_degrees(preset_group("S4")), degs({1, 1, 2, 3, 3}));
  EXPECT_EQ(character_degrees(preset_group("A4")), degs({1, 1, 1, 3}));
  EXPECT_EQ(character_degrees(preset_group("Q8")), degs({1, 1, 1, 1, 2}));
  EXPECT_EQ(character_degrees(preset_group("D8")), degs({1, 1, 1, 1, 2}));
  EXPECT_EQ(character_degrees(preset_group("SL23")), degs({1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(character_degrees(preset_group("A5")), degs({1, 3, 3, 4, 5}));
  EXPECT_EQ(character_degrees(preset_group("S5")), degs({1, 1, 4, 4, 5, 5, 6}));
  EXPECT_EQ(character_degrees(preset_group("C5")), degs({1, 1, 1, 1, 1}));
  EXPECT_EQ(character_degrees(preset_group("C1")), degs({1}));
}

TEST(CharacterDegrees, InvariantsOverCorpus)
{
  auto names = corpus_groups(64);
  for (const auto &extra : mc1_extra_groups())
    names.push_back(extra);
  for (const auto &name : names) {
    const Group g = preset_group(name);
    const auto d = character_degrees(g);
    EXPECT_EQ(d.sum_of_squares(), g.order()) << name;
    EXPECT_EQ(d.size(), conjugacy_classes(g).size()) << name;
    EXPECT_EQ(d.count_equal(1), g.order() / derived_subgroup(g).order()) << name;
    for (auto x : d.degrees())
      EXPECT_EQ(g.order() % x, 0u) << name;
  }
}

TEST(CharacterDegrees, LinearCountMatchesBruteAbelianization)
{
  for (const auto &name : {"S3", "D10", "A4", "SL23", "S4", "C2xQ8", "S3xC3", "D16"}) {
    const Group g = preset_group(name);
    EXPECT_EQ(character_degrees(g).count_equal(1), oracle::abelianization_order(g)) << name;
  }
}

TEST(CharacterDegrees, AgreeWithNumericalOracleOnGroupAlgebras)
{
  for (const auto &name : corpus_groups(64)) {
    const Group g = preset_group(name);
    const auto a = dxg(g, trivial_gset(g, 1));
    const auto numeric = wedderburn_oracle(a);
    EXPECT_EQ(numeric.dims, character_degrees(g)) << name;
  }
}

TEST(CharacterDegrees, MemoisedResultIsStable)
{
  const Group g = preset_group("S4");
  EXPECT_EQ(character_degrees(g), character_degrees(preset_group("S4")));
}

TEST(DixonPrime, CongruentAndLargeEnough)
{
  for (const auto &name : {"S3", "S4", "A5", "SL23", "C7", "D24"}) {
    const Group g = preset_group(name);
    const auto q = dixon_prime(g);
    EXPECT_TRUE(is_prime(q));
    EXPECT_EQ((q - 1) % g.exponent(), 0u);
    EXPECT_GT(static_cast<double>(q * q), 4.0 * static_cast<double>(g.order()));
  }
}

TEST(MuGroup, Examples)
{
  EXPECT_EQ(mu_group(preset_group("S3"), 2), 2u);
  EXPECT_EQ(mu_group(preset_group("S4"), 2), 4u);
  EXPECT_EQ(mu_group(preset_group("S4"), 3), 3u);
  for (const auto &name : {"C6", "V4", "C3xC3"})
    for (std::uint64_t p : {2, 3, 5})
      EXPECT_EQ(mu_group(preset_group(name), p), preset_group(name).order());
  EXPECT_THROW(mu_group(preset_group("S3"), 6), InvalidArgument);
}

TEST(CentralExtension, TrivialCocycleSplits)
{
  const Group g = preset_group("S3");
  const auto ext = central_extension(g, CocycleTable(g, 2, 3));
  EXPECT_EQ(ext.total.order(), 18u);
  EXPECT_EQ(character_degrees(ext.total), degs({1, 1, 1, 1, 1, 1, 2, 2, 2}));
}

TEST(CentralExtension, V4NontrivialIsNonabelianOfOrder8)
{
  const Group g = preset_group("V4");
  const auto ext = central_extension(g, h2_structure(g, 2).generators.at(0));
  const Group &l = ext.total;
  EXPECT_EQ(l.order(), 8u);
  EXPECT_FALSE(l.is_abelian());
  // D8 has five involutions, Q8 has one.
  const auto inv = involutions(l);
  EXPECT_TRUE(inv == 5 || inv == 1) << inv;
}

TEST(CentralExtension, StructureMaps)
{
  for (const auto &name : {"V4", "D8", "A4", "C4xC4"}) {
    const Group g = preset_group(name);
    for (const auto &theta : h2_structure(g, 4).generators) {
      const auto ext = central_extension(g, theta);
      const Group &l = ext.total;
      EXPECT_EQ(l.order(), 4 * g.order());
      EXPECT_EQ(l.element_order(ext.z), 4u);
      for (Elem x = 0; x < l.order(); ++x) {
        EXPECT_EQ(l.mul(ext.z, x), l.mul(x, ext.z));
        for (Elem y = 0; y < l.order(); ++y)
          ASSERT_EQ(ext.project(l.mul(x, y)), g.mul(ext.project(x), ext.project(y)));
      }
      for (Elem a = 0; a < g.order(); ++a) {
        EXPECT_EQ(ext.project(ext.section(a)), a);
        for (Elem b = 0; b < g.order(); ++b) {
          // s(a) s(b) = z^theta(a,b) s(ab)
          const Elem lhs = l.mul(ext.section(a), ext.section(b));
          EXPECT_EQ(lhs, ext.make(theta(a, b), g.mul(a, b)));
        }
      }
    }
  }
}

TEST(CentralExtension, RejectsNonCocyclesAndCaps)
{
  const Group g = preset_group("V4");
  CocycleTable bad(g, 2, 2);
  Elem args[2] = {1, 2};
  bad.set(args, 1);
  EXPECT_THROW(central_extension(g, bad), InvalidArgument);
  EXPECT_THROW(central_extension(g, h2_structure(g, 2).generators.at(0), 4), CapExceeded);
}

TEST(TwistedDegrees, Examples)
{
  const Group v4 = preset_group("V4");
  const auto theta = h2_structure(v4, 2).generators.at(0);
  EXPECT_EQ(twisted_degrees(v4, theta), degs({2}));
  EXPECT_EQ(mu_twisted(v4, theta, 2), 0u);
  EXPECT_EQ(mu_twisted(v4, theta, 3), 1u);
  EXPECT_EQ(twisted_degrees(v4, CocycleTable(v4, 2, 2)), character_degrees(v4));
  const Group s4 = preset_group("S4");
  EXPECT_EQ(twisted_degrees(s4, h2_structure(s4, 2).generators.at(0)), degs({2, 2, 4}));
  const Group a4 = preset_group("A4");
  EXPECT_EQ(twisted_degrees(a4, h2_structure(a4, 2).generators.at(0)), degs({2, 2, 2}));
}

TEST(TwistedDegrees, CyclicGroupsStayLinear)
{
  for (std::size_t n : {2, 3, 4, 6}) {
    const Group g = preset_group(fmt::format("C{}", n));
    for (const auto &w : standard_3cocycles_cyclic(g, static_cast<std::uint32_t>(n)))
      for (Elem x = 0; x < n; ++x)
        EXPECT_EQ(twisted_degrees(g, dpr_transgression(w, x)).count_equal(1), n);
  }
}

TEST(TwistedDegrees, DivisibleByClassOrderAndSquareSum)
{
  for (const auto &name : corpus_groups(48)) {
    const Group g = preset_group(name);
    for (std::uint32_t m : {2u, 3u, 4u})
      for (const auto &theta : h2_structure(g, m).generators) {
        const auto d = twisted_degrees(g, theta);
        const auto k = class_order(theta);
        EXPECT_EQ(d.sum_of_squares(), g.order()) << name;
        for (auto x : d.degrees())
          EXPECT_EQ(x % k, 0u) << name << " m=" << m;
      }
  }
}

TEST(TwistedDegrees, IndependentOfChosenRoot)
{
  for (const auto &name : {"V4", "D8", "S4", "C4xC4", "C3xC3", "C2xQ8"})
    for (std::uint32_t m : {3u, 4u}) {
      const Group g = preset_group(name);
      for (const auto &theta : h2_structure(g, m).generators)
        for (std::uint32_t r = 1; r < m; ++r)
          if (std::gcd(r, m) == 1)
            EXPECT_EQ(twisted_degrees(g, theta, r), twisted_degrees(g, theta)) << name;
    }
}

TEST(TwistedDegrees, AgreeWithNumericalOracle)
{
  for (const auto &name : {"V4", "D8", "Q8", "A4", "S4", "C2xC4", "C4xC4", "C3xC3", "D12"})
    for (std::uint32_t m : {2u, 3u, 4u}) {
      const Group g = preset_group(name);
      for (const auto &theta : h2_structure(g, m).generators) {
        const auto numeric = wedderburn_oracle(twisted_group_algebra(theta));
        EXPECT_EQ(numeric.dims, twisted_degrees(g, theta)) << name << " m=" << m;
      }
    }
}
