#pragma once

// Brute-force reference computations for the tests. Everything here works
// directly on permutations or on raw tables and shares no code with the
// library's algorithms beyond Perm composition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mckaylab/group.hpp"
#include "mckaylab/permutation.hpp"

namespace oracle {

using mckaylab::Perm;

inline std::set<Perm> closure(std::size_t degree, const std::vector<Perm> &gens)
{
  std::set<Perm> seen{mckaylab::identity_perm(degree)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto &x : frontier)
      for (const auto &s : gens) {
        Perm y = mckaylab::compose(s, x);
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Conjugacy class sizes, sorted.
inline std::vector<std::size_t> class_sizes(const std::vector<Perm> &elems)
{
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto &x : elems) {
    if (done.count(x))
      continue;
    std::set<Perm> cls;
    for (const auto &g : elems)
      cls.insert(mckaylab::compose(mckaylab::compose(g, x), mckaylab::inverse(g)));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t centralizer_order(const std::vector<Perm> &elems, const Perm &x)
{
  return static_cast<std::size_t>(std::count_if(elems.begin(), elems.end(), [&](const Perm &g) {
    return mckaylab::compose(g, x) == mckaylab::compose(x, g);
  }));
}

/// Every subgroup of a small group, as sorted element-index sets, found by
/// joining cyclic subgroups until nothing new appears.
inline std::set<std::vector<mckaylab::Elem>> all_subgroups(const mckaylab::Group &g)
{
  const auto n = static_cast<mckaylab::Elem>(g.order());
  auto close = [&](std::vector<mckaylab::Elem> s) {
    std::set<mckaylab::Elem> in(s.begin(), s.end());
    in.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<mckaylab::Elem> cur(in.begin(), in.end());
      for (auto a : cur)
        for (auto b : cur)
          if (in.insert(g.mul(a, b)).second)
            grew = true;
    }
    return std::vector<mckaylab::Elem>(in.begin(), in.end());
  };
  std::set<std::vector<mckaylab::Elem>> subs;
  for (mckaylab::Elem x = 0; x < n; ++x)
    subs.insert(close({x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<mckaylab::Elem>> cur(subs.begin(), subs.end());
    for (const auto &h : cur)
      for (mckaylab::Elem x = 0; x < n; ++x) {
        if (std::binary_search(h.begin(), h.end(), x))
          continue;
        auto j = h;
        j.push_back(x);
        if (subs.insert(close(j)).second)
          grew = true;
      }
  }
  return subs;
}

inline std::vector<mckaylab::Elem> conjugate(const mckaylab::Group &g,
                                             const std::vector<mckaylab::Elem> &h,
                                             mckaylab::Elem x)
{
  std::vector<mckaylab::Elem> out;
  for (auto e : h)
    out.push_back(g.mul(g.mul(g.inv(x), e), x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of conjugacy classes of subgroups.
inline std::size_t subgroup_class_count(const mckaylab::Group &g)
{
  auto subs = all_subgroups(g);
  std::size_t classes = 0;
  while (!subs.empty()) {
    const auto h = *subs.begin();
    for (mckaylab::Elem x = 0; x < g.order(); ++x)
      subs.erase(conjugate(g, h, x));
    ++classes;
  }
  return classes;
}

inline std::size_t normalizer_order(const mckaylab::Group &g, const std::vector<mckaylab::Elem> &h)
{
  std::size_t count = 0;
  for (mckaylab::Elem x = 0; x < g.order(); ++x)
    count += conjugate(g, h, x) == h ? 1 : 0;
  return count;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// |G/G'| by closing the set of commutators.
inline std::size_t abelianization_order(const mckaylab::Group &g)
{
  std::vector<mckaylab::Elem> comm;
  for (mckaylab::Elem a = 0; a < g.order(); ++a)
    for (mckaylab::Elem b = 0; b < g.order(); ++b)
      comm.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::set<mckaylab::Elem> d(comm.begin(), comm.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<mckaylab::Elem> cur(d.begin(), d.end());
    for (auto a : cur)
      for (auto b : cur)
        if (d.insert(g.mul(a, b)).second)
          grew = true;
  }
  return g.order() / d.size();
}

/// 2-cocycle identity on a raw exponent table.
inline bool is_2cocycle(const mckaylab::Group &g, const std::vector<std::uint32_t> &t,
                        std::uint32_t m)
{
  const std::size_t n = g.order();
  for (mckaylab::Elem a = 0; a < n; ++a)
    for (mckaylab::Elem b = 0; b < n; ++b)
      for (mckaylab::Elem c = 0; c < n; ++c) {
        auto lhs = t[b * n + c] + t[a * n + g.mul(b, c)];
        auto rhs = t[g.mul(a, b) * n + c] + t[a * n + b];
        if (lhs % m != rhs % m)
          return false;
      }
  return true;
}

} // namespace oracle
