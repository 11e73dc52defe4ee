#include <algorithm>
#include <deque>
#include <unordered_set>

#include <fmt/format.h>

#include "mckaylab/error.hpp"
#include "mckaylab/group.hpp"

namespace mckaylab {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

ClassPartition class_partition(const Group &g)
{
  const std::size_t n = g.order();
  ClassPartition out;
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  out.class_of.assign(n, kUnassigned);
  for (Elem x = 0; x < n; ++x) {
    if (out.class_of[x] != kUnassigned)
      continue;
    auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<Elem> cls;
    for (Elem h = 0; h < n; ++h) {
      Elem y = g.conj(h, x);
      if (out.class_of[y] == kUnassigned) {
        out.class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group &g)
{
  return class_partition(g).classes;
}

Subgroup centralizer(const Group &g, Elem x)
{
  if (x >= g.order())
    throw InvalidArgument("centralizer: element index out of range");
  std::vector<Elem> out;
  for (Elem h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h))
      out.push_back(h);
  return Subgroup(g, std::move(out), Subgroup::Unchecked{});
}

namespace {

std::vector<Elem> closure(const Group &g, std::span<const Elem> gens)
{
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  add(0);
  for (std::size_t head = 0; head < members.size(); ++head) {
    Elem cur = members[head];
    for (Elem s : gens)
      add(g.mul(s, cur));
  }
  return members;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

Subgroup subgroup_generated(const Group &g, std::span<const Elem> gens)
{
  for (Elem e : gens)
    if (e >= g.order())
      throw InvalidArgument("subgroup_generated: element index out of range");
  return Subgroup(g, closure(g, gens), Subgroup::Unchecked{});
}

std::vector<Elem> conjugate_elements(const Subgroup &h, Elem g)
{
  const Group &parent = h.parent();
  std::vector<Elem> out;
  out.reserve(h.order());
  Elem gi = parent.inv(g);
  for (Elem x : h.elements())
    out.push_back(parent.mul(parent.mul(gi, x), g));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Group &g, const Subgroup &h)
{
  if (!h.parent().same_as(g))
    throw InvalidArgument("normalizer: H is not a subgroup of G");
  std::vector<Elem> out;
  for (Elem c = 0; c < g.order(); ++c) {
    Elem ci = g.inv(c);
    bool keeps = std::all_of(h.elements().begin(), h.elements().end(), [&](Elem x) {
      return h.contains(g.mul(g.mul(ci, x), c));
    });
    if (keeps)
      out.push_back(c);
  }
  return Subgroup(g, std::move(out), Subgroup::Unchecked{});
}

Subgroup sylow_subgroup(const Group &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(fmt::format("sylow_subgroup: {} is not prime", p));
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p)
    target *= p;

  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  while (current.size() < target) {
    bool grown = false;
    for (Elem c = 1; c < g.order() && !grown; ++c) {
      if (in[c] || !is_power_of(g.element_order(c), p))
        continue;
      Elem ci = g.inv(c);
      bool normalizes = std::all_of(current.begin(), current.end(),
                                    [&](Elem x) { return in[g.mul(g.mul(c, x), ci)]; });
      if (!normalizes)
        continue;
      gens.push_back(c);
      current = closure(g, gens);
      std::fill(in.begin(), in.end(), 0);
      for (Elem e : current)
        in[e] = 1;
      grown = true;
    }
    if (!grown)
      throw Error("sylow_subgroup: p-chain could not be extended");
  }
  return Subgroup(g, std::move(current), Subgroup::Unchecked{});
}

Subgroup derived_subgroup(const Group &g)
{
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(g, comms);
}

std::vector<Subgroup> subgroup_class_representatives(const Group &g, std::size_t max_classes)
{
  const std::size_t n = g.order();
  auto key_of = [n](const std::vector<Elem> &elems) {
    std::string key((n + 7) / 8, '\0');
    for (Elem e : elems)
      key[e / 8] = static_cast<char>(key[e / 8] | (1 << (e % 8)));
    return key;
  };

  struct Found {
    std::vector<Elem> gens;
    std::vector<Elem> elems;
  };
  std::vector<Found> found;
  std::unordered_set<std::string> seen;

  auto record = [&](std::vector<Elem> gens, std::vector<Elem> elems) -> bool {
    std::sort(elems.begin(), elems.end());
    if (seen.contains(key_of(elems)))
      return false;
    if (found.size() >= max_classes)
      throw CapExceeded(fmt::format("more than {} conjugacy classes of subgroups", max_classes));
    Subgroup h(g, elems, Subgroup::Unchecked{});
    for (Elem c = 0; c < n; ++c)
      seen.insert(key_of(conjugate_elements(h, c)));
    found.push_back({std::move(gens), std::move(elems)});
    return true;
  };

  record({}, {0});
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      std::vector<char> in(n, 0);
      for (Elem e : found[idx].elems)
        in[e] = 1;
      for (Elem c = 1; c < n; ++c) {
        if (in[c])
          continue;
        std::vector<Elem> gens = found[idx].gens;
        gens.push_back(c);
        if (record(gens, closure(g, gens)))
          next.push_back(found.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return found[a].elems.size() < found[b].elems.size();
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (std::size_t i : order)
    out.emplace_back(g, found[i].elems, Subgroup::Unchecked{});
  return out;
}

} // namespace mckaylab
