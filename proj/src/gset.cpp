#include "mckaylab/gset.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

GSet::GSet(Group group, std::size_t points, std::vector<Point> table)
    : group_(std::move(group)), points_(points), table_(std::move(table))
{
}

GSet GSet::from_action_table(Group group, std::size_t points, std::vector<Point> table)
{
  const std::size_t n = group.order();
  if (table.size() != n * points)
    throw InvalidArgument("action table has the wrong size");
  for (std::size_t g = 0; g < n; ++g) {
    if (!is_bijection(std::span<const Point>(table.data() + g * points, points)))
      throw InvalidArgument(fmt::format("action of element {} is not a permutation", g));
  }
  for (Point x = 0; x < points; ++x)
    if (table[x] != x)
      throw InvalidArgument("identity does not act trivially");
  // Checking generators on the left suffices: every element is a word in them.
  std::vector<Elem> gens;
  for (const auto &p : group.generators())
    gens.push_back(group.index_of(p));
  for (Elem g : gens)
    for (Elem h = 0; h < n; ++h) {
      Elem gh = group.mul(g, h);
      for (Point x = 0; x < points; ++x)
        if (table[g * points + table[h * points + x]] != table[gh * points + x])
          throw InvalidArgument("table is not a left action: g.(h.x) != (gh).x");
    }
  return GSet(std::move(group), points, std::move(table));
}

GSet GSet::from_generator_images(Group group, std::size_t points,
                                 const std::vector<std::vector<Point>> &images)
{
  if (images.size() != group.generators().size())
    throw InvalidArgument(fmt::format("expected images for {} generators, got {}",
                                      group.generators().size(), images.size()));
  for (const auto &img : images)
    if (img.size() != points || !is_bijection(img))
      throw InvalidArgument("generator images do not form a permutation of the points");

  const std::size_t n = group.order();
  std::vector<Point> table(n * points);
  for (Point x = 0; x < points; ++x)
    table[x] = x;
  // Fill rows parent-first along the breadth-first word tree.
  std::vector<std::vector<Elem>> children(n);
  for (Elem e = 1; e < n; ++e)
    children[group.word_parent(e)].push_back(e);
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem parent = queue[head];
    for (Elem e : children[parent]) {
      const auto &img = images[group.word_generator(e)];
      for (Point x = 0; x < points; ++x)
        table[e * points + x] = img[table[parent * points + x]];
      queue.push_back(e);
    }
  }
  return from_action_table(std::move(group), points, std::move(table));
}

OrbitDecomposition action_orbits(const GSet &x)
{
  OrbitDecomposition out;
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  out.orbit_of.assign(x.size(), kNone);
  const Group &g = x.group();
  for (Point start = 0; start < x.size(); ++start) {
    if (out.orbit_of[start] != kNone)
      continue;
    auto id = static_cast<std::uint32_t>(out.orbits.size());
    std::vector<Point> orbit;
    for (Elem h = 0; h < g.order(); ++h) {
      Point y = x.act(h, start);
      if (out.orbit_of[y] == kNone) {
        out.orbit_of[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(orbit.front());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const GSet &x) { return action_orbits(x).orbits.size() == 1; }

Subgroup stabilizer(const GSet &x, Point point)
{
  if (point >= x.size())
    throw InvalidArgument(fmt::format("point {} is not in the G-set", point + 1));
  std::vector<Elem> out;
  for (Elem g = 0; g < x.group().order(); ++g)
    if (x.act(g, point) == point)
      out.push_back(g);
  return Subgroup(x.group(), std::move(out), Subgroup::Unchecked{});
}

GSet natural_gset(const Group &g)
{
  const std::size_t k = g.degree();
  std::vector<Point> table(g.order() * k);
  for (Elem e = 0; e < g.order(); ++e)
    std::copy(g.element(e).begin(), g.element(e).end(), table.begin() + e * k);
  return GSet::from_action_table(g, k, std::move(table));
}

GSet conjugation_gset(const Group &g)
{
  const std::size_t n = g.order();
  std::vector<Point> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      table[a * n + x] = g.conj(a, x);
  return GSet::from_action_table(g, n, std::move(table));
}

GSet regular_gset(const Group &g)
{
  const std::size_t n = g.order();
  std::vector<Point> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      table[a * n + x] = g.mul(a, x);
  return GSet::from_action_table(g, n, std::move(table));
}

GSet trivial_gset(const Group &g, std::size_t points)
{
  if (points == 0)
    throw InvalidArgument("a G-set must be non-empty");
  std::vector<Point> table(g.order() * points);
  for (Elem a = 0; a < g.order(); ++a)
    for (Point x = 0; x < points; ++x)
      table[a * points + x] = x;
  return GSet::from_action_table(g, points, std::move(table));
}

GSet coset_gset(const Group &g, const Subgroup &h)
{
  if (!h.parent().same_as(g))
    throw InvalidArgument("coset_gset: H is not a subgroup of G");
  const std::size_t n = g.order();
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset_of(n, kNone);
  std::size_t count = 0;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != kNone)
      continue;
    for (Elem s : h.elements())
      coset_of[g.mul(x, s)] = static_cast<std::uint32_t>(count);
    ++count;
  }
  // Coset i's minimal element, in increasing order by construction.
  std::vector<Elem> rep(count);
  for (Elem x = n; x-- > 0;)
    rep[coset_of[x]] = x;
  std::vector<Point> table(n * count);
  for (Elem a = 0; a < n; ++a)
    for (std::size_t c = 0; c < count; ++c)
      table[a * count + c] = coset_of[g.mul(a, rep[c])];
  return GSet::from_action_table(g, count, std::move(table));
}

GSet restrict_gset(const GSet &x, const Subgroup &h)
{
  if (!h.parent().same_as(x.group()))
    throw InvalidArgument("restrict_gset: H is not a subgroup of the acting group");
  const std::size_t k = x.size();
  std::vector<Point> table;
  table.reserve(h.order() * k);
  for (Elem e : h.elements())
    table.insert(table.end(), x.table().begin() + e * k, x.table().begin() + (e + 1) * k);
  return GSet::from_action_table(h.as_group(), k, std::move(table));
}

GSet parse_gset_text(const Group &g, std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string keyword;
  std::size_t points = 0;
  if (!(in >> keyword >> points) || keyword != "points" || points == 0)
    throw ParseError("G-set text must start with 'points <k>'");
  std::vector<std::vector<Point>> images;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<Point> img;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > points)
        throw ParseError(fmt::format("image {} out of range 1..{}", v, points));
      img.push_back(static_cast<Point>(v - 1));
    }
    if (!row.eof())
      throw ParseError(fmt::format("malformed G-set line \"{}\"", line));
    if (img.empty())
      continue;
    if (img.size() != points)
      throw ParseError(fmt::format("G-set line has {} images, expected {}", img.size(), points));
    images.push_back(std::move(img));
  }
  return GSet::from_generator_images(g, points, images);
}

} // namespace mckaylab
