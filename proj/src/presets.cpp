#include "mckaylab/presets.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

namespace {

std::optional<std::size_t> parse_number(std::string_view s)
{
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

Perm cycle_perm(std::size_t degree, std::size_t first, std::size_t len)
{
  Perm p = identity_perm(degree);
  for (std::size_t i = 0; i < len; ++i)
    p[first + i] = static_cast<std::uint32_t>(first + (i + 1) % len);
  return p;
}

Group cyclic(std::size_t n, std::size_t cap)
{
  if (n == 0)
    throw InvalidArgument("C0 is not a group");
  std::vector<Perm> gens;
  if (n > 1)
    gens.push_back(cycle_perm(n, 0, n));
  return Group::from_generators(n, std::move(gens), cap, fmt::format("C{}", n));
}

Group dihedral(std::size_t order, std::size_t cap)
{
  if (order < 2 || order % 2 != 0)
    throw InvalidArgument(fmt::format("D{}: dihedral order must be even", order));
  const std::size_t n = order / 2;
  std::string name = fmt::format("D{}", order);
  if (n == 1)
    return cyclic(2, cap).renamed(name);
  if (n == 2)
    return Group::from_generators(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)},
                                  cap, name);
  Perm reflection = identity_perm(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<std::uint32_t>(n - 1 - i);
  return Group::from_generators(n, {cycle_perm(n, 0, n), reflection}, cap, name);
}

Group symmetric(std::size_t n, std::size_t cap)
{
  if (n == 0)
    throw InvalidArgument("S0 is not supported");
  std::vector<Perm> gens;
  if (n >= 2)
    gens.push_back(cycle_perm(n, 0, 2));
  if (n >= 3)
    gens.push_back(cycle_perm(n, 0, n));
  return Group::from_generators(n, std::move(gens), cap, fmt::format("S{}", n));
}

Group alternating(std::size_t n, std::size_t cap)
{
  if (n == 0)
    throw InvalidArgument("A0 is not supported");
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Perm p = identity_perm(n);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(k);
    p[k] = 0;
    gens.push_back(p);
  }
  return Group::from_generators(n, std::move(gens), cap, fmt::format("A{}", n));
}

// SL(2,3) acting on the eight nonzero vectors of F_3^2.
Group sl23(std::size_t cap)
{
  std::vector<std::array<int, 2>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != 0 || b != 0)
        vecs.push_back({a, b});
  auto perm_of = [&](std::array<int, 4> m) {
    Perm p(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      std::array<int, 2> w{(m[0] * vecs[i][0] + m[1] * vecs[i][1]) % 3,
                           (m[2] * vecs[i][0] + m[3] * vecs[i][1]) % 3};
      for (std::size_t j = 0; j < vecs.size(); ++j)
        if (vecs[j] == w)
          p[i] = static_cast<std::uint32_t>(j);
    }
    return p;
  };
  return Group::from_generators(8, {perm_of({1, 1, 0, 1}), perm_of({0, 2, 1, 0})}, cap, "SL23");
}

Group atom(std::string_view name, std::size_t cap)
{
  if (name == "Q8")
    return Group::from_generators(
        8, {parse_cycles("(1 2 3 4)(5 6 7 8)", 8), parse_cycles("(1 5 3 7)(2 8 4 6)", 8)}, cap, "Q8");
  if (name == "V4")
    return dihedral(4, cap).renamed("V4");
  if (name == "SL23")
    return sl23(cap);
  if (name.size() >= 2) {
    if (auto n = parse_number(name.substr(1))) {
      switch (name[0]) {
      case 'C':
        return cyclic(*n, cap);
      case 'D':
        return dihedral(*n, cap);
      case 'S':
        return symmetric(*n, cap);
      case 'A':
        return alternating(*n, cap);
      default:
        break;
      }
    }
  }
  throw ParseError(fmt::format("unknown preset group \"{}\"", name));
}

} // namespace

Group direct_product(const Group &a, const Group &b, std::size_t max_order)
{
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  auto embed = [&](const Perm &p, std::size_t offset) {
    Perm q = identity_perm(da + db);
    for (std::size_t i = 0; i < p.size(); ++i)
      q[offset + i] = static_cast<std::uint32_t>(offset + p[i]);
    return q;
  };
  std::vector<Perm> gens;
  for (const auto &g : a.generators())
    gens.push_back(embed(g, 0));
  for (const auto &g : b.generators())
    gens.push_back(embed(g, da));
  if (a.order() * b.order() > max_order)
    throw CapExceeded(fmt::format("group order exceeds cap {}", max_order));
  return Group::from_generators(da + db, std::move(gens), max_order,
                                fmt::format("{}x{}", a.name(), b.name()));
}

bool is_preset_name(std::string_view name)
{
  try {
    preset_group(name, 1);
    return true;
  } catch (const CapExceeded &) {
    return true;
  } catch (const Error &) {
    return false;
  }
}

Group preset_group(std::string_view name, std::size_t max_order)
{
  std::size_t start = 0;
  std::optional<Group> result;
  while (start <= name.size()) {
    std::size_t end = name.find('x', start);
    if (end == std::string_view::npos)
      end = name.size();
    Group factor = atom(name.substr(start, end - start), max_order);
    result = result ? direct_product(*result, factor, max_order) : factor;
    start = end + 1;
  }
  return result->renamed(std::string(name));
}

Group parse_group_text(std::string_view text, std::size_t max_order)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::string_view body(line);
    body.remove_prefix(first);
    if (!degree) {
      std::istringstream head{std::string(body)};
      std::string keyword;
      std::size_t n = 0;
      if (!(head >> keyword >> n) || keyword != "degree")
        throw ParseError("group text must start with 'degree <n>'");
      degree = n;
      continue;
    }
    gens.push_back(parse_cycles(body, *degree));
  }
  if (!degree)
    throw ParseError("group text must start with 'degree <n>'");
  return Group::from_generators(*degree, std::move(gens), max_order);
}

Group load_group(std::string_view spec, std::size_t max_order)
{
  std::ifstream file{std::string(spec)};
  if (file) {
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_group_text(buf.str(), max_order).renamed(std::string(spec));
  }
  return preset_group(spec, max_order);
}

} // namespace mckaylab
