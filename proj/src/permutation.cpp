#include "mckaylab/permutation.hpp"

#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "mckaylab/error.hpp"

namespace mckaylab {

Perm identity_perm(std::size_t degree)
{
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_bijection(std::span<const std::uint32_t> images)
{
  std::vector<char> seen(images.size(), 0);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

Perm compose(const Perm &a, const Perm &b)
{
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm &a)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm parse_cycles(std::string_view text, std::size_t degree)
{
  Perm p = identity_perm(degree);
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;

  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    throw ParseError("empty permutation text");

  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw ParseError(fmt::format("expected '(' at offset {} in \"{}\"", pos, text));
    ++pos;

    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size())
        throw ParseError(fmt::format("unterminated cycle in \"{}\"", text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(fmt::format("unexpected '{}' in \"{}\"", text[pos], text));
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree)
          throw ParseError(fmt::format("point out of range 1..{} in \"{}\"", degree, text));
        ++pos;
      }
      if (value == 0)
        throw ParseError(fmt::format("point 0 in \"{}\" (points are 1-based)", text));
      auto point = static_cast<std::uint32_t>(value - 1);
      if (used[point])
        throw ParseError(fmt::format("point {} repeated in \"{}\": not a bijection", value, text));
      used[point] = 1;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

std::string format_cycles(const Perm &p)
{
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start)
      continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first)
        out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = p[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace mckaylab
