#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mckaylab {

/// A permutation of {0, ..., n-1} stored as its image list.
/// Text forms use 1-based points in disjoint-cycle notation.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t degree);

bool is_bijection(std::span<const std::uint32_t> images);

/// (a * b)(i) = a(b(i)): b acts first.
Perm compose(const Perm &a, const Perm &b);

Perm inverse(const Perm &a);

/// Parses e.g. "(1 2)(3 4)" or "()" into a permutation of the given degree.
Perm parse_cycles(std::string_view text, std::size_t degree);

std::string format_cycles(const Perm &p);

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

} // namespace mckaylab
