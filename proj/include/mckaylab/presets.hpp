#pragma once

#include <string>
#include <string_view>

#include "mckaylab/group.hpp"

namespace mckaylab {

/// Named groups: C<n>, D<2n>, S<n>, A<n>, Q8, V4, SL23, and direct products
/// joined with 'x' (e.g. "C2xC4").
Group preset_group(std::string_view name, std::size_t max_order = kDefaultMaxOrder);

bool is_preset_name(std::string_view name);

/// Acts on the disjoint union of the factors' points.
Group direct_product(const Group &a, const Group &b, std::size_t max_order = kDefaultMaxOrder);

/// "degree <n>" followed by one generator per line in disjoint-cycle notation.
Group parse_group_text(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

/// A preset name, or else a path to a group-spec text file.
Group load_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

} // namespace mckaylab
