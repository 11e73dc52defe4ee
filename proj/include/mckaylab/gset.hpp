#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mckaylab/group.hpp"

namespace mckaylab {

using Point = std::uint32_t;

/// A finite left G-set: points 0..size()-1 with a full action table.
class GSet {
public:
  /// `table[g * points + x]` is g.x. Verifies every row is a permutation and
  /// that the table is a left action.
  static GSet from_action_table(Group group, std::size_t points, std::vector<Point> table);

  /// Action given by the images of 0..points-1 under each group generator,
  /// extended to all elements along the group's generator words.
  static GSet from_generator_images(Group group, std::size_t points,
                                    const std::vector<std::vector<Point>> &images);

  const Group &group() const { return group_; }
  std::size_t size() const { return points_; }
  Point act(Elem g, Point x) const { return table_[static_cast<std::size_t>(g) * points_ + x]; }
  const std::vector<Point> &table() const { return table_; }

private:
  GSet(Group group, std::size_t points, std::vector<Point> table);

  Group group_;
  std::size_t points_;
  std::vector<Point> table_;
};

struct OrbitDecomposition {
  /// Orbits sorted internally, listed in order of their minimal point.
  std::vector<std::vector<Point>> orbits;
  std::vector<Point> representatives;
  std::vector<std::uint32_t> orbit_of;
};

OrbitDecomposition action_orbits(const GSet &x);
bool is_transitive(const GSet &x);

Subgroup stabilizer(const GSet &x, Point point);

/// Action on {1..degree} by the permutations themselves.
GSet natural_gset(const Group &g);
/// Points are group elements, g: x -> g x g^-1.
GSet conjugation_gset(const Group &g);
/// Points are group elements, g: x -> g x.
GSet regular_gset(const Group &g);
GSet trivial_gset(const Group &g, std::size_t points);
/// Left cosets xH ordered by their minimal element index, g: xH -> gxH.
GSet coset_gset(const Group &g, const Subgroup &h);

/// Same points, acted on by H (as H.as_group()).
GSet restrict_gset(const GSet &x, const Subgroup &h);

/// Parses "points <k>" followed by one line per group generator listing the
/// images of 1..k.
GSet parse_gset_text(const Group &g, std::string_view text);

} // namespace mckaylab
