// Edgepaths of a single rational tangle.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mslopes/farey.hpp"

namespace mslopes {

enum class Direction : std::uint8_t { Increasing, Decreasing };

inline Direction opposite(Direction d) {
  return d == Direction::Increasing ? Direction::Decreasing : Direction::Increasing;
}

// A path in the diagram that starts at <tangle> and moves leftward.  Basic
// paths end at an integer; candidate systems may append vertical edges, an
// edge to <1/0>, or stop part way along an edge.  A constant path is a single
// point on the horizontal edge at (constant_u, tangle) and has no edges.
struct Edgepath {
  Fraction tangle;
  std::vector<Edge> edges;
  std::optional<Fraction> constant_u;

  /// Basic path through the angle vertices tangle = vs[0], ..., vs.back().
  static Edgepath through(std::span<const Fraction> vs);
  static Edgepath constant(Fraction tangle, Fraction u0);

  bool is_constant() const { return constant_u.has_value(); }
  Fraction end_u() const;
  Fraction end_v() const;
  /// Angle vertices visited: tangle first, ending at the last complete vertex.
  std::vector<Fraction> angle_vertices() const;
  /// Last non-horizontal edge, if any.
  const Edge* last_non_horizontal() const;
  /// Copy with vertical and infinity edges removed.
  Edgepath basic_part() const;

  friend bool operator==(const Edgepath&, const Edgepath&) = default;
};

/// All minimal basic edgepaths of <t>, ordered by choosing the smaller parent first.
std::vector<Edgepath> enumerate_basic_edgepaths(Fraction t);
Edgepath monotone_basic_edgepath(Fraction t, Direction d);

/// Value of the extended basic path (horizontal edge included) at u in [0, 1].
Fraction evaluate(const Edgepath& basic, Fraction u);

/// Sum of -2 * sign * length over the edges.
Fraction path_twist(const Edgepath& p);
/// Total length of edges other than infinity edges.
Fraction path_length(const Edgepath& p);

/// No step child -> p1 -> p2 where p1 and p2 are the two parents of child.
bool is_minimal(const Edgepath& p);
/// Every successive pair of non-horizontal, non-vertical edges is reversible.
bool is_completely_reversible(const Edgepath& p);

bool is_monotone(const Edgepath& p, Direction d);

}  // namespace mslopes
