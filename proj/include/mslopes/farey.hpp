// Vertices, edges and triangles of the diagram in the (u, v) strip.
//
// Angle vertices <p/q> sit at ((q-1)/q, p/q), circle vertices o(p/q) at
// (1, p/q), and <1/0> at (-1, 0).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "mslopes/fraction.hpp"

namespace mslopes {

enum class VertexKind : std::uint8_t { Angle, Circle, Infinity };

struct Vertex {
  VertexKind kind = VertexKind::Angle;
  Fraction value;  // unused for Infinity

  static Vertex angle(Fraction f) { return {VertexKind::Angle, f}; }
  static Vertex circle(Fraction f) { return {VertexKind::Circle, f}; }
  static Vertex infinity() { return {VertexKind::Infinity, Fraction(0)}; }

  Fraction u() const;
  Fraction v() const;
  std::string label() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class EdgeKind : std::uint8_t { NonHorizontal, Horizontal, Vertical, Infinity };

// An edge as traversed by an edgepath.  `near` is where the path enters the
// edge and `far` the other end of the complete edge.  A partial edge stops at
// u = end_u before reaching `far`; for complete edges end_u == far.u().
// Vertical edges run between integers at u = 0, and there near/far are just
// the start and end of the step.
struct Edge {
  Vertex near;
  Vertex far;
  EdgeKind kind = EdgeKind::NonHorizontal;
  Fraction length{1};
  Fraction end_u;
  int sign = 0;  // +1 increasing, -1 decreasing, 0 for horizontal and infinity edges

  bool complete() const { return length == Fraction(1); }
  Fraction end_v() const;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Complete edge between two vertices; kind and sign are derived.
/// Throws std::invalid_argument if the vertices are not joined by an edge.
Edge make_edge(Vertex near, Vertex far);
/// Partial non-horizontal edge from <near> toward <far>, stopping at u0.
Edge make_partial_edge(Fraction near, Fraction far, Fraction u0);

bool is_farey_pair(Fraction a, Fraction b);
Fraction mediant(Fraction a, Fraction b);
/// u-coordinate of <f>.
Fraction angle_u(Fraction f);

/// The two Farey neighbours of f with smaller denominator, as (smaller, larger).
/// Throws std::invalid_argument for integers.
std::pair<Fraction, Fraction> parents(Fraction f);

/// Fraction of the edge <near> -> <far> covered when the path stops at u0.
/// Requires den(far) < den(near) and far.u() <= u0 <= near.u(); the result is
/// 0 at u0 = near.u() and 1 at u0 = far.u().
Fraction partial_edge_length(Fraction near, Fraction far, Fraction u0);

/// Signed r-value of a non-horizontal edge: sign * (den(near) - den(far)).
/// Empty for horizontal, vertical and infinity edges.
std::optional<int> r_value(const Edge& e);

/// Two successive complete edges e1 = a--v, e2 = v--b (e1.far == e2.near) are
/// reversible when some x other than a and b spans Farey triangles with both.
/// Edges to <1/0> are allowed.  Vertical and horizontal edges are rejected.
bool is_reversible_pair(const Edge& e1, const Edge& e2);

/// A point of the extended Farey graph: p/q with q >= 0, 1/0 included.
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;
  static Slope of(Fraction f) { return {f.num(), f.den()}; }
  static Slope of(const Vertex& v);
  static Slope normalized(std::int64_t p, std::int64_t q);
  friend bool operator==(const Slope&, const Slope&) = default;
};

bool is_farey_pair(Slope a, Slope b);
/// Third vertices of the two Farey triangles on the edge a--b.
std::array<Slope, 2> triangle_apexes(Slope a, Slope b);

/// The strip triangle whose largest-denominator corner is m: (parents(m), m).
struct Triangle {
  std::array<Fraction, 3> corners;
};
Triangle triangle_below(Fraction m);

}  // namespace mslopes
