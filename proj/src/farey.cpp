#include "mslopes/farey.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mslopes {

namespace {

// Inverse of a modulo m (m >= 2, gcd(a, m) == 1), in [1, m-1].
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = ((a % m) + m) % m, r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::invalid_argument("not invertible");
  return ((s0 % m) + m) % m;
}

}  // namespace

Fraction Vertex::u() const {
  switch (kind) {
    case VertexKind::Angle: return angle_u(value);
    case VertexKind::Circle: return Fraction(1);
    case VertexKind::Infinity: return Fraction(-1);
  }
  return Fraction(0);
}

Fraction Vertex::v() const { return kind == VertexKind::Infinity ? Fraction(0) : value; }

std::string Vertex::label() const {
  switch (kind) {
    case VertexKind::Angle: return "<" + value.str() + ">";
    case VertexKind::Circle: return "o(" + value.str() + ")";
    case VertexKind::Infinity: return "<1/0>";
  }
  return {};
}

Fraction Edge::end_v() const {
  if (kind != EdgeKind::NonHorizontal || complete()) return far.v();
  Fraction nu = near.u(), fu = far.u();
  return near.v() + (far.v() - near.v()) * (nu - end_u) / (nu - fu);
}

Fraction angle_u(Fraction f) { return Fraction::reduce(f.den() - 1, f.den()); }

bool is_farey_pair(Fraction a, Fraction b) { return is_farey_pair(Slope::of(a), Slope::of(b)); }

bool is_farey_pair(Slope a, Slope b) {
  detail::i128 d = detail::i128(a.p) * b.q - detail::i128(a.q) * b.p;
  return d == 1 || d == -1;
}

Fraction mediant(Fraction a, Fraction b) {
  return Fraction::reduce(a.num() + b.num(), a.den() + b.den());
}

std::pair<Fraction, Fraction> parents(Fraction f) {
  if (f.is_integer()) throw std::invalid_argument("integers have no parents: " + f.str());
  const std::int64_t p = f.num(), q = f.den();
  // Left neighbour a/b solves p*b - q*a = 1 with 0 < b < q.
  std::int64_t b = inverse_mod(p, q);
  std::int64_t a = (static_cast<detail::i128>(p) * b - 1) / q;
  return {Fraction::reduce(a, b), Fraction::reduce(p - a, q - b)};
}

Fraction partial_edge_length(Fraction near, Fraction far, Fraction u0) {
  const std::int64_t s = near.den(), q = far.den();
  if (!is_farey_pair(near, far) || q >= s)
    throw std::invalid_argument("partial edge needs a leftward edge: " + near.str() + " -> " + far.str());
  if (u0 < angle_u(far) || u0 > angle_u(near))
    throw std::invalid_argument("u0 outside the edge: " + u0.str());
  return (Fraction(1) + Fraction(s) * (u0 - 1)) / (Fraction(s - q) * (u0 - 1));
}

Edge make_edge(Vertex near, Vertex far) {
  Edge e{near, far, EdgeKind::NonHorizontal, Fraction(1), far.u(), 0};
  if (near.kind == VertexKind::Circle) {
    if (far.kind != VertexKind::Angle || far.value != near.value)
      throw std::invalid_argument("horizontal edge must join o(t) and <t>");
    e.kind = EdgeKind::Horizontal;
    return e;
  }
  if (far.kind == VertexKind::Infinity) {
    if (near.kind != VertexKind::Angle || !near.value.is_integer())
      throw std::invalid_argument("infinity edge must start at an integer");
    e.kind = EdgeKind::Infinity;
    return e;
  }
  if (near.kind != VertexKind::Angle || far.kind != VertexKind::Angle)
    throw std::invalid_argument("unsupported edge " + near.label() + " -> " + far.label());
  if (near.value.is_integer() && far.value.is_integer()) {
    Fraction d = far.value - near.value;
    if (d.abs() != Fraction(1)) throw std::invalid_argument("vertical edge must join adjacent integers");
    e.kind = EdgeKind::Vertical;
    e.sign = d.sign();
    return e;
  }
  if (!is_farey_pair(near.value, far.value) || far.value.den() >= near.value.den())
    throw std::invalid_argument("not a leftward edge: " + near.label() + " -> " + far.label());
  e.sign = far.value > near.value ? 1 : -1;
  return e;
}

Edge make_partial_edge(Fraction near, Fraction far, Fraction u0) {
  Edge e = make_edge(Vertex::angle(near), Vertex::angle(far));
  e.length = partial_edge_length(near, far, u0);
  e.end_u = u0;
  return e;
}

std::optional<int> r_value(const Edge& e) {
  if (e.kind != EdgeKind::NonHorizontal) return std::nullopt;
  return e.sign * static_cast<int>(e.near.value.den() - e.far.value.den());
}

Slope Slope::normalized(std::int64_t p, std::int64_t q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) return {1, 0};
  return {p, q};
}

Slope Slope::of(const Vertex& v) {
  if (v.kind == VertexKind::Infinity) return {1, 0};
  if (v.kind == VertexKind::Circle) throw std::invalid_argument("circle vertex is not a slope");
  return of(v.value);
}

std::array<Slope, 2> triangle_apexes(Slope a, Slope b) {
  return {Slope::normalized(a.p + b.p, a.q + b.q), Slope::normalized(a.p - b.p, a.q - b.q)};
}

bool is_reversible_pair(const Edge& e1, const Edge& e2) {
  auto usable = [](const Edge& e) {
    return e.kind == EdgeKind::NonHorizontal || e.kind == EdgeKind::Infinity;
  };
  if (!usable(e1) || !usable(e2)) throw std::invalid_argument("reversibility needs non-horizontal edges");
  if (e1.far != e2.near) throw std::invalid_argument("edges are not successive");
  Slope v = Slope::of(e1.far), a = Slope::of(e1.near), b = Slope::of(e2.far);
  if (a == b) return false;
  for (Slope x : triangle_apexes(v, a)) {
    if (x == a || x == b) continue;
    if (is_farey_pair(x, b)) return true;
  }
  return false;
}

Triangle triangle_below(Fraction m) {
  auto [lo, hi] = parents(m);
  return Triangle{{lo, hi, m}};
}

}  // namespace mslopes
