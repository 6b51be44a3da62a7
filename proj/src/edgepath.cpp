#include "mslopes/edgepath.hpp"

#include <stdexcept>

namespace mslopes {

Edgepath Edgepath::through(std::span<const Fraction> vs) {
  if (vs.empty()) throw std::invalid_argument("empty vertex list");
  Edgepath p{vs.front(), {}, std::nullopt};
  for (std::size_t i = 1; i < vs.size(); ++i)
    p.edges.push_back(make_edge(Vertex::angle(vs[i - 1]), Vertex::angle(vs[i])));
  return p;
}

Edgepath Edgepath::constant(Fraction tangle, Fraction u0) { return Edgepath{tangle, {}, u0}; }

Fraction Edgepath::end_u() const {
  if (constant_u) return *constant_u;
  if (edges.empty()) return angle_u(tangle);
  return edges.back().end_u;
}

Fraction Edgepath::end_v() const {
  if (edges.empty()) return tangle;
  return edges.back().end_v();
}

std::vector<Fraction> Edgepath::angle_vertices() const {
  std::vector<Fraction> out{tangle};
  for (const Edge& e : edges)
    if (e.complete() && e.far.kind == VertexKind::Angle) out.push_back(e.far.value);
  return out;
}

const Edge* Edgepath::last_non_horizontal() const {
  for (auto it = edges.rbegin(); it != edges.rend(); ++it)
    if (it->kind == EdgeKind::NonHorizontal) return &*it;
  return nullptr;
}

Edgepath Edgepath::basic_part() const {
  Edgepath b{tangle, {}, constant_u};
  for (const Edge& e : edges)
    if (e.kind == EdgeKind::NonHorizontal) b.edges.push_back(e);
  return b;
}

namespace {

void extend(std::vector<Fraction>& stack, std::vector<Edgepath>& out) {
  Fraction cur = stack.back();
  if (cur.is_integer()) {
    out.push_back(Edgepath::through(stack));
    return;
  }
  auto [lo, hi] = parents(cur);
  for (Fraction next : {lo, hi}) {
    // Skip child -> parent -> other parent; that step cuts across one triangle.
    if (stack.size() >= 2) {
      auto [plo, phi] = parents(stack[stack.size() - 2]);
      if ((plo == cur && phi == next) || (phi == cur && plo == next)) continue;
    }
    stack.push_back(next);
    extend(stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Edgepath> enumerate_basic_edgepaths(Fraction t) {
  if (t.is_integer()) throw std::invalid_argument("tangle must not be an integer: " + t.str());
  std::vector<Edgepath> out;
  std::vector<Fraction> stack{t};
  extend(stack, out);
  return out;
}

Edgepath monotone_basic_edgepath(Fraction t, Direction d) {
  if (t.is_integer()) throw std::invalid_argument("tangle must not be an integer: " + t.str());
  std::vector<Fraction> vs{t};
  while (!vs.back().is_integer()) {
    auto [lo, hi] = parents(vs.back());
    vs.push_back(d == Direction::Decreasing ? lo : hi);
  }
  return Edgepath::through(vs);
}

Fraction evaluate(const Edgepath& basic, Fraction u) {
  if (u < 0 || u > 1) throw std::invalid_argument("u outside [0, 1]");
  if (u >= angle_u(basic.tangle)) return basic.tangle;
  for (const Edge& e : basic.edges) {
    if (e.kind != EdgeKind::NonHorizontal) continue;
    Fraction nu = e.near.u(), fu = e.far.u();
    if (u <= nu && u >= fu)
      return e.near.v() + (e.far.v() - e.near.v()) * (nu - u) / (nu - fu);
  }
  throw std::invalid_argument("u not covered by the path");
}

Fraction path_twist(const Edgepath& p) {
  Fraction t;
  for (const Edge& e : p.edges) t -= Fraction(2 * e.sign) * e.length;
  return t;
}

Fraction path_length(const Edgepath& p) {
  Fraction a;
  for (const Edge& e : p.edges)
    if (e.kind == EdgeKind::NonHorizontal || e.kind == EdgeKind::Vertical) a += e.length;
  return a;
}

bool is_minimal(const Edgepath& p) {
  std::vector<Fraction> vs = p.angle_vertices();
  for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
    if (vs[i].is_integer()) continue;
    auto [lo, hi] = parents(vs[i]);
    if ((vs[i + 1] == lo && vs[i + 2] == hi) || (vs[i + 1] == hi && vs[i + 2] == lo)) return false;
  }
  return true;
}

bool is_completely_reversible(const Edgepath& p) {
  const Edge* prev = nullptr;
  for (const Edge& e : p.edges) {
    if (e.kind == EdgeKind::Horizontal || e.kind == EdgeKind::Vertical) {
      prev = nullptr;
      continue;
    }
    if (prev && !is_reversible_pair(*prev, e)) return false;
    prev = &e;
  }
  return true;
}

bool is_monotone(const Edgepath& p, Direction d) {
  int want = d == Direction::Increasing ? 1 : -1;
  for (const Edge& e : p.edges)
    if (e.kind == EdgeKind::NonHorizontal && e.sign != want) return false;
  return true;
}

}  // namespace mslopes
