#include "mslopes/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mslopes {

Fraction twist(const EdgepathSystem& s) {
  Fraction t;
  for (const Edgepath& p : s.paths) t += path_twist(p);
  return t;
}

Fraction twist(const BasicSystem& b) {
  Fraction t;
  for (const Edgepath& p : b.paths) t += path_twist(p);
  return t;
}

Fraction twist_by_integration(std::span<const Edgepath> basic_paths, std::optional<Fraction> cut) {
  PiecewiseLinear f = system_function(basic_paths);
  const Fraction lo = cut.value_or(Fraction(0));
  std::vector<Fraction> us{lo};
  for (Fraction x : f.u)
    if (x > lo) us.push_back(x);
  Fraction t;
  Fraction prev_v = f(lo);
  for (std::size_t k = 0; k + 1 < us.size(); ++k) {
    Fraction a = us[k], b = us[k + 1];
    Fraction vb = f(b);
    Fraction m = (vb - prev_v) / (b - a);
    prev_v = vb;
    if (m == 0) continue;
    // Integral of -2 m d(1/(u-1)) over [a, b].
    t -= Fraction(2) * m * (Fraction(1) / (b - 1) - Fraction(1) / (a - 1));
  }
  return t;
}

SignedLengths signed_lengths(const EdgepathSystem& s) {
  SignedLengths l;
  for (const Edgepath& p : s.paths)
    for (const Edge& e : p.edges) {
      if (e.sign > 0) l.increasing += e.length;
      if (e.sign < 0) l.decreasing += e.length;
    }
  return l;
}

Fraction cancel(const EdgepathSystem& s) {
  SignedLengths l = signed_lengths(s);
  return std::min(l.increasing, l.decreasing);
}

Fraction total_length(const EdgepathSystem& s) {
  Fraction a;
  for (const Edgepath& p : s.paths) a += path_length(p);
  return a;
}

namespace {

struct ConstantPart {
  std::int64_t count = 0;
  Fraction inverse_dens;  // sum of 1/q over constant paths
};

ConstantPart constant_part(const EdgepathSystem& s) {
  ConstantPart c;
  for (const Edgepath& p : s.paths)
    if (p.is_constant()) {
      ++c.count;
      c.inverse_dens += Fraction::reduce(1, p.tangle.den());
    }
  return c;
}

}  // namespace

Fraction chi_per_sheet(const EdgepathSystem& s) {
  const Fraction A = total_length(s);
  const auto N = static_cast<std::int64_t>(s.paths.size());
  switch (s.type) {
    case SystemType::I: {
      ConstantPart c = constant_part(s);
      Fraction u = *s.cut_u;
      return A + Fraction(c.count - N) + (Fraction(N - 2) - c.inverse_dens) / (Fraction(1) - u);
    }
    case SystemType::II: return A - 2;
    case SystemType::III: return A;
  }
  return A;
}

Fraction remainder(const EdgepathSystem& s) { return twist(s).abs() - Fraction(2) * chi_per_sheet(s); }

Fraction remainder_closed_form(const EdgepathSystem& s) {
  const Fraction k4 = Fraction(4) * cancel(s);
  const auto N = static_cast<std::int64_t>(s.paths.size());
  switch (s.type) {
    case SystemType::I: {
      ConstantPart c = constant_part(s);
      Fraction u = *s.cut_u;
      return -k4 + Fraction(2 * (N - c.count)) - (Fraction(N - 2) - c.inverse_dens) * 2 / (Fraction(1) - u);
    }
    case SystemType::II: return Fraction(4) - k4;
    case SystemType::III: return -k4;
  }
  return -k4;
}

std::int64_t distance(Fraction a, Fraction b) {
  detail::i128 d = detail::i128(a.num()) * b.den() - detail::i128(a.den()) * b.num();
  if (d < 0) d = -d;
  if (d > INT64_MAX) throw std::overflow_error("distance overflow");
  return static_cast<std::int64_t>(d);
}

// ---- knot diagram --------------------------------------------------------

Pairing pairing_of(std::int64_t p, std::int64_t q) {
  const bool po = (p % 2) != 0, qo = (q % 2) != 0;
  if (po && !qo) return Pairing::Vertical;
  if (!po && qo) return Pairing::Horizontal;
  return Pairing::Diagonal;
}

Pairing pairing_of(Fraction f) { return pairing_of(f.num(), f.den()); }

namespace {

enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

int internal_partner(Pairing p, int c) {
  switch (p) {
    case Pairing::Vertical: return c ^ 2;    // NW<->SW, NE<->SE
    case Pairing::Horizontal: return c ^ 1;  // NW<->NE, SW<->SE
    case Pairing::Diagonal: return 3 - c;    // NW<->SE, NE<->SW
  }
  return c;
}

// Point id = 4 * tangle + corner.
int external_partner(int id, int n) {
  int i = id / 4, c = id % 4;
  switch (c) {
    case NE: return 4 * ((i + 1) % n) + NW;
    case SE: return 4 * ((i + 1) % n) + SW;
    case NW: return 4 * ((i + n - 1) % n) + NE;
    default: return 4 * ((i + n - 1) % n) + SE;
  }
}

Pairing pairing_joining(int a, int b) {
  if ((a ^ 2) == b) return Pairing::Vertical;
  if ((a ^ 1) == b) return Pairing::Horizontal;
  return Pairing::Diagonal;
}

}  // namespace

int component_count(const KnotSpec& k) {
  const int n = static_cast<int>(k.size());
  std::vector<Pairing> pair;
  for (Fraction t : k.tangles) pair.push_back(pairing_of(t));
  std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
  int comps = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++comps;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      int in = 4 * (cur / 4) + internal_partner(pair[static_cast<std::size_t>(cur / 4)], cur % 4);
      seen[static_cast<std::size_t>(in)] = true;
      cur = external_partner(in, n);
    }
  }
  return comps;
}

std::vector<Pairing> forbidden_pairings(const KnotSpec& k) {
  if (component_count(k) != 1) throw std::invalid_argument("not a knot: " + k.str());
  const int n = static_cast<int>(k.size());
  std::vector<std::vector<int>> entries(static_cast<std::size_t>(n));
  int cur = 4 * 0 + NW;
  for (int step = 0; step < 2 * n; ++step) {
    int i = cur / 4;
    entries[static_cast<std::size_t>(i)].push_back(cur % 4);
    int out = 4 * i + internal_partner(pairing_of(k.tangles[static_cast<std::size_t>(i)]), cur % 4);
    cur = external_partner(out, n);
  }
  std::vector<Pairing> f;
  for (const auto& e : entries) {
    if (e.size() != 2) throw std::logic_error("strand does not pass each tangle twice");
    f.push_back(pairing_joining(e[0], e[1]));
  }
  return f;
}

EdgepathSystem seifert_system(const KnotSpec& k) {
  std::vector<Pairing> forbidden = forbidden_pairings(k);
  const std::size_t n = k.size();
  EdgepathSystem s;
  s.type = SystemType::II;
  s.vertical.assign(n, {});
  Fraction sum;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Fraction> vs{k.tangles[i]};
    while (!vs.back().is_integer()) {
      auto [lo, hi] = parents(vs.back());
      vs.push_back(pairing_of(lo) != forbidden[i] ? lo : hi);
    }
    s.paths.push_back(Edgepath::through(vs));
    sum += vs.back();
  }
  s.basic_at_zero = sum;
  if (sum == 0) return s;
  for (std::size_t i = 0; i < n; ++i) {
    if (forbidden[i] != Pairing::Vertical) continue;
    const int dir = sum < 0 ? 1 : -1;
    const auto count = static_cast<int>(sum.abs().num());
    Fraction z = s.paths[i].end_v();
    for (int c = 0; c < count; ++c, z += dir)
      s.paths[i].edges.push_back(make_edge(Vertex::angle(z), Vertex::angle(z + dir)));
    (dir > 0 ? s.vertical[i].up : s.vertical[i].down) = count;
    return s;
  }
  s.type = SystemType::III;
  s.vertical.clear();
  for (Edgepath& p : s.paths) p.edges.push_back(make_edge(Vertex::angle(p.end_v()), Vertex::infinity()));
  return s;
}

Fraction seifert_offset(const KnotSpec& k) { return twist(seifert_system(k)); }

bool parity_orientable(const EdgepathSystem& s, const std::vector<Pairing>& forbidden) {
  // Partial edges and constant paths mix sheets from both ends of an edge, so
  // vertex parity says nothing there.
  if (s.type == SystemType::I) return false;
  auto bad = [](const Vertex& v, Pairing f) {
    if (v.kind == VertexKind::Infinity) return f == Pairing::Vertical;
    return pairing_of(v.value) == f;
  };
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const Edgepath& p = s.paths[i];
    if (pairing_of(p.tangle) == forbidden[i]) return false;
    for (const Edge& e : p.edges)
      if (bad(e.near, forbidden[i]) || bad(e.far, forbidden[i])) return false;
  }
  return true;
}

Fraction boundary_slope(Fraction twist, Fraction offset) { return twist - offset; }

}  // namespace mslopes
