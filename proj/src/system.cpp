#include "mslopes/system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mslopes {

// ---- KnotSpec ---------------------------------------------------------------

KnotSpec KnotSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
  std::string_view body = s;
  if (!body.empty() && (body.front() == 'M' || body.front() == 'm')) {
    body.remove_prefix(1);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
      throw std::invalid_argument("expected M(p1/q1,...,pN/qN): '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  } else if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses: '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw std::invalid_argument("no tangles in '" + std::string(text) + "'");
  KnotSpec k;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    k.tangles.push_back(Fraction::parse(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  k.validate();
  return k;
}

void KnotSpec::validate() const {
  if (tangles.size() < 3)
    throw std::invalid_argument("need at least 3 tangles (fewer gives a two-bridge link)");
  for (Fraction t : tangles)
    if (t.is_integer()) throw std::invalid_argument("integral tangle " + t.str());
}

KnotSpec KnotSpec::mirror() const {
  KnotSpec m;
  for (Fraction t : tangles) m.tangles.push_back(-t);
  return m;
}

std::string KnotSpec::str() const {
  std::string s = "M(";
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (i) s += ",";
    s += tangles[i].str();
  }
  return s + ")";
}

// ---- piecewise linear functions ---------------------------------------------

Fraction PiecewiseLinear::operator()(Fraction x) const {
  if (u.empty()) throw std::logic_error("empty function");
  if (x < u.front() || x > u.back()) throw std::invalid_argument("outside domain");
  auto it = std::lower_bound(u.begin(), u.end(), x);
  std::size_t k = static_cast<std::size_t>(it - u.begin());
  if (u[k] == x) return v[k];
  return v[k - 1] + (v[k] - v[k - 1]) * (x - u[k - 1]) / (u[k] - u[k - 1]);
}

RootScan isolated_roots(const PiecewiseLinear& f) {
  RootScan out;
  const std::size_t n = f.u.size();
  std::vector<bool> flat(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    flat[k] = f.v[k] == 0 && f.v[k + 1] == 0;
    if (flat[k]) out.degenerate.emplace_back(f.u[k], f.u[k + 1]);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0 && f.v[k] == 0 && !flat[k] && !flat[k - 1] && f.u[k] > 0 && f.u[k] < 1)
      out.roots.push_back(f.u[k]);
    int a = f.v[k].sign(), b = f.v[k + 1].sign();
    if (a * b < 0) {
      Fraction r = f.u[k] + f.v[k] * (f.u[k + 1] - f.u[k]) / (f.v[k] - f.v[k + 1]);
      if (r > 0 && r < 1) out.roots.push_back(r);
    }
  }
  return out;
}

PiecewiseLinear system_function(std::span<const Edgepath> paths) {
  std::vector<Fraction> us{Fraction(0), Fraction(1)};
  for (const Edgepath& p : paths)
    for (Fraction x : p.angle_vertices()) us.push_back(angle_u(x));
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  PiecewiseLinear f;
  f.u = us;
  f.v.reserve(us.size());
  for (Fraction x : us) {
    Fraction s;
    for (const Edgepath& p : paths) s += evaluate(p, x);
    f.v.push_back(s);
  }
  return f;
}

// ---- tags ------------------------------------------------------------------

const char* to_string(SystemType t) {
  switch (t) {
    case SystemType::I: return "I";
    case SystemType::II: return "II";
    case SystemType::III: return "III";
  }
  return "?";
}

const char* to_string(ClassTag c) {
  switch (c) {
    case ClassTag::A: return "A";
    case ClassTag::B: return "B";
    case ClassTag::C: return "C";
    case ClassTag::Other: return "Other";
  }
  return "?";
}

// ---- L and V ----------------------------------------------------------------

namespace {

struct Pt {
  Fraction u, v;
};

Pt point_of(Fraction x) { return {angle_u(x), x}; }

// Sign of (b - a) x (c - a).
int orient(const Pt& a, const Pt& b, const Pt& c) {
  return ((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u)).sign();
}

int winding_number(const std::vector<Pt>& poly, const Pt& p) {
  int w = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if (a.v <= p.v) {
      if (b.v > p.v && orient(a, b, p) > 0) ++w;
    } else {
      if (b.v <= p.v && orient(a, b, p) < 0) --w;
    }
  }
  return w;
}

}  // namespace

LVCount count_lv(const Edgepath& path, const Edgepath& dec) {
  if (path.tangle != dec.tangle) throw std::invalid_argument("paths of different tangles");
  std::vector<Fraction> a = path.angle_vertices(), b = dec.angle_vertices();
  Fraction z = a.back(), zd = b.back();
  if (!z.is_integer() || !zd.is_integer()) throw std::invalid_argument("count_lv needs basic paths");
  LVCount out;
  out.V = static_cast<int>((z - zd).num());

  std::vector<Pt> poly;
  for (Fraction x : a) poly.push_back(point_of(x));
  for (std::size_t i = b.size(); i-- > 1;) {
    if (i == b.size() - 1 && b[i] == z) continue;
    poly.push_back(point_of(b[i]));
  }

  const std::int64_t D = path.tangle.den();
  const std::int64_t lo = std::min(z, zd).floor();
  const std::int64_t hi = std::max(Fraction(path.tangle.ceil()), std::max(z, zd)).floor();
  for (std::int64_t q = 2; q <= D; ++q) {
    for (std::int64_t p = lo * q + 1; p < hi * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Triangle t = triangle_below(Fraction::reduce(p, q));
      Pt c{Fraction(0), Fraction(0)};
      for (Fraction x : t.corners) {
        Pt pt = point_of(x);
        c.u += pt.u;
        c.v += pt.v;
      }
      c.u /= 3;
      c.v /= 3;
      if (winding_number(poly, c) != 0) ++out.L;
    }
  }
  return out;
}

// ---- systems ----------------------------------------------------------------

Fraction BasicSystem::at_zero() const {
  Fraction s;
  for (const Edgepath& p : paths) s += p.end_v();
  return s;
}

std::vector<Edgepath> EdgepathSystem::basic_paths() const {
  std::vector<Edgepath> out;
  out.reserve(paths.size());
  for (const Edgepath& p : paths) out.push_back(p.basic_part());
  return out;
}

std::vector<RValue> final_r_cycle(std::span<const Edgepath> paths) {
  std::vector<RValue> out;
  out.reserve(paths.size());
  for (const Edgepath& p : paths) {
    RValue r;
    if (const Edge* e = p.last_non_horizontal()) r.r = r_value(*e);
    r.reversible = is_completely_reversible(p.basic_part());
    out.push_back(r);
  }
  return out;
}

std::vector<RValue> final_r_cycle(const EdgepathSystem& s) { return final_r_cycle(s.paths); }

bool condition_star(std::span<const RValue> cycle, Direction d) {
  const int sg = d == Direction::Decreasing ? 1 : -1;
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i].r && *cycle[i].r * sg == -1) ones.push_back(i);
  if (ones.empty()) return false;
  auto tilde = [&](const RValue& x) { return x.r && *x.r * sg == -2 && x.reversible; };
  const std::size_t n = cycle.size();
  for (std::size_t k = 0; k < ones.size(); ++k) {
    std::size_t from = ones[k], to = ones[(k + 1) % ones.size()];
    std::size_t len = (to + n - from - 1) % n;
    int others = 0;
    for (std::size_t j = 1; j <= len; ++j)
      if (!tilde(cycle[(from + j) % n])) ++others;
    if (others > 1) return false;
  }
  return true;
}

// ---- catalog ----------------------------------------------------------------

KnotCatalog::KnotCatalog(KnotSpec knot) : knot_(std::move(knot)) {
  knot_.validate();
  for (Fraction t : knot_.tangles) {
    std::vector<Edgepath> ps = enumerate_basic_edgepaths(t);
    Edgepath d = monotone_basic_edgepath(t, Direction::Decreasing);
    Edgepath i = monotone_basic_edgepath(t, Direction::Increasing);
    std::size_t di = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), d) - ps.begin());
    std::size_t ii = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), i) - ps.begin());
    if (di == ps.size() || ii == ps.size()) throw std::logic_error("monotone path missing from enumeration");
    std::vector<LVCount> lv, lvi;
    Edgepath mi = mirror(ps[ii]);
    for (const Edgepath& p : ps) {
      lv.push_back(count_lv(p, ps[di]));
      lvi.push_back(count_lv(mirror(p), mi));
    }
    paths_.push_back(std::move(ps));
    lv_.push_back(std::move(lv));
    lv_inc_.push_back(std::move(lvi));
    dec_.push_back(di);
    inc_.push_back(ii);
  }
}

ClassTag KnotCatalog::classify(std::span<const std::size_t> choice, Direction base) const {
  const auto& table = base == Direction::Decreasing ? lv_ : lv_inc_;
  int b = 0, c = 0, other = 0;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    LVCount x = table[i][choice[i]];
    if (x == LVCount{0, 0}) continue;
    if (x == LVCount{1, 1}) ++b;
    else if (x == LVCount{2, 0}) ++c;
    else ++other;
  }
  if (other == 0 && b == 0 && c == 0) return ClassTag::A;
  if (other == 0 && b == 1 && c == 0) return ClassTag::B;
  if (other == 0 && b == 0 && c == 1) return ClassTag::C;
  return ClassTag::Other;
}

BasicSystem KnotCatalog::basic(std::vector<std::size_t> choice) const {
  if (choice.size() != size()) throw std::invalid_argument("choice size mismatch");
  BasicSystem b;
  for (std::size_t i = 0; i < choice.size(); ++i) b.paths.push_back(paths_[i].at(choice[i]));
  b.class_tag = classify(choice);
  b.class_tag_inc = classify(choice, Direction::Increasing);
  b.choice = std::move(choice);
  return b;
}

BasicSystem KnotCatalog::dec() const { return basic(dec_); }
BasicSystem KnotCatalog::inc() const { return basic(inc_); }

std::size_t KnotCatalog::basic_system_count() const {
  std::size_t n = 1;
  for (const auto& ps : paths_) n *= ps.size();
  return n;
}

std::vector<BasicSystem> KnotCatalog::enumerate_basic_systems() const {
  std::vector<BasicSystem> out;
  out.reserve(basic_system_count());
  std::vector<std::size_t> idx(size(), 0);
  while (true) {
    out.push_back(basic(idx));
    std::size_t k = size();
    while (k-- > 0) {
      if (++idx[k] < paths_[k].size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

// ---- candidate systems ------------------------------------------------------

Edgepath cut_path(const Edgepath& basic, Fraction u0) {
  if (u0 > angle_u(basic.tangle)) return Edgepath::constant(basic.tangle, u0);
  Edgepath out{basic.tangle, {}, std::nullopt};
  for (const Edge& e : basic.edges) {
    if (e.near.u() <= u0) break;
    Fraction fu = e.far.u();
    if (fu >= u0) {
      out.edges.push_back(e);
      if (fu == u0) break;
    } else {
      out.edges.push_back(make_partial_edge(e.near.value, e.far.value, u0));
      break;
    }
  }
  return out;
}

namespace {

EdgepathSystem skeleton(const BasicSystem& b, SystemType t) {
  EdgepathSystem s;
  s.type = t;
  s.class_tag = b.class_tag;
  s.class_tag_inc = b.class_tag_inc;
  s.basic_choice = b.choice;
  s.basic_at_zero = b.at_zero();
  return s;
}

void add_vertical(Edgepath& p, int count, int dir) {
  for (int k = 0; k < count; ++k) {
    Fraction z = p.edges.empty() ? p.tangle : p.edges.back().far.value;
    p.edges.push_back(make_edge(Vertex::angle(z), Vertex::angle(z + dir)));
  }
}

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, parts, cur, out);
    cur.pop_back();
  }
}

EdgepathSystem with_verticals(const BasicSystem& b, const std::vector<VerticalCount>& vc) {
  EdgepathSystem s = skeleton(b, SystemType::II);
  s.paths = b.paths;
  s.vertical = vc;
  for (std::size_t i = 0; i < vc.size(); ++i) {
    add_vertical(s.paths[i], vc[i].up, +1);
    add_vertical(s.paths[i], vc[i].down, -1);
  }
  s.flags.redundant_vertical = std::any_of(vc.begin(), vc.end(), [](const VerticalCount& c) { return c.up > 0; }) &&
                               std::any_of(vc.begin(), vc.end(), [](const VerticalCount& c) { return c.down > 0; });
  return s;
}

}  // namespace

std::vector<EdgepathSystem> type_I_systems(const BasicSystem& b, RootScan* scan) {
  RootScan rs = isolated_roots(system_function(b.paths));
  std::vector<EdgepathSystem> out;
  for (Fraction u0 : rs.roots) {
    EdgepathSystem s = skeleton(b, SystemType::I);
    s.cut_u = u0;
    for (const Edgepath& p : b.paths) s.paths.push_back(cut_path(p, u0));
    out.push_back(std::move(s));
  }
  if (scan) *scan = std::move(rs);
  return out;
}

std::vector<EdgepathSystem> type_II_systems(const BasicSystem& b, int max_redundant) {
  Fraction z = b.at_zero();
  if (!z.is_integer()) throw std::logic_error("basic system endpoint sum is not an integer");
  const int k = static_cast<int>(z.num());
  const std::size_t n = b.paths.size();
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(k < 0 ? -k : k, n, cur, comps);
  std::vector<EdgepathSystem> out;
  for (const auto& c : comps) {
    std::vector<VerticalCount> vc(n);
    for (std::size_t i = 0; i < n; ++i) (k < 0 ? vc[i].up : vc[i].down) = c[i];
    out.push_back(with_verticals(b, vc));
  }
  for (int m = 1; m <= max_redundant; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<VerticalCount> vc(n);
        for (std::size_t t = 0; t < n; ++t) (k < 0 ? vc[t].up : vc[t].down) = comps.front()[t];
        vc[i].up += m;
        vc[j].down += m;
        out.push_back(with_verticals(b, vc));
      }
  }
  return out;
}

std::vector<EdgepathSystem> type_III_systems(const BasicSystem& b, bool special) {
  std::vector<EdgepathSystem> out;
  EdgepathSystem s = skeleton(b, SystemType::III);
  s.paths = b.paths;
  for (Edgepath& p : s.paths) {
    Fraction z = p.end_v();
    p.edges.push_back(make_edge(Vertex::angle(z), Vertex::infinity()));
  }
  out.push_back(s);
  if (!special) return out;
  if (s.basic_at_zero == 0) {
    EdgepathSystem part = s;
    part.flags.partial_infinity = true;
    for (Edgepath& p : part.paths) {
      p.edges.back().length = Fraction::reduce(1, 2);
      p.edges.back().end_u = Fraction::reduce(-1, 2);
    }
    out.push_back(std::move(part));
  }
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    EdgepathSystem aug = s;
    aug.flags.augmented = true;
    aug.flags.augmented_path = i;
    out.push_back(std::move(aug));
  }
  return out;
}

namespace {

std::vector<std::int64_t> type_I_key(const EdgepathSystem& s) {
  std::vector<std::int64_t> key{s.cut_u->num(), s.cut_u->den()};
  for (const Edgepath& p : s.paths) {
    key.push_back(p.is_constant() ? -1 : static_cast<std::int64_t>(p.edges.size()));
    for (const Edge& e : p.edges) {
      key.push_back(e.far.value.num());
      key.push_back(e.far.value.den());
    }
  }
  return key;
}

}  // namespace

std::vector<EdgepathSystem> enumerate_candidates(const KnotCatalog& cat, const CandidateOptions& opt) {
  std::vector<EdgepathSystem> out;
  std::set<std::vector<std::int64_t>> seen;
  for (const BasicSystem& b : cat.enumerate_basic_systems()) {
    for (EdgepathSystem& s : type_I_systems(b))
      if (seen.insert(type_I_key(s)).second) out.push_back(std::move(s));
    for (EdgepathSystem& s : type_II_systems(b, opt.max_redundant)) out.push_back(std::move(s));
    for (EdgepathSystem& s : type_III_systems(b, opt.special_type_III)) out.push_back(std::move(s));
  }
  return out;
}

// ---- mirror -----------------------------------------------------------------

Edgepath mirror(const Edgepath& p) {
  Edgepath m{-p.tangle, {}, p.constant_u};
  for (Edge e : p.edges) {
    if (e.near.kind != VertexKind::Infinity) e.near.value = -e.near.value;
    if (e.far.kind != VertexKind::Infinity) e.far.value = -e.far.value;
    e.sign = -e.sign;
    m.edges.push_back(e);
  }
  return m;
}

EdgepathSystem mirror(const EdgepathSystem& s) {
  EdgepathSystem m = s;
  for (Edgepath& p : m.paths) p = mirror(p);
  for (VerticalCount& v : m.vertical) std::swap(v.up, v.down);
  m.basic_at_zero = -s.basic_at_zero;
  std::swap(m.class_tag, m.class_tag_inc);
  m.basic_choice.clear();
  return m;
}

}  // namespace mslopes
