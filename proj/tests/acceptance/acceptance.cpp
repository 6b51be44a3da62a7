// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "../support/brute.hpp"
#include "mslopes/report.hpp"
#include "mslopes/theorems.hpp"

using namespace mslopes;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<Fraction> tangles(int max_den) {
  std::vector<Fraction> out;
  for (std::int64_t q = 2; q <= max_den; ++q)
    for (std::int64_t p = -q + 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(Fraction::reduce(p, q));
  return out;
}

// All multisets of n tangles, links included.
std::vector<KnotSpec> inputs(int n, int max_den) {
  std::vector<Fraction> ts = tangles(max_den);
  std::vector<KnotSpec> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (idx.size() == static_cast<std::size_t>(n)) {
      KnotSpec k;
      for (std::size_t i : idx) k.tangles.push_back(ts[i]);
      out.push_back(std::move(k));
      return;
    }
    for (std::size_t i = from; i < ts.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<KnotSpec> knots(int n, int max_den) {
  std::vector<KnotSpec> ks = inputs(n, max_den);
  std::erase_if(ks, [](const KnotSpec& k) { return component_count(k) != 1; });
  return ks;
}

const std::vector<KnotSpec>& oracle_suite() {
  static const std::vector<KnotSpec> s = [] {
    std::vector<KnotSpec> a = inputs(3, 9), b = inputs(4, 5);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }();
  return s;
}

const std::vector<KnotSpec>& sweep_suite() {
  static const std::vector<KnotSpec> s = knots(3, 7);
  return s;
}

std::vector<brute::Path> vertex_lists(std::span<const Edgepath> ps) {
  std::vector<brute::Path> out;
  for (const Edgepath& p : ps) out.push_back(p.angle_vertices());
  return out;
}

// Per tangle: brute integral of each catalog path, keyed by tangle and index.
struct TangleCache {
  std::map<Fraction, std::vector<Fraction>> twist;
  std::map<Fraction, std::vector<int>> between;

  void fill(const KnotCatalog& cat) {
    for (std::size_t i = 0; i < cat.size(); ++i) {
      Fraction t = cat.knot().tangles[i];
      if (twist.count(t)) continue;
      const auto& ps = cat.paths(i);
      brute::Path dec = ps[cat.dec_index(i)].angle_vertices();
      for (const Edgepath& p : ps) {
        twist[t].push_back(brute::integrated_twist({p.angle_vertices()}));
        between[t].push_back(brute::triangles_between(p.angle_vertices(), dec));
      }
    }
  }
};

Outcome criterion1() {
  TangleCache cache;
  std::size_t basic = 0, typeI = 0;
  for (const KnotSpec& k : oracle_suite()) {
    KnotCatalog cat(k);
    cache.fill(cat);
    for (const BasicSystem& b : cat.enumerate_basic_systems()) {
      Fraction edges = twist(b), lib = twist_by_integration(b.paths), ref;
      for (std::size_t i = 0; i < b.paths.size(); ++i) ref += cache.twist[k.tangles[i]][b.choice[i]];
      if (edges != lib || edges != ref)
        return fail(k.str() + ": basic system twist " + edges.str() + " vs " + lib.str() + " vs " + ref.str());
      ++basic;
      for (const EdgepathSystem& s : type_I_systems(b)) {
        Fraction e = twist(s), l = twist_by_integration(b.paths, s.cut_u),
                 r = brute::integrated_twist(vertex_lists(b.paths), *s.cut_u);
        if (e != l || e != r)
          return fail(k.str() + ": type I at u0 = " + s.cut_u->str() + ": " + e.str() + " vs " + l.str() + " vs " +
                      r.str());
        ++typeI;
      }
    }
  }
  return {true, std::to_string(basic) + " basic and " + std::to_string(typeI) + " type I systems over " +
                    std::to_string(oracle_suite().size()) + " inputs agree exactly"};
}

Outcome criterion2() {
  TangleCache cache;
  std::size_t n = 0;
  for (const KnotSpec& k : oracle_suite()) {
    KnotCatalog cat(k);
    cache.fill(cat);
    Fraction tdec = twist(cat.dec());
    for (const BasicSystem& b : cat.enumerate_basic_systems()) {
      int L = 0;
      Fraction V;
      for (std::size_t i = 0; i < b.paths.size(); ++i) {
        int l = cache.between[k.tangles[i]][b.choice[i]];
        if (cat.lv(i, b.choice[i]).L != l) return fail(k.str() + ": L count differs from the centroid count");
        L += l;
        V += b.paths[i].end_v() - cat.paths(i)[cat.dec_index(i)].end_v();
      }
      if (twist(b) != tdec - Fraction(2) * (Fraction(L) + V))
        return fail(k.str() + ": twist " + twist(b).str() + " with L = " + std::to_string(L) + ", V = " + V.str());
      ++n;
    }
  }
  return {true, std::to_string(n) + " basic systems satisfy the identity with L from the centroid count"};
}

Fraction cancel_by_hand(const EdgepathSystem& s) {
  Fraction up, down;
  for (const Edgepath& p : s.paths)
    for (const Edge& e : p.edges) {
      if (e.kind == EdgeKind::Infinity || e.kind == EdgeKind::Horizontal) continue;
      Fraction dv = e.far.value - e.near.value;
      if (dv > 0) up += e.length;
      if (dv < 0) down += e.length;
    }
  return std::min(up, down);
}

Outcome criterion3() {
  std::size_t counts[3] = {0, 0, 0};
  for (const KnotSpec& k : oracle_suite()) {
    KnotCatalog cat(k);
    for (const EdgepathSystem& s : enumerate_candidates(cat)) {
      Fraction rho = remainder(s), closed = remainder_closed_form(s);
      if (rho != closed) return fail(k.str() + ": remainder " + rho.str() + " vs closed form " + closed.str());
      Fraction k4 = Fraction(4) * cancel_by_hand(s);
      if (s.type == SystemType::II && rho != Fraction(4) - k4)
        return fail(k.str() + ": type II remainder " + rho.str() + " != 4 - 4 kappa");
      if (s.type == SystemType::III && rho != -k4)
        return fail(k.str() + ": type III remainder " + rho.str() + " != -4 kappa");
      ++counts[static_cast<int>(s.type)];
    }
  }
  return {true, "type I/II/III: " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
                    std::to_string(counts[2]) + " systems"};
}

Outcome criterion4() {
  std::size_t edges = 0;
  for (std::int64_t q = 2; q <= 32; ++q)
    for (std::int64_t p = -q; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Fraction near = Fraction::reduce(p, q);
      auto [a, b] = parents(near);
      for (Fraction far : {a, b}) {
        Fraction un = angle_u(near), uf = angle_u(far);
        if (partial_edge_length(near, far, un) != Fraction(0) || partial_edge_length(near, far, uf) != Fraction(1))
          return fail("endpoints wrong on <" + near.str() + ">-<" + far.str() + ">");
        Fraction prev(0);
        for (int j = 1; j <= 32; ++j) {
          Fraction u0 = un - (un - uf) * Fraction::reduce(j, 32);
          Fraction lam = partial_edge_length(near, far, u0);
          if (!(lam > prev)) return fail("not strictly increasing on <" + near.str() + ">-<" + far.str() + ">");
          Fraction weight = (Fraction(1) - lam) * near.den() + lam * far.den();
          if (Fraction(1) - Fraction(1) / weight != u0)
            return fail("point off the edge on <" + near.str() + ">-<" + far.str() + ">");
          prev = lam;
        }
        ++edges;
      }
    }
  return {true, std::to_string(edges) + " edges"};
}

Outcome criterion5() {
  auto F = [](std::int64_t p, std::int64_t q = 1) { return Fraction::reduce(p, q); };
  KnotReport a = analyse(KnotSpec::parse("M(-1/2,1/3,1/7)"));
  std::ostringstream os;
  os << "case " << to_string(a.max_case.tag) << ", tau_max " << a.tau_max.lo << ".." << a.tau_max.hi
     << ", tau_min " << a.tau_min.lo << ".." << a.tau_min.hi << ", Diam " << a.diameter.lo << ".." << a.diameter.hi
     << ", cr " << a.crossing_number;
  const Check* t1 = a.check("theorem1");
  bool ok = std::string(to_string(a.max_case.tag)) == "2-2-2-1b-b" && a.tau_max == Interval{F(2), F(2)} &&
            a.tau_min == Interval{F(-18), F(-18)} && a.diameter == Interval{F(20), F(20)} &&
            a.crossing_number == F(12) && t1 && t1->margins == std::vector<Fraction>{F(2), F(4)};
  KnotReport b = analyse(KnotSpec::parse("M(1/2,1/3,1/7)"));
  os << "; M(1/2,1/3,1/7): Diam " << b.diameter.lo << ", cr " << b.crossing_number;
  ok = ok && b.alternating && b.diameter == Interval{F(24), F(24)} && b.crossing_number == F(12);
  return {ok, os.str()};
}

Outcome criterion6() {
  std::map<std::string, int> failures;
  for (const KnotSpec& k : sweep_suite()) {
    KnotReport r = analyse(k, AnalysisOptions{{}, false, {}});
    for (const Check& c : r.checks)
      if (!c.pass) ++failures[c.name + " on " + k.str()];
  }
  if (!failures.empty()) return fail(failures.begin()->first + " (" + std::to_string(failures.size()) + " failures)");
  return {true, std::to_string(sweep_suite().size()) + " knots, six checks each"};
}

Outcome criterion7() {
  Fraction prev;
  bool first = true;
  int n = 0;
  std::string skipped;
  std::ostringstream os;
  for (const KnotSpec& k : expand_family("M(-1/3,1/3,1/n)", "n=3..40")) {
    if (component_count(k) != 1) {
      skipped += " " + k.str();
      continue;
    }
    KnotReport r = analyse(k, AnalysisOptions{{}, false, {}});
    if (!r.diameter.is_point()) return fail(k.str() + ": diameter not determined");
    Fraction gap = r.diameter.lo - Fraction(2) * r.crossing_number;
    if (!(gap > Fraction(-6))) return fail(k.str() + ": Diam - 2cr = " + gap.str());
    if (!first && gap > prev) return fail(k.str() + ": Diam - 2cr rose to " + gap.str());
    if (first) os << "first " << gap;
    prev = gap;
    first = false;
    ++n;
  }
  os << ", last " << prev << " over " << n << " knots";
  if (!skipped.empty()) os << "; links skipped:" << skipped;
  return {n > 0, os.str()};
}

Outcome criterion8() {
  const KnotSpec natural = KnotSpec::parse("M(1/3,1/3,-1/3,-1/3)");
  std::string note = natural.str() + " has " + std::to_string(component_count(natural)) + " components";
  for (const KnotSpec& k : knots(4, 5)) {
    KnotCatalog cat(k);
    if (cat.dec().at_zero() != Fraction(-2) || cat.inc().at_zero() != Fraction(2)) continue;
    KnotReport r = analyse(k, AnalysisOptions{{}, false, {}});
    const Check* t3 = r.check("theorem3");
    if (t3 && t3->pass && t3->margins.at(0) == Fraction(0))
      return {true, note + "; witness " + k.str() + " with Diam " + r.diameter.lo.str() + ", margin 0"};
  }
  return fail(note + "; no N = 4 knot of denominator <= 5 attains equality");
}

// Identifies a system up to the order of vertical edges on a path.
std::string system_key(const EdgepathSystem& s) {
  std::ostringstream os;
  os << to_string(s.type) << '|' << (s.cut_u ? s.cut_u->str() : "-") << '|' << s.flags.augmented
     << s.flags.partial_infinity << s.flags.redundant_vertical;
  for (const Edgepath& p : s.paths) {
    os << "|" << p.tangle;
    if (p.constant_u) os << "c" << *p.constant_u;
    int up = 0, down = 0;
    for (const Edge& e : p.edges) {
      if (e.kind == EdgeKind::Vertical) {
        (e.sign > 0 ? up : down)++;
        continue;
      }
      os << ' ' << e.far.label() << ':' << e.length;
    }
    os << " v" << up << '/' << down;
  }
  return os.str();
}

std::string signature(const Candidate& c, bool flip) {
  const Verdict& v = c.verdict;
  std::optional<Direction> o = v.orientation;
  if (o && flip) o = opposite(*o);
  bool keep_max = flip ? c.filter.keep_min : c.filter.keep_max;
  bool keep_min = flip ? c.filter.keep_max : c.filter.keep_min;
  std::ostringstream os;
  os << to_string(v.status) << ' ' << static_cast<int>(v.clause) << ' ' << v.existence_group << ' '
     << (o ? static_cast<int>(*o) : -1) << ' ' << keep_max << keep_min << ' ' << (flip ? -c.twist : c.twist);
  return os.str();
}

Outcome criterion9() {
  std::size_t mapped = 0;
  for (const KnotSpec& k : sweep_suite()) {
    KnotReport a = analyse(k), b = analyse(k.mirror());
    if (b.tau_max != Interval{-a.tau_min.hi, -a.tau_min.lo} || b.tau_min != Interval{-a.tau_max.hi, -a.tau_max.lo})
      return fail(k.str() + ": extremal twists not mirrored");
    if (b.diameter != a.diameter || b.crossing_number != a.crossing_number)
      return fail(k.str() + ": diameter or crossing number changed under mirroring");
    // Systems that differ only in the order of vertical edges share a key, so
    // compare the multiset of mirrored verdicts under each key.
    std::map<std::string, std::multiset<std::string>> want, got;
    for (const Candidate& c : a.candidates) want[system_key(mirror(c.system))].insert(signature(c, true));
    for (const Candidate& c : b.candidates) got[system_key(c.system)].insert(signature(c, false));
    if (want != got) {
      for (const auto& [key, sigs] : want)
        if (got[key] != sigs) return fail(k.str() + ": mirrored candidates disagree at " + key);
      return fail(k.str() + ": the mirror has extra candidates");
    }
    mapped += a.candidates.size();
  }
  return {true, std::to_string(sweep_suite().size()) + " knots, " + std::to_string(mapped) + " candidates mapped"};
}

Outcome criterion10() {
  std::size_t orientable = 0, by_type[3] = {0, 0, 0};
  for (const KnotSpec& k : sweep_suite()) {
    KnotReport r = analyse(k);
    std::vector<Pairing> forbidden = forbidden_pairings(k);
    for (const Candidate& c : r.candidates) {
      if (!parity_orientable(c.system, forbidden)) continue;
      Fraction slope = boundary_slope(c.twist, r.seifert_offset);
      if (!slope.is_integer() || slope.num() % 2 != 0)
        return fail(k.str() + ": orientable " + to_string(c.system.type) + " system with slope " + slope.str());
      ++orientable;
      ++by_type[static_cast<int>(c.system.type)];
    }
    AnalysisOptions zero;
    zero.keep_candidates = false;
    zero.offset = Fraction(0);
    KnotReport z = analyse(k, zero);
    if (z.diameter != r.diameter || z.tau_max != r.tau_max || z.tau_min != r.tau_min)
      return fail(k.str() + ": diameter depends on the offset");
  }
  return {true, std::to_string(orientable) + " orientable candidates (type I/II/III " + std::to_string(by_type[0]) +
                    "/" + std::to_string(by_type[1]) + "/" + std::to_string(by_type[2]) +
                    ") with even integral slopes; diameters unchanged at offset 0"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"twist equals its integral", criterion1},
      {"L/V identity", criterion2},
      {"remainder closed forms", criterion3},
      {"partial edge endpoints and monotonicity", criterion4},
      {"named knots", criterion5},
      {"check sweep, N = 3, denominators <= 7", criterion6},
      {"M(-1/3,1/3,1/n) family", criterion7},
      {"N = 4 equality case", criterion8},
      {"mirror symmetry", criterion9},
      {"orientable slopes are even", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
