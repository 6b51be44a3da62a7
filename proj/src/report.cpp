#include "mslopes/report.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mslopes {

Json to_json(Fraction f) { return f.str(); }

Json to_json(const Interval& i) { return Json{{"lo", i.lo.str()}, {"hi", i.hi.str()}}; }

namespace {

Json path_json(const Edgepath& p) {
  Json j;
  j["tangle"] = p.tangle.str();
  if (p.constant_u) {
    j["constant_u"] = p.constant_u->str();
    return j;
  }
  Json vs = Json::array();
  vs.push_back(p.tangle.str());
  Json extra = nullptr;
  for (const Edge& e : p.edges) {
    switch (e.kind) {
      case EdgeKind::Infinity:
        if (e.complete()) vs.push_back("1/0");
        else extra = Json{{"toward", "1/0"}, {"length", e.length.str()}};
        break;
      case EdgeKind::Vertical: vs.push_back(e.far.value.str()); break;
      case EdgeKind::Horizontal: break;
      case EdgeKind::NonHorizontal:
        if (e.complete()) vs.push_back(e.far.value.str());
        else extra = Json{{"toward", e.far.value.str()}, {"length", e.length.str()}};
        break;
    }
  }
  j["vertices"] = vs;
  if (!extra.is_null()) j["partial"] = extra;
  return j;
}

}  // namespace

Json to_json(const Candidate& c, Fraction offset) {
  const EdgepathSystem& s = c.system;
  Json j;
  j["type"] = to_string(s.type);
  j["class"] = to_string(s.class_tag);
  j["u0"] = s.cut_u ? Json(s.cut_u->str()) : Json(nullptr);
  Json rc = Json::array();
  for (const RValue& r : final_r_cycle(s)) {
    if (!r.r) rc.push_back(nullptr);
    else rc.push_back(*r.r);
  }
  j["r_cycle"] = rc;
  if (s.type == SystemType::II) {
    Json v = Json::array();
    for (const VerticalCount& x : s.vertical) v.push_back(x.up - x.down);
    j["vertical_edges"] = v;
  }
  j["twist"] = c.twist.str();
  j["slope"] = boundary_slope(c.twist, offset).str();
  j["chi_per_sheet"] = c.chi.str();
  j["remainder"] = c.rho.str();
  j["essentiality"] = Json{{"status", to_string(c.verdict.status)},
                           {"rule", c.verdict.rule()},
                           {"existence_group", c.verdict.existence_group}};
  Json flags = Json::array();
  if (s.flags.augmented) flags.push_back("augmented");
  if (s.flags.partial_infinity) flags.push_back("partial_infinity");
  if (s.flags.redundant_vertical) flags.push_back("redundant_vertical");
  j["flags"] = flags;
  if (!c.filter.keep_max || !c.filter.keep_min)
    j["dropped"] = Json{{"max", c.filter.keep_max ? Json(nullptr) : Json(c.filter.reason_max)},
                        {"min", c.filter.keep_min ? Json(nullptr) : Json(c.filter.reason_min)}};
  Json ps = Json::array();
  for (const Edgepath& p : s.paths) ps.push_back(path_json(p));
  j["paths"] = ps;
  return j;
}

Json to_json(const KnotReport& r, bool with_candidates) {
  Json j;
  j["knot"] = r.knot.str();
  Json ts = Json::array();
  for (Fraction t : r.knot.tangles) ts.push_back(t.str());
  j["tangles"] = ts;
  j["components"] = r.components;
  j["case_tag"] = to_string(r.max_case.tag);
  j["normalization"] = r.max_case.normalization ? Json(r.max_case.normalization->str()) : Json(nullptr);
  j["mirror_case_tag"] = to_string(r.min_case.tag);
  j["r_cycle_dec"] = r.max_case.r_cycle;
  j["lambda_dec0"] = r.lambda_dec0.str();
  j["lambda_inc0"] = r.lambda_inc0.str();
  j["tau_dec"] = r.tau_dec.str();
  j["tau_inc"] = r.tau_inc.str();
  j["seifert_offset"] = r.seifert_offset.str();
  j["tau_max"] = to_json(r.tau_max);
  j["tau_min"] = to_json(r.tau_min);
  j["diameter_bounds"] = to_json(r.diameter);
  j["diameter"] = r.diameter.is_point() ? Json(r.diameter.lo.str()) : Json(nullptr);
  j["alternating"] = r.alternating;
  j["crossing_number"] = r.crossing_number.str();
  j["slope_max"] = boundary_slope(r.tau_max.lo, r.seifert_offset).str();
  j["slope_min"] = boundary_slope(r.tau_min.hi, r.seifert_offset).str();
  j["witnesses"] = Json{{"max", to_json(r.extremal_max, r.seifert_offset)},
                        {"min", to_json(r.extremal_min, r.seifert_offset)},
                        {"case_max", to_json(r.case_witness_max, r.seifert_offset)},
                        {"case_min", to_json(r.case_witness_min, r.seifert_offset)}};
  j["counts"] = Json{{"basic_systems", r.basic_systems}, {"candidates", r.candidates.size()}};
  Json checks, verdicts;
  for (const Check& c : r.checks) {
    checks[c.name] = c.pass ? "pass" : "fail";
    Json m = Json::array();
    for (Fraction f : c.margins) m.push_back(f.str());
    verdicts[c.name] = Json{{"status", c.pass ? "pass" : "fail"}, {"margins", m}, {"detail", c.detail}};
  }
  j["checks"] = checks;
  j["verdicts"] = verdicts;
  // Flat copies of the headline verdicts for quick lookup.
  for (const Check& c : r.checks) j[c.name] = c.pass ? "pass" : "fail";
  j["all_pass"] = r.all_pass();
  if (with_candidates) {
    Json cs = Json::array();
    for (const Candidate& c : r.candidates) cs.push_back(to_json(c, r.seifert_offset));
    j["candidates"] = cs;
  }
  return j;
}

std::string csv_header() {
  return "knot,case,lambda_dec0,lambda_inc0,tau_dec,tau_inc,tau_max_lo,tau_max_hi,tau_min_lo,tau_min_hi,"
         "diam_lo,diam_hi,crossing_number,theorem1,cor12,prop31,prop42,theorem3,cor14,theorem1_margin_lo,"
         "theorem1_margin_hi,theorem3_margin";
}

std::string csv_row(const KnotReport& r) {
  std::ostringstream os;
  os << '"' << r.knot.str() << '"' << ',' << to_string(r.max_case.tag) << ',' << r.lambda_dec0 << ','
     << r.lambda_inc0 << ',' << r.tau_dec << ',' << r.tau_inc << ',' << r.tau_max.lo << ',' << r.tau_max.hi << ','
     << r.tau_min.lo << ',' << r.tau_min.hi << ',' << r.diameter.lo << ',' << r.diameter.hi << ','
     << r.crossing_number;
  for (const char* name : {"theorem1", "cor12", "prop31", "prop42", "theorem3", "cor14"}) {
    const Check* c = r.check(name);
    os << ',' << (c && c->pass ? "pass" : "fail");
  }
  const Check* t1 = r.check("theorem1");
  const Check* t3 = r.check("theorem3");
  os << ',' << (t1 ? t1->margins.at(0).str() : "") << ',' << (t1 ? t1->margins.at(1).str() : "") << ','
     << (t3 ? t3->margins.at(0).str() : "");
  return os.str();
}

std::vector<Fraction> tangle_suite(int max_den) {
  std::vector<Fraction> out;
  for (std::int64_t q = 2; q <= max_den; ++q)
    for (std::int64_t p = -q + 1; p < q; ++p)
      if (p != 0 && std::gcd(p, q) == 1) out.push_back(Fraction::reduce(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KnotSpec> knot_suite(int n, int max_den, bool knots_only) {
  std::vector<Fraction> ts = tangle_suite(max_den);
  std::vector<KnotSpec> out;
  if (ts.empty() || n < 3) return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    KnotSpec k;
    for (std::size_t i : idx) k.tangles.push_back(ts[i]);
    if (!knots_only || component_count(k) == 1) out.push_back(std::move(k));
    std::size_t j = idx.size();
    while (j-- > 0) {
      if (idx[j] + 1 < ts.size()) {
        ++idx[j];
        for (std::size_t m = j + 1; m < idx.size(); ++m) idx[m] = idx[j];
        break;
      }
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<KnotSpec> expand_family(const std::string& templ, const std::string& range) {
  auto eq = range.find('=');
  auto dots = range.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq)
    throw std::invalid_argument("range must look like n=3..40: '" + range + "'");
  std::string var = range.substr(0, eq);
  if (var.empty() || !std::all_of(var.begin(), var.end(), [](unsigned char c) { return std::isalpha(c); }))
    throw std::invalid_argument("bad range variable in '" + range + "'");
  std::int64_t from = 0, to = 0;
  try {
    from = std::stoll(range.substr(eq + 1, dots - eq - 1));
    to = std::stoll(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range bounds in '" + range + "'");
  }
  if (templ.find(var) == std::string::npos) throw std::invalid_argument("variable " + var + " not in family");
  std::vector<KnotSpec> out;
  for (std::int64_t n = from; n <= to; ++n) {
    std::string s;
    for (std::size_t i = 0; i < templ.size();) {
      bool boundary_l = i == 0 || !std::isalnum(static_cast<unsigned char>(templ[i - 1]));
      bool boundary_r = i + var.size() >= templ.size() ||
                        !std::isalnum(static_cast<unsigned char>(templ[i + var.size()]));
      if (templ.compare(i, var.size(), var) == 0 && boundary_l && boundary_r) {
        s += std::to_string(n);
        i += var.size();
      } else {
        s += templ[i++];
      }
    }
    out.push_back(KnotSpec::parse(s));
  }
  return out;
}

std::string dump_diagram_csv(const KnotSpec& k) {
  KnotCatalog cat(k);
  std::ostringstream os;
  os << "kind,a,b,c,d\n";
  std::set<Fraction> verts;
  std::set<std::pair<Fraction, Fraction>> edges;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (const Edgepath& p : cat.paths(i)) {
      std::vector<Fraction> vs = p.angle_vertices();
      verts.insert(vs.begin(), vs.end());
      for (std::size_t j = 0; j + 1 < vs.size(); ++j) edges.emplace(vs[j], vs[j + 1]);
    }
  for (Fraction v : verts) os << "vertex,<" << v << ">," << angle_u(v) << ',' << v << ",\n";
  for (const auto& [a, b] : edges) os << "edge,<" << a << ">,<" << b << ">,non-horizontal,\n";
  for (Fraction v : verts) {
    if (v.is_integer()) continue;
    Triangle t = triangle_below(v);
    os << "triangle," << t.corners[0] << ',' << t.corners[1] << ',' << t.corners[2] << ",\n";
  }
  for (const char* name : {"dec", "inc"}) {
    BasicSystem b = std::string(name) == "dec" ? cat.dec() : cat.inc();
    PiecewiseLinear f = system_function(b.paths);
    for (std::size_t j = 0; j < f.u.size(); ++j) os << "breakpoint," << name << ',' << f.u[j] << ',' << f.v[j] << ",\n";
  }
  return os.str();
}

}  // namespace mslopes
