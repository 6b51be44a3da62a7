#include "mslopes/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mslopes {

const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::C1: return "1";
    case CaseTag::C2_1: return "2-1";
    case CaseTag::C2_2_1: return "2-2-1";
    case CaseTag::C2_2_2_1a: return "2-2-2-1a";
    case CaseTag::C2_2_2_1ba: return "2-2-2-1b-a";
    case CaseTag::C2_2_2_1bb: return "2-2-2-1b-b";
    case CaseTag::C2_2_2_2: return "2-2-2-2";
    case CaseTag::C2_2_3: return "2-2-3";
    case CaseTag::C2_3_1: return "2-3-1";
    case CaseTag::C2_3_2: return "2-3-2";
    case CaseTag::C3: return "3";
  }
  return "?";
}

std::string Normalization::str() const {
  std::ostringstream os;
  os << "order(";
  for (std::size_t k = 0; k < order.size(); ++k) os << (k ? "," : "") << order[k] + 1;
  os << ") shift(";
  for (std::size_t k = 0; k < shift.size(); ++k) os << (k ? "," : "") << shift[k];
  os << ") -> " << normalized.str();
  return os.str();
}

CaseResult classify_case(const KnotSpec& k) {
  k.validate();
  std::vector<Edgepath> dec;
  Fraction at0;
  for (Fraction t : k.tangles) {
    dec.push_back(monotone_basic_edgepath(t, Direction::Decreasing));
    at0 += dec.back().end_v();
  }
  CaseResult out;
  std::vector<RValue> cyc = final_r_cycle(dec);
  for (const RValue& r : cyc) out.r_cycle.push_back(*r.r);

  if (at0 >= 0) {
    out.tag = CaseTag::C1;
    return out;
  }
  if (at0 <= -2) {
    out.tag = CaseTag::C3;
    return out;
  }
  int n1 = 0, n2 = 0, n3 = 0;
  for (int r : out.r_cycle) {
    if (r == -1) ++n1;
    else if (r == -2) ++n2;
    else if (r <= -3) ++n3;
  }
  if (n1 == 0) {
    out.tag = CaseTag::C2_1;
  } else if (n1 == 1) {
    if (n3 == 0) {
      out.tag = CaseTag::C2_2_1;
    } else if (n3 >= 2) {
      out.tag = CaseTag::C2_2_3;
    } else if (n2 >= 2) {
      out.tag = CaseTag::C2_2_2_2;
    } else {
      // N == 3 with r-values {-1, -2, <=-3}.
      Normalization nm;
      for (int want : {-1, -2, -3})
        for (std::size_t i = 0; i < 3; ++i) {
          int r = out.r_cycle[i];
          if ((want == -3 && r <= -3) || r == want) {
            nm.order.push_back(i);
            break;
          }
        }
      Fraction t2 = k.tangles[nm.order[1]], t3 = k.tangles[nm.order[2]];
      nm.shift = {t2.floor() + t3.floor(), -t2.floor(), -t3.floor()};
      for (std::size_t j = 0; j < 3; ++j) nm.normalized.tangles.push_back(k.tangles[nm.order[j]] + nm.shift[j]);
      Fraction t1 = nm.normalized.tangles[0];
      if (!(t1 >= Fraction::reduce(-1, 2) && t1 < 0))
        throw std::logic_error("normalization failed for " + k.str());
      int r3 = out.r_cycle[nm.order[2]];
      if (t1 >= Fraction::reduce(-1, 3)) out.tag = CaseTag::C2_2_2_1a;
      else if (r3 >= -4) out.tag = CaseTag::C2_2_2_1ba;
      else out.tag = CaseTag::C2_2_2_1bb;
      out.normalization = std::move(nm);
    }
  } else {
    out.tag = condition_star(cyc) ? CaseTag::C2_3_1 : CaseTag::C2_3_2;
  }
  return out;
}

Candidate evaluate_candidate(EdgepathSystem s, Fraction lambda_dec0, Fraction lambda_inc0) {
  Candidate c;
  c.verdict = essentiality(s);
  c.filter = special_system_filter(s, lambda_dec0, lambda_inc0);
  c.twist = twist(s);
  c.chi = chi_per_sheet(s);
  c.rho = remainder(s);
  c.rho_closed = remainder_closed_form(s);
  c.system = std::move(s);
  return c;
}

Candidate case_witness(const KnotCatalog& cat, const CaseResult& c) {
  BasicSystem dec = cat.dec();
  const Fraction l0 = dec.at_zero();
  const Fraction i0 = cat.inc().at_zero();
  EdgepathSystem s;
  switch (c.tag) {
    case CaseTag::C1:
    case CaseTag::C2_1:
    case CaseTag::C2_2_3:
    case CaseTag::C2_3_2: s = type_II_systems(dec, 0).front(); break;
    case CaseTag::C3: s = type_III_systems(dec, false).front(); break;
    case CaseTag::C2_2_1:
    case CaseTag::C2_2_2_2:
    case CaseTag::C2_3_1:
    case CaseTag::C2_2_2_1a:
    case CaseTag::C2_2_2_1ba: {
      std::vector<EdgepathSystem> t1 = type_I_systems(dec);
      if (t1.size() != 1)
        throw std::logic_error("expected one type I system from the decreasing system of " + cat.knot().str());
      s = std::move(t1.front());
      break;
    }
    case CaseTag::C2_2_2_1bb: {
      std::vector<std::size_t> choice = dec.choice;
      std::size_t i1 = 0;
      while (c.r_cycle.at(i1) != -1) ++i1;
      std::vector<Fraction> want = dec.paths[i1].angle_vertices();
      want.back() += 1;
      const auto& ps = cat.paths(i1);
      auto it = std::find_if(ps.begin(), ps.end(), [&](const Edgepath& p) { return p.angle_vertices() == want; });
      if (it == ps.end()) throw std::logic_error("class B path missing for " + cat.knot().str());
      choice[i1] = static_cast<std::size_t>(it - ps.begin());
      s = type_II_systems(cat.basic(choice), 0).front();
      break;
    }
  }
  return evaluate_candidate(std::move(s), l0, i0);
}

SideBounds extremal_bounds(const std::vector<Candidate>& cands, Direction d) {
  const bool max_side = d == Direction::Decreasing;
  auto better = [&](Fraction a, Fraction b) { return max_side ? a > b : a < b; };
  std::optional<Fraction> cert, any;
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Candidate& c = cands[i];
    if (!(max_side ? c.filter.keep_max : c.filter.keep_min)) continue;
    if (c.verdict.status == Status::Compressible) continue;
    if (!any || better(c.twist, *any)) any = c.twist;
    if (!certifies_essential(c.verdict) && !c.verdict.existence_group) continue;
    if (!cert || better(c.twist, *cert)) {
      cert = c.twist;
      idx = i;
    } else if (c.twist == *cert && cands[*idx].rho_closed < 0 && c.rho_closed >= 0) {
      idx = i;
    }
  }
  if (!cert) throw std::logic_error("no certified candidate");
  SideBounds b;
  b.tau = max_side ? Interval{*cert, *any} : Interval{*any, *cert};
  b.certified_index = idx;
  return b;
}

Fraction crossing_number(const KnotCatalog& cat) {
  BasicSystem dec = cat.dec(), inc = cat.inc();
  Fraction cr = (twist(dec) - twist(inc)) / 2;
  Fraction l0 = dec.at_zero(), i0 = inc.at_zero();
  if (l0 > 0) cr += l0;
  if (i0 < 0) cr -= i0;
  return cr;
}

bool KnotReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* KnotReport::check(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

KnotReport analyse(const KnotSpec& k, const AnalysisOptions& opt) {
  k.validate();
  KnotReport r;
  r.knot = k;
  r.components = component_count(k);
  if (r.components != 1)
    throw std::invalid_argument(k.str() + " is a link with " + std::to_string(r.components) + " components");

  KnotCatalog cat(k);
  BasicSystem dec = cat.dec(), inc = cat.inc();
  r.lambda_dec0 = dec.at_zero();
  r.lambda_inc0 = inc.at_zero();
  r.tau_dec = twist(dec);
  r.tau_inc = twist(inc);
  r.seifert_offset = opt.offset ? *opt.offset : seifert_offset(k);
  r.basic_systems = cat.basic_system_count();

  for (EdgepathSystem& s : enumerate_candidates(cat, opt.candidates))
    r.candidates.push_back(evaluate_candidate(std::move(s), r.lambda_dec0, r.lambda_inc0));

  SideBounds hi = extremal_bounds(r.candidates, Direction::Decreasing);
  SideBounds lo = extremal_bounds(r.candidates, Direction::Increasing);
  r.tau_max = hi.tau;
  r.tau_min = lo.tau;
  r.diameter = {r.tau_max.lo - r.tau_min.hi, r.tau_max.hi - r.tau_min.lo};
  r.extremal_max = r.candidates[*hi.certified_index];
  r.extremal_min = r.candidates[*lo.certified_index];

  r.alternating = r.lambda_dec0 >= 0 || r.lambda_inc0 <= 0;
  r.crossing_number = crossing_number(cat);

  r.max_case = classify_case(k);
  r.min_case = classify_case(k.mirror());
  r.case_witness_max = case_witness(cat, r.max_case);
  Candidate mw = case_witness(KnotCatalog(k.mirror()), r.min_case);
  r.case_witness_min = evaluate_candidate(mirror(mw.system), r.lambda_dec0, r.lambda_inc0);

  r.checks = {verify_theorem1(r), verify_cor12(r),    verify_prop31(r),
              verify_prop42(r),   verify_theorem3(r), verify_cor14(r)};
  if (!opt.keep_candidates) {
    r.candidates.clear();
    r.candidates.shrink_to_fit();
  }
  return r;
}

// ---- checks -------------------------------------------------------------------

namespace {

std::string ineq(const std::string& lhs, Fraction a, const std::string& op, Fraction b) {
  return lhs + ": " + a.str() + " " + op + " " + b.str();
}

bool certified(const Candidate& c) { return certifies_essential(c.verdict) || c.verdict.existence_group; }

}  // namespace

Check verify_theorem1(const KnotReport& r) {
  Check c{"theorem1", false, {}, {}};
  Fraction two_cr = r.crossing_number * 2;
  Fraction lower = r.diameter.lo - (two_cr - 6);
  Fraction upper = two_cr - r.diameter.hi;
  c.margins = {lower, upper};
  c.pass = lower >= 0;
  c.detail = ineq("Diam >= 2cr - 6", r.diameter.lo, ">=", two_cr - 6);
  return c;
}

Check verify_cor12(const KnotReport& r) {
  Check c{"cor12", false, {}, {}};
  Fraction two_cr = r.crossing_number * 2;
  Fraction lower = r.diameter.lo - (two_cr - 6);
  Fraction upper = two_cr - r.diameter.hi;
  c.margins = {lower, upper};
  c.pass = lower >= 0 && upper >= 0;
  c.detail = ineq("2cr - 6 <= Diam", two_cr - 6, "<=", r.diameter.lo) + "; " +
             ineq("Diam <= 2cr", r.diameter.hi, "<=", two_cr);
  if (r.alternating) {
    bool eq = r.diameter.is_point() && r.diameter.lo == two_cr;
    c.pass = c.pass && eq;
    c.detail += eq ? "; alternating equality holds" : "; alternating equality fails";
  }
  return c;
}

namespace {

// Case-formula window on one side, expressed for the max side of `knot_side`.
bool prop31_side(Fraction l0, Fraction tau_dec, const Interval& tmax, const CaseResult& cr, const Candidate& w,
                 bool keep, std::vector<Fraction>& margins, std::string& detail) {
  bool ok = true;
  if (l0 >= 0) {
    Fraction want = tau_dec + l0 * 2;
    ok = tmax.is_point() && tmax.lo == want;
    margins.push_back(tmax.lo - want);
    detail += ineq("tau = tau_dec + 2 Lambda_dec(0)", tmax.lo, "==", want);
  } else if (l0 == -1) {
    ok = tmax.lo >= tau_dec - 6 && tmax.hi <= tau_dec;
    margins.push_back(tmax.lo - (tau_dec - 6));
    detail += ineq("tau >= tau_dec - 6", tmax.lo, ">=", tau_dec - 6);
  } else {
    ok = tmax.is_point() && tmax.lo == tau_dec;
    margins.push_back(tmax.lo - tau_dec);
    detail += ineq("tau = tau_dec", tmax.lo, "==", tau_dec);
  }

  // The case construction must be certified and land in its window.
  Fraction lo_w = tau_dec, hi_w = tau_dec;  // closed window [lo_w, hi_w] unless open_hi
  bool open_hi = false;
  switch (cr.tag) {
    case CaseTag::C1: lo_w = hi_w = tau_dec + l0 * 2; break;
    case CaseTag::C3: break;
    case CaseTag::C2_1:
    case CaseTag::C2_2_3:
    case CaseTag::C2_3_2: lo_w = hi_w = tau_dec - 2; break;
    case CaseTag::C2_2_1:
    case CaseTag::C2_2_2_2:
    case CaseTag::C2_3_1:
      lo_w = tau_dec - 4;
      hi_w = tau_dec - 2;
      open_hi = true;
      ok = ok && w.system.cut_u && *w.system.cut_u <= Fraction::reduce(1, 2);
      break;
    case CaseTag::C2_2_2_1a:
    case CaseTag::C2_2_2_1ba:
      lo_w = tau_dec - 6;
      hi_w = tau_dec - 4;
      open_hi = true;
      ok = ok && w.system.cut_u && *w.system.cut_u > Fraction::reduce(1, 2) &&
           *w.system.cut_u <= Fraction::reduce(2, 3);
      break;
    case CaseTag::C2_2_2_1bb:
      lo_w = hi_w = tau_dec - 4;
      ok = ok && w.system.class_tag == ClassTag::B;
      break;
  }
  bool in = w.twist >= lo_w && (open_hi ? w.twist < hi_w : w.twist <= hi_w);
  ok = ok && in && certified(w) && keep && w.twist <= tmax.lo;
  detail += "; case " + std::string(to_string(cr.tag)) + " witness twist " + w.twist.str() +
            (in ? " in window" : " outside window") + (certified(w) ? ", certified" : ", not certified");
  return ok;
}

}  // namespace

Check verify_prop31(const KnotReport& r) {
  Check c{"prop31", true, {}, {}};
  std::string dmax, dmin;
  bool a = prop31_side(r.lambda_dec0, r.tau_dec, r.tau_max, r.max_case, r.case_witness_max,
                       r.case_witness_max.filter.keep_max, c.margins, dmax);
  // Mirror: tau_min(K) = -tau_max(mirror K).
  Interval mirrored{-r.tau_min.hi, -r.tau_min.lo};
  Candidate mw = r.case_witness_min;
  mw.twist = -mw.twist;
  mw.system.class_tag = r.case_witness_min.system.class_tag_inc;
  bool b = prop31_side(-r.lambda_inc0, -r.tau_inc, mirrored, r.min_case, mw, r.case_witness_min.filter.keep_min,
                       c.margins, dmin);
  // No type I system beats tau_dec + 2 Lambda_dec(0), and mirrored.
  bool twist_bound = true;
  for (const Candidate& k : r.candidates) {
    if (k.system.type != SystemType::I) continue;
    if (k.twist > r.tau_dec + r.lambda_dec0 * 2 || k.twist < r.tau_inc + r.lambda_inc0 * 2) twist_bound = false;
  }
  c.pass = a && b && twist_bound;
  c.detail = "max: " + dmax + " | min: " + dmin + (twist_bound ? "" : " | type I twist bound violated");
  return c;
}

Check verify_prop42(const KnotReport& r) {
  Check c{"prop42", true, {}, {}};
  bool ok = true;
  std::string detail;
  for (Direction d : {Direction::Decreasing, Direction::Increasing}) {
    const bool max_side = d == Direction::Decreasing;
    const Candidate& w = max_side ? r.extremal_max : r.extremal_min;
    const Fraction bound = max_side ? r.tau_max.lo : r.tau_min.hi;
    Fraction worst = w.rho_closed;
    bool side_ok = certified(w) && w.twist == bound && w.rho_closed >= 0 && w.rho == w.rho_closed;
    std::size_t undecided = 0;
    for (const Candidate& k : r.candidates) {
      if (!(max_side ? k.filter.keep_max : k.filter.keep_min)) continue;
      if (k.verdict.status == Status::Compressible) continue;
      if (max_side ? k.twist <= bound : k.twist >= bound) continue;
      ++undecided;
      worst = std::min(worst, k.rho_closed);
      if (k.rho_closed < 0 || k.rho != k.rho_closed) side_ok = false;
    }
    c.margins.push_back(worst);
    detail += std::string(max_side ? "max" : "min") + ": witness rho " + w.rho_closed.str() + ", " +
              std::to_string(undecided) + " undecided beyond, min rho " + worst.str() + "; ";
    ok = ok && side_ok;
  }
  c.pass = ok;
  c.detail = detail;
  return c;
}

Check verify_theorem3(const KnotReport& r) {
  Check c{"theorem3", false, {}, {}};
  const Candidate& a = r.extremal_max;
  const Candidate& b = r.extremal_min;
  Fraction lhs = a.twist - b.twist;  // = R1 - R2
  Fraction rhs = (a.chi + b.chi) * 2 + a.rho_closed + b.rho_closed;
  bool signs = a.twist >= 0 && b.twist <= 0;
  c.margins = {a.rho_closed + b.rho_closed};
  c.pass = signs && lhs == rhs && a.rho_closed >= 0 && b.rho_closed >= 0;
  c.detail = ineq("R1 - R2 = 2(c1 + c2) + rho1 + rho2", lhs, "==", rhs) + ", rho1 = " + a.rho_closed.str() +
             ", rho2 = " + b.rho_closed.str() + (signs ? "" : ", twist signs wrong");
  return c;
}

Check verify_cor14(const KnotReport& r) {
  Check c{"cor14", false, {}, {}};
  const Candidate& a = r.extremal_max;
  const Candidate& b = r.extremal_min;
  Fraction r1 = boundary_slope(a.twist, r.seifert_offset);
  Fraction r2 = boundary_slope(b.twist, r.seifert_offset);
  Fraction delta = distance(r1, r2);
  Fraction rhs = (a.chi * r1.den() + b.chi * r2.den()) * 2;
  c.margins = {delta - rhs};
  c.pass = delta >= rhs;
  c.detail = ineq("Delta(R1, R2) >= 2(-chi/#b(F1) + -chi/#b(F2))", delta, ">=", rhs);
  return c;
}

}  // namespace mslopes
