#include "mslopes/essentiality.hpp"

#include <algorithm>
#include <cstdlib>

namespace mslopes {

namespace {

const char* side(const std::optional<Direction>& d) {
  if (!d) return "";
  return *d == Direction::Decreasing ? "decreasing" : "increasing";
}

// All non-horizontal and vertical edges share one sign.
bool monotone(const EdgepathSystem& s, Direction d) {
  const int want = d == Direction::Increasing ? 1 : -1;
  for (const Edgepath& p : s.paths)
    for (const Edge& e : p.edges)
      if ((e.kind == EdgeKind::NonHorizontal || e.kind == EdgeKind::Vertical) && e.sign != want) return false;
  return true;
}

// Last edge of the long path lies in a triangle that also has an edge with
// |r| = 1 ending where it ends.
bool rcycle_exception(const Edgepath& p) {
  const Edge* e = p.last_non_horizontal();
  if (!e || !e->complete()) return false;
  return e->near.value.den() == 2 * e->far.value.den() + 1;
}

std::optional<Verdict> rcycle_clause(const EdgepathSystem& s) {
  if (s.paths.size() != 3) return std::nullopt;
  std::vector<RValue> cyc = final_r_cycle(s);
  for (Direction d : {Direction::Decreasing, Direction::Increasing}) {
    const int sg = d == Direction::Decreasing ? 1 : -1;
    int one = -1, two = -1, big = -1;
    for (int i = 0; i < 3; ++i) {
      if (!cyc[i].r) return std::nullopt;
      int r = *cyc[i].r * sg;
      if (r == 1 && one < 0) one = i;
      else if (r == -2 && two < 0) two = i;
      else if (r <= -5 && big < 0) big = i;
    }
    if (one < 0 || two < 0 || big < 0) continue;
    if (rcycle_exception(s.paths[static_cast<std::size_t>(big)])) return std::nullopt;
    return Verdict{Status::Incompressible, Clause::RCycle, d, false};
  }
  return std::nullopt;
}

int count_up(const EdgepathSystem& s) {
  int n = 0;
  for (const VerticalCount& v : s.vertical) n += v.up;
  return n;
}

int count_down(const EdgepathSystem& s) {
  int n = 0;
  for (const VerticalCount& v : s.vertical) n += v.down;
  return n;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Incompressible: return "incompressible";
    case Status::Compressible: return "compressible";
    case Status::Indeterminate: return "indeterminate";
    case Status::NotCompressible: return "incompressible-or-indeterminate";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

std::string Verdict::rule() const {
  std::string d = side(orientation);
  switch (clause) {
    case Clause::None: return "none";
    case Clause::MonotoneTypeI: return "(1) monotone " + d + " type I";
    case Clause::RCycle:
      return orientation == Direction::Decreasing ? "(2) r-cycle (+1,-2,<=-5)" : "(2) r-cycle (-1,+2,>=5)";
    case Clause::MonotoneTypeII: return "(3a) monotone " + d + " type II";
    case Clause::StarFails: return "(3b) condition (*) fails, " + d + " side";
    case Clause::StarHolds: return "(*) holds, vertical extension compressible, " + d + " side";
    case Clause::TypeIIICompressible: return "(4) type III compressible";
    case Clause::TypeIIIIncompressible: return "(4) type III, |Lambda(0)| >= 2";
    case Clause::TypeIIINotCompressible: return "(4) type III, not compressible";
    case Clause::SpecialShape: return "special shape";
  }
  return "?";
}

std::vector<Verdict> fired_clauses(const EdgepathSystem& s) {
  std::vector<Verdict> out;
  if (s.flags.any()) {
    out.push_back({Status::Unknown, Clause::SpecialShape, std::nullopt, false});
    return out;
  }
  switch (s.type) {
    case SystemType::I: {
      if (monotone(s, Direction::Decreasing))
        out.push_back({Status::Incompressible, Clause::MonotoneTypeI, Direction::Decreasing, false});
      else if (monotone(s, Direction::Increasing))
        out.push_back({Status::Incompressible, Clause::MonotoneTypeI, Direction::Increasing, false});
      if (auto v = rcycle_clause(s)) out.push_back(*v);
      break;
    }
    case SystemType::II: {
      if (auto v = rcycle_clause(s)) out.push_back(*v);
      for (Direction d : {Direction::Decreasing, Direction::Increasing})
        if (monotone(s, d)) {
          out.push_back({Status::Incompressible, Clause::MonotoneTypeII, d, false});
          break;
        }
      const int up = count_up(s), down = count_down(s);
      if ((up > 0) != (down > 0)) {
        Direction d = up > 0 ? Direction::Decreasing : Direction::Increasing;
        std::vector<Edgepath> basic = s.basic_paths();
        if (condition_star(final_r_cycle(basic), d))
          out.push_back({Status::Compressible, Clause::StarHolds, d, false});
        else
          out.push_back({Status::Unknown, Clause::StarFails, d, true});
      }
      break;
    }
    case SystemType::III: {
      Fraction z = s.basic_at_zero.abs();
      std::size_t reversible = 0;
      for (const Edgepath& p : s.paths)
        if (is_completely_reversible(p)) ++reversible;
      if (z <= 1 && reversible + 2 >= s.paths.size())
        out.push_back({Status::Compressible, Clause::TypeIIICompressible, std::nullopt, false});
      else if (z >= 2)
        out.push_back({Status::Incompressible, Clause::TypeIIIIncompressible, std::nullopt, false});
      else
        out.push_back({Status::NotCompressible, Clause::TypeIIINotCompressible, std::nullopt, false});
      break;
    }
  }
  return out;
}

Verdict essentiality(const EdgepathSystem& s) {
  std::vector<Verdict> all = fired_clauses(s);
  for (const Verdict& v : all)
    if (v.status != Status::Unknown) return v;
  for (const Verdict& v : all)
    if (v.existence_group || v.clause == Clause::SpecialShape) return v;
  return {};
}

bool certifies_essential(const Verdict& v) {
  return v.status == Status::Incompressible || v.status == Status::Indeterminate ||
         v.status == Status::NotCompressible;
}

FilterResult special_system_filter(const EdgepathSystem& s, Fraction lambda_dec0, Fraction lambda_inc0) {
  FilterResult f;
  auto drop_both = [&](const std::string& why) {
    f.keep_max = f.keep_min = false;
    f.reason_max = f.reason_min = why;
  };
  if (s.flags.augmented) {
    drop_both("(i) augmented type III");
    return f;
  }
  if (s.flags.partial_infinity) {
    drop_both("(ii)/(iii)/(iv) partial infinity-edges");
    return f;
  }
  if (s.flags.redundant_vertical) {
    drop_both("(i) redundant vertical edges");
    return f;
  }
  if (s.type != SystemType::III) return f;
  auto bc = [](ClassTag c) { return c == ClassTag::B || c == ClassTag::C; };
  if (bc(s.class_tag) && (lambda_dec0 == -1 || lambda_dec0 == 0)) {
    f.keep_max = false;
    f.reason_max = std::string("class ") + to_string(s.class_tag) + " type III, a larger twist exists";
  }
  if (bc(s.class_tag_inc) && (lambda_inc0 == 1 || lambda_inc0 == 0)) {
    f.keep_min = false;
    f.reason_min = std::string("class ") + to_string(s.class_tag_inc) + " type III (mirror), a smaller twist exists";
  }
  return f;
}

}  // namespace mslopes
