// Extremal twists, diameter and crossing number of a Montesinos knot, and the
// inequalities relating them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mslopes/essentiality.hpp"
#include "mslopes/invariants.hpp"

namespace mslopes {

enum class CaseTag : std::uint8_t {
  C1,
  C2_1,
  C2_2_1,
  C2_2_2_1a,
  C2_2_2_1ba,
  C2_2_2_1bb,
  C2_2_2_2,
  C2_2_3,
  C2_3_1,
  C2_3_2,
  C3,
};
const char* to_string(CaseTag c);

// Presentation used for the (-1, -2, <=-3) sub-split: tangle order[k] of the
// input becomes tangle k, shifted by shift[k].
struct Normalization {
  std::vector<std::size_t> order;
  std::vector<std::int64_t> shift;
  KnotSpec normalized;
  std::string str() const;
};

struct CaseResult {
  CaseTag tag = CaseTag::C1;
  std::vector<int> r_cycle;  // final r-values of the decreasing system
  std::optional<Normalization> normalization;
};

/// Classifies the max side; the min side is classify_case(k.mirror()).
CaseResult classify_case(const KnotSpec& k);

struct Interval {
  Fraction lo, hi;
  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Candidate {
  EdgepathSystem system;
  Verdict verdict;
  FilterResult filter;
  Fraction twist;
  Fraction chi;         // -chi / #s
  Fraction rho;         // from the definition
  Fraction rho_closed;  // per-type closed form
};

Candidate evaluate_candidate(EdgepathSystem s, Fraction lambda_dec0, Fraction lambda_inc0);

struct Check {
  std::string name;
  bool pass = false;
  std::vector<Fraction> margins;
  std::string detail;
};

struct SideBounds {
  Interval tau;
  std::optional<std::size_t> certified_index;  // candidate attaining the certified end
};

struct KnotReport {
  KnotSpec knot;
  int components = 1;
  CaseResult max_case;
  CaseResult min_case;  // classification of the mirror
  Fraction lambda_dec0, lambda_inc0;
  Fraction tau_dec, tau_inc;
  Fraction seifert_offset;
  Interval tau_max, tau_min, diameter;
  bool alternating = false;
  Fraction crossing_number;
  Candidate case_witness_max, case_witness_min;
  Candidate extremal_max, extremal_min;
  std::size_t basic_systems = 0;
  std::vector<Candidate> candidates;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* check(const std::string& name) const;
};

struct AnalysisOptions {
  CandidateOptions candidates;
  bool keep_candidates = true;      // keep the candidate list in the report
  std::optional<Fraction> offset;   // override the Seifert offset
};

/// Full analysis; throws std::invalid_argument for links.
KnotReport analyse(const KnotSpec& k, const AnalysisOptions& opt = {});

/// Candidate built by the case construction on the max side.
Candidate case_witness(const KnotCatalog& cat, const CaseResult& c);

/// Bounds over a candidate list, max side (`d` == Decreasing) or min side.
SideBounds extremal_bounds(const std::vector<Candidate>& cands, Direction d);

Fraction crossing_number(const KnotCatalog& cat);

Check verify_theorem1(const KnotReport& r);
Check verify_cor12(const KnotReport& r);
Check verify_prop31(const KnotReport& r);
Check verify_prop42(const KnotReport& r);
Check verify_theorem3(const KnotReport& r);
Check verify_cor14(const KnotReport& r);

}  // namespace mslopes
