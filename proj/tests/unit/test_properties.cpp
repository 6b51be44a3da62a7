// Properties checked over every knot with three tangles of denominator <= 5.
#include <doctest.h>

#include <map>

#include "mslopes/report.hpp"
#include "mslopes/theorems.hpp"

using namespace mslopes;

namespace {

const std::vector<KnotSpec>& suite() {
  static const std::vector<KnotSpec> ks = knot_suite(3, 5, true);
  return ks;
}

}  // namespace

TEST_CASE("suite size") { CHECK(suite().size() == 650); }

TEST_CASE("extremal twists straddle zero and the certified ends are attained") {
  for (const KnotSpec& k : suite()) {
    CAPTURE(k.str());
    KnotReport r = analyse(k);
    CHECK(r.tau_min.hi <= Fraction(0));
    CHECK(Fraction(0) <= r.tau_max.lo);
    CHECK(r.tau_max.lo <= r.tau_max.hi);
    CHECK(r.tau_min.lo <= r.tau_min.hi);
    CHECK(r.tau_max.hi <= r.tau_dec);
    CHECK(r.tau_min.lo >= r.tau_inc);
    // Members of a (*)-fails family are certified as a group, not one by one.
    CHECK((certifies_essential(r.extremal_max.verdict) || r.extremal_max.verdict.existence_group));
    CHECK((certifies_essential(r.extremal_min.verdict) || r.extremal_min.verdict.existence_group));
    CHECK(r.extremal_max.twist == r.tau_max.lo);
    CHECK(r.extremal_min.twist == r.tau_min.hi);
    CHECK(r.all_pass());
  }
}

TEST_CASE("every candidate path is minimal and twists add up") {
  for (std::size_t i = 0; i < suite().size(); i += 7) {
    KnotCatalog cat(suite()[i]);
    for (const EdgepathSystem& s : enumerate_candidates(cat)) {
      Fraction t;
      for (const Edgepath& p : s.paths) {
        CHECK(is_minimal(p.basic_part()));
        t += path_twist(p);
      }
      CHECK(twist(s) == t);
      CHECK(remainder(s) == remainder_closed_form(s));
    }
  }
}

TEST_CASE("mirror invariance of diameter and crossing number") {
  for (std::size_t i = 0; i < suite().size(); i += 3) {
    const KnotSpec& k = suite()[i];
    KnotReport a = analyse(k), b = analyse(k.mirror());
    CHECK(a.diameter == b.diameter);
    CHECK(a.crossing_number == b.crossing_number);
    CHECK(a.tau_max.lo == -b.tau_min.hi);
  }
}

TEST_CASE("every knot gets exactly one case and the classifier is deterministic") {
  std::map<std::string, int> counts;
  for (const KnotSpec& k : suite()) {
    CaseResult c = classify_case(k);
    ++counts[to_string(c.tag)];
    CHECK(classify_case(k).tag == c.tag);
  }
  int total = 0;
  for (const auto& [tag, n] : counts) total += n;
  CHECK(total == static_cast<int>(suite().size()));
}

TEST_CASE("partial edge length is strictly monotone along every edge") {
  for (std::int64_t q = 2; q <= 32; ++q)
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Fraction near = Fraction::reduce(p, q);
      for (Fraction far : {parents(near).first, parents(near).second}) {
        Fraction prev = partial_edge_length(near, far, angle_u(near));
        for (int k = 1; k <= 16; ++k) {
          Fraction u0 = angle_u(near) - (angle_u(near) - angle_u(far)) * Fraction::reduce(k, 16);
          Fraction cur = partial_edge_length(near, far, u0);
          CHECK(cur > prev);
          prev = cur;
        }
      }
    }
}
