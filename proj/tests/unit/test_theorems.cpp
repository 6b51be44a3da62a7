#include <doctest.h>

#include "mslopes/report.hpp"
#include "mslopes/theorems.hpp"

using namespace mslopes;

namespace {

Fraction F(std::int64_t p, std::int64_t q = 1) { return Fraction::reduce(p, q); }

Interval point(Fraction f) { return {f, f}; }

}  // namespace

TEST_CASE("M(-1/2,1/3,1/7)") {
  KnotReport r = analyse(KnotSpec::parse("M(-1/2,1/3,1/7)"));
  CHECK(std::string(to_string(r.max_case.tag)) == "2-2-2-1b-b");
  CHECK(r.tau_dec == F(6));
  CHECK(r.tau_inc == F(-18));
  CHECK(r.lambda_dec0 == F(-1));
  CHECK(r.lambda_inc0 == F(2));
  CHECK(r.tau_max == point(F(2)));
  CHECK(r.tau_min == point(F(-18)));
  CHECK(r.diameter == point(F(20)));
  CHECK(r.crossing_number == F(12));
  CHECK_FALSE(r.alternating);
  const Check* t1 = r.check("theorem1");
  REQUIRE(t1 != nullptr);
  CHECK(t1->pass);
  CHECK(t1->margins == std::vector<Fraction>{F(2), F(4)});
  CHECK(r.all_pass());
}

TEST_CASE("M(1/2,1/3,1/7) is alternating and attains the upper bound") {
  KnotReport r = analyse(KnotSpec::parse("M(1/2,1/3,1/7)"));
  CHECK(r.alternating);
  CHECK(r.diameter == point(F(24)));
  CHECK(r.crossing_number == F(12));
  CHECK(std::string(to_string(r.max_case.tag)) == "1");
  CHECK(r.check("cor12")->pass);
  CHECK(r.check("theorem1")->margins == std::vector<Fraction>{F(6), F(0)});
}

TEST_CASE("case 2-3-1 with a monotone type I witness") {
  KnotReport r = analyse(KnotSpec::parse("M(-1/2,2/3,2/3)"));
  CHECK(std::string(to_string(r.max_case.tag)) == "2-3-1");
  CHECK(r.case_witness_max.system.type == SystemType::I);
  CHECK(*r.case_witness_max.system.cut_u == F(1, 3));
  CHECK(r.case_witness_max.rho == F(3));
  CHECK(r.diameter == point(F(13)));
  CHECK(r.crossing_number == F(8));
  CHECK(r.all_pass());
}

TEST_CASE("family M(-1/3,1/3,1/n) stays above 2cr - 6") {
  Fraction prev = F(1000);
  for (const KnotSpec& k : expand_family("M(-1/3,1/3,1/n)", "n=3..14")) {
    if (component_count(k) != 1) continue;
    KnotReport r = analyse(k);
    REQUIRE(r.diameter.is_point());
    Fraction gap = r.diameter.lo - Fraction(2) * r.crossing_number;
    CHECK(gap > F(-6));
    CHECK(gap <= prev);
    prev = gap;
    CHECK(r.all_pass());
  }
}

TEST_CASE("four tangles with Lambda_dec(0) = -2 and Lambda_inc(0) = 2") {
  KnotReport r = analyse(KnotSpec::parse("M(1/2,1/3,-1/3,-1/3)"));
  CHECK(r.lambda_dec0 == F(-2));
  CHECK(r.lambda_inc0 == F(2));
  const Check* t3 = r.check("theorem3");
  REQUIRE(t3 != nullptr);
  CHECK(t3->pass);
  CHECK(t3->margins.at(0) == F(0));
}

TEST_CASE("links are rejected") {
  CHECK_THROWS_AS(analyse(KnotSpec::parse("M(1/3,1/3,-1/3,-1/3)")), std::invalid_argument);
}

TEST_CASE("mirror swaps the extremes") {
  for (const char* text : {"M(-1/2,1/3,1/7)", "M(-4/5,1/3,1/2)", "M(-2/5,3/7,1/2)"}) {
    KnotSpec k = KnotSpec::parse(text);
    KnotReport a = analyse(k), b = analyse(k.mirror());
    CHECK(b.tau_max == Interval{-a.tau_min.hi, -a.tau_min.lo});
    CHECK(b.tau_min == Interval{-a.tau_max.hi, -a.tau_max.lo});
    CHECK(b.diameter == a.diameter);
    CHECK(b.crossing_number == a.crossing_number);
    CHECK(b.max_case.tag == a.min_case.tag);
  }
}

TEST_CASE("undecided systems widen the bounds instead of being guessed") {
  KnotReport r = analyse(KnotSpec::parse("M(-4/5,1/3,1/2)"));
  CHECK(std::string(to_string(r.max_case.tag)) == "2-2-2-1b-a");
  CHECK(r.tau_max.lo < r.tau_max.hi);
  CHECK(r.all_pass());
}

TEST_CASE("report JSON keeps rationals as strings") {
  KnotReport r = analyse(KnotSpec::parse("M(-1/2,1/3,1/7)"));
  Json j = to_json(r, false);
  CHECK(j["diameter"] == "20");
  CHECK(j["crossing_number"] == "12");
  CHECK(j["theorem1"] == "pass");
  CHECK(j["tau_max"]["lo"] == "2");
  CHECK(j["case_tag"] == "2-2-2-1b-b");
  CHECK(to_json(r, false).dump() == j.dump());
}
