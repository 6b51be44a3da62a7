#include <doctest.h>

#include <set>

#include "mslopes/invariants.hpp"
#include "mslopes/theorems.hpp"

using namespace mslopes;

namespace {

Fraction F(std::int64_t p, std::int64_t q = 1) { return Fraction::reduce(p, q); }

}  // namespace

TEST_CASE("distance between slopes") {
  CHECK(distance(F(20), F(0)) == 20);
  CHECK(distance(F(37, 2), F(16)) == 5);
  CHECK(distance(F(1, 3), F(1, 2)) == 1);
}

TEST_CASE("component count") {
  CHECK(component_count(KnotSpec::parse("M(-1/2,1/3,1/7)")) == 1);
  CHECK(component_count(KnotSpec::parse("M(1/3,1/3,-1/3,-1/3)")) == 2);
  CHECK(component_count(KnotSpec::parse("M(1/2,1/3,-1/3,-1/3)")) == 1);
  // Odd pretzels (p, q, r) are knots; (2, 2, 2)-type ones are links.
  CHECK(component_count(KnotSpec::parse("M(1/3,1/5,1/7)")) == 1);
  CHECK(component_count(KnotSpec::parse("M(1/2,1/2,1/2)")) > 1);
}

TEST_CASE("Seifert offset puts the known (-2,3,7) slopes in place") {
  KnotReport r = analyse(KnotSpec::parse("M(-1/2,1/3,1/7)"));
  CHECK(r.seifert_offset == F(-18));
  std::set<Fraction> incompressible, all;
  for (const Candidate& c : r.candidates) {
    Fraction slope = boundary_slope(c.twist, r.seifert_offset);
    all.insert(slope);
    if (c.verdict.status == Status::Incompressible) incompressible.insert(slope);
  }
  CHECK(incompressible == std::set<Fraction>{F(0), F(16), F(20)});
  CHECK(all.count(F(37, 2)) == 1);
}

TEST_CASE("Seifert system is orientable by parity and has slope zero") {
  for (const char* text : {"M(-1/2,1/3,1/7)", "M(1/2,1/3,1/7)", "M(-2/5,3/7,1/2)", "M(1/2,1/3,-1/3,-1/3)"}) {
    KnotSpec k = KnotSpec::parse(text);
    EdgepathSystem s = seifert_system(k);
    CHECK(parity_orientable(s, forbidden_pairings(k)));
    CHECK(boundary_slope(twist(s), seifert_offset(k)) == Fraction(0));
  }
}

TEST_CASE("remainder: definition against closed forms") {
  KnotCatalog cat(KnotSpec::parse("M(-1/2,2/3,2/3)"));
  for (const EdgepathSystem& s : enumerate_candidates(cat)) {
    CHECK(remainder(s) == remainder_closed_form(s));
    if (s.type == SystemType::II) CHECK(remainder(s) == Fraction(4) - Fraction(4) * cancel(s));
    if (s.type == SystemType::III) CHECK(remainder(s) == -Fraction(4) * cancel(s));
  }
}

TEST_CASE("monotone type I of M(-1/2,2/3,2/3)") {
  KnotCatalog cat(KnotSpec::parse("M(-1/2,2/3,2/3)"));
  auto sys = type_I_systems(cat.dec());
  REQUIRE(sys.size() == 1);
  CHECK(twist(sys[0]) == F(7));
  CHECK(chi_per_sheet(sys[0]) == F(2));
  CHECK(remainder(sys[0]) == F(3));
}

TEST_CASE("pairings") {
  CHECK(pairing_of(F(1, 2)) == Pairing::Vertical);
  CHECK(pairing_of(F(2, 3)) == Pairing::Horizontal);
  CHECK(pairing_of(F(1, 3)) == Pairing::Diagonal);
  CHECK(pairing_of(1, 0) == Pairing::Vertical);
}
