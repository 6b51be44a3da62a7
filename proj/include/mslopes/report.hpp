// Serialization of reports, knot suites and diagram dumps.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mslopes/theorems.hpp"

namespace mslopes {

using Json = nlohmann::ordered_json;

Json to_json(Fraction f);
Json to_json(const Interval& i);
Json to_json(const Candidate& c, Fraction offset);
/// Full report; candidates are listed only when `with_candidates` is set.
Json to_json(const KnotReport& r, bool with_candidates = false);

std::string csv_header();
std::string csv_row(const KnotReport& r);

/// Non-integral tangles p/q with -1 < p/q < 1 and 2 <= q <= max_den, ascending.
std::vector<Fraction> tangle_suite(int max_den);
/// Sorted multisets of n tangles from tangle_suite(max_den).
std::vector<KnotSpec> knot_suite(int n, int max_den, bool knots_only);

/// "M(-1/3,1/3,1/n)" with "n=3..40".
std::vector<KnotSpec> expand_family(const std::string& templ, const std::string& range);

/// CSV rows: vertex,label,u,v / edge,from,to,kind / triangle,a,b,c /
/// breakpoint,system,u,value for the decreasing and increasing systems.
std::string dump_diagram_csv(const KnotSpec& k);

}  // namespace mslopes
