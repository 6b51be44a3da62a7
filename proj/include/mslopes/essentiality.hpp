// Incompressibility verdicts for candidate systems and the filter that removes
// special shapes from extremal searches.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mslopes/system.hpp"

namespace mslopes {

// NotCompressible: incompressible or indeterminate; either way an essential
// surface is carried.
enum class Status : std::uint8_t { Incompressible, Compressible, Indeterminate, NotCompressible, Unknown };

enum class Clause : std::uint8_t {
  None,
  MonotoneTypeI,           // (1)
  RCycle,                  // (2)
  MonotoneTypeII,          // (3a)
  StarFails,               // (3b) existence of an essential extension
  StarHolds,               // (*) holds: the vertical extension is compressible
  TypeIIICompressible,     // (4)
  TypeIIIIncompressible,   // (4)
  TypeIIINotCompressible,  // (4)
  SpecialShape,
};

struct Verdict {
  Status status = Status::Unknown;
  Clause clause = Clause::None;
  std::optional<Direction> orientation;  // which side of the clause fired
  bool existence_group = false;          // member of a (3b) family

  std::string rule() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(Status s);

/// Decisive clause if any, else the existence clause, else Unknown.
Verdict essentiality(const EdgepathSystem& s);
/// Every clause that fires, in clause order.
std::vector<Verdict> fired_clauses(const EdgepathSystem& s);

/// Counts toward a lower bound on the extremal twist.
bool certifies_essential(const Verdict& v);

struct FilterResult {
  bool keep_max = true;
  bool keep_min = true;
  std::string reason_max;
  std::string reason_min;
  friend bool operator==(const FilterResult&, const FilterResult&) = default;
};

/// Drops augmented, partial infinity-edge and redundant vertical systems from
/// both searches, class B/C type III from the max search when
/// Lambda_dec(0) is -1 or 0, and the mirrored case from the min search.
FilterResult special_system_filter(const EdgepathSystem& s, Fraction lambda_dec0, Fraction lambda_inc0);

}  // namespace mslopes
