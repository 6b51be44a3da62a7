// Knots, basic edgepath systems and the candidate systems built from them.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mslopes/edgepath.hpp"

namespace mslopes {

struct KnotSpec {
  std::vector<Fraction> tangles;

  /// "M(p1/q1,...,pN/qN)"; the M( ) wrapper is optional.
  static KnotSpec parse(std::string_view text);
  /// Throws std::invalid_argument for N < 3 or an integral tangle.
  void validate() const;
  KnotSpec mirror() const;
  std::size_t size() const { return tangles.size(); }
  std::string str() const;

  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;
};

// Continuous piecewise linear function given by its breakpoints.
struct PiecewiseLinear {
  std::vector<Fraction> u;  // strictly increasing
  std::vector<Fraction> v;

  Fraction operator()(Fraction x) const;
};

struct RootScan {
  std::vector<Fraction> roots;                            // isolated zeros in (0, 1)
  std::vector<std::pair<Fraction, Fraction>> degenerate;  // intervals where f == 0
};
RootScan isolated_roots(const PiecewiseLinear& f);

enum class SystemType : std::uint8_t { I, II, III };
enum class ClassTag : std::uint8_t { A, B, C, Other };

const char* to_string(SystemType t);
const char* to_string(ClassTag c);

struct LVCount {
  int L = 0;  // triangles between the path and the decreasing path
  int V = 0;  // vertical edges between their endpoints
  friend bool operator==(const LVCount&, const LVCount&) = default;
};

/// L and V of `path` relative to `dec` (both basic paths of the same tangle),
/// counted from the region they bound together with the vertical segment.
LVCount count_lv(const Edgepath& path, const Edgepath& dec);

struct BasicSystem {
  std::vector<Edgepath> paths;
  std::vector<std::size_t> choice;  // index of each path in its tangle's catalog list
  ClassTag class_tag = ClassTag::Other;      // relative to the decreasing system
  ClassTag class_tag_inc = ClassTag::Other;  // same, read on the mirror side

  Fraction at_zero() const;  // Lambda(0), the sum of the path endpoints
};

struct VerticalCount {
  int up = 0;
  int down = 0;
  friend bool operator==(const VerticalCount&, const VerticalCount&) = default;
};

struct SystemFlags {
  bool augmented = false;
  bool partial_infinity = false;
  bool redundant_vertical = false;
  std::size_t augmented_path = 0;
  bool any() const { return augmented || partial_infinity || redundant_vertical; }
};

struct EdgepathSystem {
  SystemType type = SystemType::II;
  std::vector<Edgepath> paths;
  std::optional<Fraction> cut_u;        // type I
  std::vector<VerticalCount> vertical;  // type II, one entry per path
  ClassTag class_tag = ClassTag::Other;
  ClassTag class_tag_inc = ClassTag::Other;
  SystemFlags flags;
  std::vector<std::size_t> basic_choice;
  Fraction basic_at_zero;
  /// Basic paths the system was built from.
  std::vector<Edgepath> basic_paths() const;
};

/// Signed final r-value of each path; empty for paths without a non-horizontal
/// edge.  `tilde` marks r == -2 (or +2 when read mirrored) on a completely
/// reversible basic path.
struct RValue {
  std::optional<int> r;
  bool reversible = false;
};
std::vector<RValue> final_r_cycle(const EdgepathSystem& s);
std::vector<RValue> final_r_cycle(std::span<const Edgepath> basic_paths);

/// Condition (*) on a cyclic list of final r-values.  With Direction::Increasing
/// the cycle is read negated (the mirror image condition).
bool condition_star(std::span<const RValue> cycle, Direction d = Direction::Decreasing);

PiecewiseLinear system_function(std::span<const Edgepath> basic_paths);

// Everything about one knot that does not depend on the choice of system:
// the minimal basic paths of each tangle, their L/V counts and classes.
class KnotCatalog {
 public:
  explicit KnotCatalog(KnotSpec knot);

  const KnotSpec& knot() const { return knot_; }
  std::size_t size() const { return knot_.size(); }
  const std::vector<Edgepath>& paths(std::size_t tangle) const { return paths_[tangle]; }
  LVCount lv(std::size_t tangle, std::size_t path) const { return lv_[tangle][path]; }
  /// L/V of the mirror image measured against the mirrored increasing path.
  LVCount lv_inc(std::size_t tangle, std::size_t path) const { return lv_inc_[tangle][path]; }
  std::size_t dec_index(std::size_t tangle) const { return dec_[tangle]; }
  std::size_t inc_index(std::size_t tangle) const { return inc_[tangle]; }

  BasicSystem basic(std::vector<std::size_t> choice) const;
  BasicSystem dec() const;
  BasicSystem inc() const;
  std::vector<BasicSystem> enumerate_basic_systems() const;
  std::size_t basic_system_count() const;

  ClassTag classify(std::span<const std::size_t> choice, Direction base = Direction::Decreasing) const;

 private:
  KnotSpec knot_;
  std::vector<std::vector<Edgepath>> paths_;
  std::vector<std::vector<LVCount>> lv_, lv_inc_;
  std::vector<std::size_t> dec_, inc_;
};

/// Truncate a basic path at u0 (constant path when u0 > u(<tangle>)).
Edgepath cut_path(const Edgepath& basic, Fraction u0);

std::vector<EdgepathSystem> type_I_systems(const BasicSystem& b, RootScan* scan = nullptr);
/// All distributions of |Lambda(0)| vertical edges over the paths, plus
/// variants with up to `max_redundant` extra up/down pairs (flagged).
std::vector<EdgepathSystem> type_II_systems(const BasicSystem& b, int max_redundant = 0);
/// The complete infinity-edge system; with `special`, also the partial
/// infinity representative (Lambda(0) == 0 only) and augmented variants.
std::vector<EdgepathSystem> type_III_systems(const BasicSystem& b, bool special = false);

struct CandidateOptions {
  int max_redundant = 1;
  bool special_type_III = true;
};
std::vector<EdgepathSystem> enumerate_candidates(const KnotCatalog& cat, const CandidateOptions& opt = {});

/// Image of a system of K as a system of the mirror knot.
EdgepathSystem mirror(const EdgepathSystem& s);
Edgepath mirror(const Edgepath& p);

}  // namespace mslopes
