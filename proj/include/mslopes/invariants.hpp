// Numerical invariants of candidate systems and of the knot itself.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mslopes/system.hpp"

namespace mslopes {

/// Sum of path twists (infinity edges contribute nothing).
Fraction twist(const EdgepathSystem& s);
Fraction twist(const BasicSystem& b);

/// Twist from the integral formula over the summed function.  For a basic
/// system this integrates over [0, 1]; with `cut` set it integrates over
/// [cut, 1], treating the system as the type I system cut there.
Fraction twist_by_integration(std::span<const Edgepath> basic_paths, std::optional<Fraction> cut = std::nullopt);

/// Total length of increasing and decreasing edges (vertical edges included).
struct SignedLengths {
  Fraction increasing, decreasing;
};
SignedLengths signed_lengths(const EdgepathSystem& s);
/// min(l+, l-).
Fraction cancel(const EdgepathSystem& s);
/// Total length of non-infinity edges.
Fraction total_length(const EdgepathSystem& s);

/// -chi / #sheets of a surface carried by the system.
Fraction chi_per_sheet(const EdgepathSystem& s);
/// |twist| - 2 * (-chi / #sheets).
Fraction remainder(const EdgepathSystem& s);
/// Per-type closed form of the remainder.
Fraction remainder_closed_form(const EdgepathSystem& s);

/// Distance between two slopes: |p s - q r|.
std::int64_t distance(Fraction a, Fraction b);

// ---- knot diagram --------------------------------------------------------

/// Pairing of the four tangle endpoints: NW-SW/NE-SE (vertical), NW-NE/SW-SE
/// (horizontal), or NW-SE/NE-SW (diagonal).  Determined by (p mod 2, q mod 2).
enum class Pairing : std::uint8_t { Vertical, Horizontal, Diagonal };
Pairing pairing_of(Fraction f);
Pairing pairing_of(std::int64_t p, std::int64_t q);

int component_count(const KnotSpec& k);

/// For a knot, the pairing joining the two endpoints where the oriented
/// strand enters each tangle.  Edgepaths of orientable surfaces avoid it.
std::vector<Pairing> forbidden_pairings(const KnotSpec& k);

/// The system of an orientable spanning surface: each path keeps to vertices
/// outside the forbidden class, completed with vertical or infinity edges.
EdgepathSystem seifert_system(const KnotSpec& k);
/// Twist of the Seifert system; boundary slope = twist - offset.
Fraction seifert_offset(const KnotSpec& k);

/// Every vertex the system touches avoids the forbidden class of its tangle.
/// Type I systems are never reported orientable.
bool parity_orientable(const EdgepathSystem& s, const std::vector<Pairing>& forbidden);

Fraction boundary_slope(Fraction twist, Fraction offset);

}  // namespace mslopes
