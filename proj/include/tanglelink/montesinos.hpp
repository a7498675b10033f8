#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tanglelink/fraction.hpp"
#include "tanglelink/tangle.hpp"

namespace tanglelink {

/// M(p_1/q_1, ..., p_n/q_n | e).
struct MontesinosSpec {
  std::vector<Fraction> tangles;
  Int e = 0;

  friend bool operator==(const MontesinosSpec&, const MontesinosSpec&) = default;
};

/// How the tangle slots are chained into a cycle.
///
/// Stacked: T_i's south ends meet T_{i+1}'s north ends, the e half twists are
/// vertical twists below T_n, and the bottom is closed back to T_1's top.
/// The twist slot is then a V-tangle for even e and a D-tangle for odd e.
///
/// SideBySide: T_i's east ends meet T_{i+1}'s west ends, the twists form the
/// integer tangle [e], and the numerator closure joins back to T_1.
enum class Frame { Stacked, SideBySide };

const char* to_string(Frame f) noexcept;

Int sigma(const MontesinosSpec& spec);

struct ClassCensus {
  std::size_t v = 0;
  std::size_t d = 0;
  std::size_t h = 0;
  std::vector<std::size_t> h_indices;
};

ClassCensus h_census(const MontesinosSpec& spec);

/// Class of the twist slot in the given frame.
TangleClass twist_class(Int e, Frame frame) noexcept;

/// Component labels on the endpoint graph. Slots 0..n-1 are the tangles and
/// slot n is the twist region.
struct ComponentStructure {
  std::size_t component_count = 0;
  std::vector<std::array<int, 4>> corners; // component at NW, NE, SW, SE of each slot
  std::vector<std::array<int, 2>> strands; // {strand from NW, other strand} per slot

  const std::array<int, 2>& tangle_arcs(std::size_t k) const { return strands.at(k); }
  const std::array<int, 2>& twist_arcs() const { return strands.back(); }
};

ComponentStructure trace_components(const MontesinosSpec& spec, Frame frame = Frame::Stacked);

struct FlypeResult {
  MontesinosSpec spec;
  std::vector<Int> e_list;
};

/// q_i -> q_i + e_i p_i with e_i = 1 for odd q_i (e_i = -1 for the slope
/// -1/1, which would otherwise become the infinity tangle), and
/// e -> e - sum e_i.
/// Throws HasHTangle.
FlypeResult flype_normalize(const MontesinosSpec& spec);

enum class Theorem { T41, T42, T43, Inapplicable };

const char* to_string(Theorem t) noexcept;

enum class TheoremMode { Strict, PaperLiteral };

struct PairValue {
  int a = 0;
  int b = 0;
  std::optional<Int> abs_lk; // empty: pair not covered by the theorem
};

struct TheoremReport {
  Theorem theorem = Theorem::Inapplicable;
  std::size_t component_count = 0;
  std::vector<PairValue> pair_values;
  Int sigma = 0;
  std::vector<std::string> hypothesis_notes;

  /// The value for components {a, b} in either order, if present.
  const PairValue* find(int a, int b) const;
};

/// Dispatches to T41, T42 or T43 by H-tangle count and traced
/// components. Throws NotMontesinosScope for n < 3 and ParityViolation when
/// the no-H formula would need a half-integer twist term.
TheoremReport linking_by_theorem(const MontesinosSpec& spec, TheoremMode mode = TheoremMode::Strict,
                                 Frame frame = Frame::Stacked);

} // namespace tanglelink
