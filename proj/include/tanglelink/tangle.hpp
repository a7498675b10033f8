#pragma once

#include <span>
#include <vector>

#include "tanglelink/fraction.hpp"

namespace tanglelink {

/// Twist counts (a_1, ..., a_n) of a rational tangle in Conway notation.
///
/// The tangle's fraction is a_n + 1/(a_{n-1} + 1/(... + 1/a_1)). Construction
/// does not validate the continued fraction; fraction_from_conway does.
struct ConwaySequence {
  std::vector<Int> terms;

  friend bool operator==(const ConwaySequence&, const ConwaySequence&) = default;
};

/// Which corner the strand leaving NW reaches: SW (V), SE (D) or NE (H).
enum class TangleClass { V, D, H };

const char* to_string(TangleClass c) noexcept;

/// Evaluates the continued fraction. Throws EmptySequence or DivisionByZero.
Fraction fraction_from_conway(const ConwaySequence& seq);

/// Floor-based Euclidean expansion; round-trips through fraction_from_conway.
ConwaySequence conway_from_fraction(const Fraction& f);

TangleClass classify(const Fraction& f) noexcept;

/// Conway's criterion: equal fractions.
bool tangles_equivalent(const ConwaySequence& a, const ConwaySequence& b);

/// Total crossing count of the standard diagram, sum of |a_i|.
Int crossing_count(const ConwaySequence& seq);

} // namespace tanglelink
