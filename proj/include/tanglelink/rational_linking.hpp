#pragma once

#include <string>
#include <vector>

#include "tanglelink/fraction.hpp"

namespace tanglelink {

/// Two-component rational link R_{p/q}: numerator closure of the p/q tangle
/// with p even. Orientation: the NW-NE strand runs NE to NW, the other SW to SE.
class RationalLinkSpec {
public:
  /// Throws InvalidSpec when p is odd. The fraction is already reduced.
  explicit RationalLinkSpec(const Fraction& slope);

  /// Raw pair entry point: rejects non-coprime pairs and q == 0; a negative q
  /// is normalized by negating both entries.
  static RationalLinkSpec from_pair(Int p, Int q);

  const Fraction& slope() const noexcept { return slope_; }

  friend bool operator==(const RationalLinkSpec&, const RationalLinkSpec&) = default;

private:
  Fraction slope_;
};

enum class ReductionRule { Zero, Mirror, HorizontalUntwist, VerticalUntwist };

const char* to_string(ReductionRule rule) noexcept;

/// One application of a reduction rule:
///   lk(R_before) = (sign_flip ? -1 : 1) * lk(R_after) + delta.
struct ReductionStep {
  ReductionRule rule;
  Fraction before;
  Fraction after;
  Int delta = 0;
  bool sign_flip = false;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Int result = 0;

  /// Recomputes the result from lk(R_{0/1}) = 0 by unwinding the steps.
  Int replay() const;
};

/// Closed-form sum over k = 1..|p|/2 of (-1)^floor((2k-1) q / p).
Int tuler_linking(const RationalLinkSpec& spec);

struct ReductionResult {
  Int value;
  ReductionTrace trace;
};

/// Shrinks the slope with the inverse twist rules until 0/1 is reached.
ReductionResult reduction_linking(const RationalLinkSpec& spec);

/// Multi-line rendering of the trace as a chain of equalities.
std::string render_chain(const ReductionTrace& trace);

} // namespace tanglelink
