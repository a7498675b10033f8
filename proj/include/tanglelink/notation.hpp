#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tanglelink/montesinos.hpp"
#include "tanglelink/rational_linking.hpp"
#include "tanglelink/tangle.hpp"

namespace tanglelink {

using Target = std::variant<RationalLinkSpec, MontesinosSpec>;

// Text forms, whitespace-insensitive:
//   fraction      p/q or n, q > 0 and coprime
//   conway        [a1,...,an]
//   rational      R(p/q) or a bare fraction, p even
//   montesinos    M(p1/q1,...,pn/qn|e), "|e" optional (e = 0)
// Syntax errors raise ParseError with the offending offset; well-formed but
// invalid values (q <= 0, not coprime, odd p for R) raise InvalidSpec.

Fraction parse_fraction(std::string_view text);
ConwaySequence parse_conway(std::string_view text);
MontesinosSpec parse_montesinos(std::string_view text);
Target parse_target(std::string_view text);

/// Slope of `R(p/q)` or `p/q` without the even-numerator check.
Fraction parse_slope(std::string_view text);

std::string render(const Fraction& f);
std::string render(const ConwaySequence& seq);
std::string render(const RationalLinkSpec& spec);
std::string render(const MontesinosSpec& spec);
std::string render(const Target& target);

} // namespace tanglelink
