#include "tanglelink/rational_linking.hpp"

#include <cassert>
#include <sstream>

namespace tanglelink {

namespace {

void require_even(const Fraction& f) {
  if (f.p() % 2 != 0)
    throw Error(ErrorCode::InvalidSpec,
                "R(" + f.str() + ") has odd numerator: the closure is a knot, not a 2-component link");
}

Int measure(Int p, Int q) { return std::max(checked::abs(p), q); }

} // namespace

RationalLinkSpec::RationalLinkSpec(const Fraction& slope) : slope_(slope) { require_even(slope_); }

RationalLinkSpec RationalLinkSpec::from_pair(Int p, Int q) {
  if (q == 0)
    throw Error(ErrorCode::InvalidSpec, "denominator is zero");
  if (checked::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidSpec,
                std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  return RationalLinkSpec(Fraction::make(p, q));
}

const char* to_string(ReductionRule rule) noexcept {
  switch (rule) {
  case ReductionRule::Zero: return "zero";
  case ReductionRule::Mirror: return "mirror";
  case ReductionRule::HorizontalUntwist: return "horizontal-untwist";
  case ReductionRule::VerticalUntwist: return "vertical-untwist";
  }
  return "?";
}

Int ReductionTrace::replay() const {
  Int v = 0;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->sign_flip)
      v = checked::neg(v);
    v = checked::add(v, it->delta);
  }
  return v;
}

Int tuler_linking(const RationalLinkSpec& spec) {
  const Int p = spec.slope().p();
  const Int q = spec.slope().q();
  const Int half = checked::abs(p) / 2;
  Int sum = 0;
  for (Int k = 1; k <= half; ++k) {
    const Int exponent = checked::floor_div(checked::mul(2 * k - 1, q), p);
    sum += (exponent % 2 == 0) ? 1 : -1;
  }
  return sum;
}

ReductionResult reduction_linking(const RationalLinkSpec& spec) {
  ReductionTrace trace;
  Int p = spec.slope().p();
  Int q = spec.slope().q();

  // Running value: lk(original) = sign * lk(R_{p/q}) + offset.
  Int sign = 1;
  Int offset = 0;

  auto record = [&](ReductionRule rule, Int np, Int nq, Int delta, bool flip) {
    trace.steps.push_back({rule, Fraction::reduced(p, q), Fraction::reduced(np, nq), delta, flip});
    offset = checked::add(offset, checked::mul(sign, delta));
    if (flip)
      sign = -sign;
    p = np;
    q = nq;
  };

  for (;;) {
    if (p == 0) {
      assert(q == 1);
      record(ReductionRule::Zero, 0, 1, 0, false);
      break;
    }
    const Int before = measure(p, q);

    if (p < 0)
      record(ReductionRule::Mirror, checked::neg(p), q, 0, true);

    // lk(p/q) = -lk(p/(q - p)), applied m times at once.
    if (q > p) {
      const Int m = q / p; // q mod p != 0: p is even and q odd
      record(ReductionRule::VerticalUntwist, p, q - m * p, 0, m % 2 != 0);
    }

    // lk(p/q) = lk((p - 2mq)/q) + m, landing in (-q, q].
    const Int two_q = checked::mul(2, q);
    const Int m = checked::floor_div(checked::add(p, checked::sub(q, 1)), two_q);
    if (m != 0)
      record(ReductionRule::HorizontalUntwist, checked::sub(p, checked::mul(m, two_q)), q, m, false);

    if (measure(p, q) >= before && p != 0)
      throw std::logic_error("reduction_linking: measure did not decrease");
  }

  trace.result = offset;
  return {offset, std::move(trace)};
}

namespace {

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')')
      --depth;
    else if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ')
      return true;
  }
  return false;
}

std::string lk_term(const Fraction& f) { return "lk(R(" + f.str() + "))"; }

// Expression for lk(R_{steps[0].before}) with the first `depth` steps expanded.
std::string expand(const std::vector<ReductionStep>& steps, std::size_t depth) {
  std::string s = lk_term(steps[depth - 1].after);
  for (std::size_t j = depth; j-- > 0;) {
    const auto& st = steps[j];
    if (st.sign_flip)
      s = has_top_level_sum(s) ? "-(" + s + ")" : "-" + s;
    if (st.delta > 0)
      s += " + " + std::to_string(st.delta);
    else if (st.delta < 0)
      s += " - " + std::to_string(-st.delta);
  }
  return s;
}

} // namespace

std::string render_chain(const ReductionTrace& trace) {
  std::ostringstream os;
  if (trace.steps.empty())
    return {};
  const std::string head = lk_term(trace.steps.front().before);
  const std::string pad(head.size(), ' ');
  os << head;
  bool first = true;
  for (std::size_t d = 1; d <= trace.steps.size(); ++d) {
    if (trace.steps[d - 1].rule == ReductionRule::Zero)
      continue;
    os << (first ? "" : pad) << " = " << expand(trace.steps, d) << "   [" << to_string(trace.steps[d - 1].rule)
       << "]\n";
    first = false;
  }
  os << (first ? "" : pad) << " = " << trace.result << "\n";
  return os.str();
}

} // namespace tanglelink
