#include "tanglelink/notation.hpp"

#include <cctype>
#include <limits>

namespace tanglelink {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end())
      fail("unexpected trailing input");
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10)
        fail_at(start, "integer out of range");
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  Fraction fraction() {
    const Int p = integer();
    Int q = 1;
    if (accept('/'))
      q = integer();
    return Fraction::reduced(p, q);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Fraction slope_body(Parser& ps) {
  if (ps.accept('R') || ps.accept('r')) {
    ps.expect('(');
    const Fraction f = ps.fraction();
    ps.expect(')');
    return f;
  }
  return ps.fraction();
}

MontesinosSpec montesinos_body(Parser& ps) {
  MontesinosSpec spec;
  ps.expect('(');
  spec.tangles.push_back(ps.fraction());
  while (ps.accept(','))
    spec.tangles.push_back(ps.fraction());
  if (ps.accept('|'))
    spec.e = ps.integer();
  ps.expect(')');
  return spec;
}

} // namespace

Fraction parse_fraction(std::string_view text) {
  Parser ps(text);
  const Fraction f = ps.fraction();
  ps.expect_end();
  return f;
}

ConwaySequence parse_conway(std::string_view text) {
  Parser ps(text);
  ConwaySequence seq;
  ps.expect('[');
  if (ps.peek() == ']')
    ps.fail("empty Conway sequence");
  seq.terms.push_back(ps.integer());
  while (ps.accept(','))
    seq.terms.push_back(ps.integer());
  ps.expect(']');
  ps.expect_end();
  return seq;
}

MontesinosSpec parse_montesinos(std::string_view text) {
  Parser ps(text);
  if (!ps.accept('M') && !ps.accept('m'))
    ps.fail("expected 'M('");
  MontesinosSpec spec = montesinos_body(ps);
  ps.expect_end();
  return spec;
}

Fraction parse_slope(std::string_view text) {
  Parser ps(text);
  const Fraction f = slope_body(ps);
  ps.expect_end();
  return f;
}

Target parse_target(std::string_view text) {
  Parser ps(text);
  const char head = ps.peek();
  if (head == 'M' || head == 'm')
    return parse_montesinos(text);
  return RationalLinkSpec(parse_slope(text));
}

std::string render(const Fraction& f) { return f.str(); }

std::string render(const ConwaySequence& seq) {
  std::string s = "[";
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(seq.terms[i]);
  }
  return s + "]";
}

std::string render(const RationalLinkSpec& spec) { return "R(" + spec.slope().str() + ")"; }

std::string render(const MontesinosSpec& spec) {
  std::string s = "M(";
  for (std::size_t i = 0; i < spec.tangles.size(); ++i) {
    if (i)
      s += ",";
    s += spec.tangles[i].str();
  }
  return s + "|" + std::to_string(spec.e) + ")";
}

std::string render(const Target& target) {
  return std::visit([](const auto& t) { return render(t); }, target);
}

} // namespace tanglelink
