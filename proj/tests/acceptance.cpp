// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tanglelink/verify.hpp"

using namespace tanglelink;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok)
    ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << n << " " << what;
  if (!detail.empty())
    std::cout << " (" << detail << ")";
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string timing(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

// Runs a check, turning any exception into a failure with its message.
void criterion(int n, const std::string& what, double limit, const std::function<bool(std::string&)>& check) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(start);
  if (limit > 0 && s >= limit) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  report(n, ok, what, detail.empty() ? timing(s) : detail + "; " + timing(s));
}

std::vector<Fraction> sweep_slopes() {
  std::vector<Fraction> out;
  for (auto [p, q] : std::vector<std::pair<Int, Int>>{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}, {5, 3}, {2, 3}}) {
    out.push_back(Fraction::reduced(p, q));
    out.push_back(Fraction::reduced(-p, q));
  }
  return out;
}

std::vector<MontesinosSpec> sweep_set() {
  const auto slopes = sweep_slopes();
  std::vector<MontesinosSpec> out;
  for (const auto& a : slopes)
    for (const auto& b : slopes)
      for (const auto& c : slopes)
        for (Int e = -2; e <= 2; ++e)
          out.push_back(MontesinosSpec{{a, b, c}, e});
  return out;
}

bool all_methods_equal(Int p, Int q, Int expected, std::string& detail) {
  const auto ev = evaluate_rational(RationalLinkSpec::from_pair(p, q));
  const bool ok = ev.tuler == expected && ev.reduce == expected && ev.oracle == expected;
  if (!ok)
    detail = "R(" + std::to_string(p) + "/" + std::to_string(q) + ") tuler " + std::to_string(ev.tuler.value_or(0)) +
             " reduce " + std::to_string(ev.reduce.value_or(0)) + " oracle " + std::to_string(ev.oracle.value_or(0));
  return ok;
}

} // namespace

int main() {
  criterion(1, "golden R(26/9): three methods give -3, chain 26/9 -> 8/9 -> 8/1 -> 0/1", 1.0, [](std::string& d) {
    if (!all_methods_equal(26, 9, -3, d))
      return false;
    const auto trace = reduction_linking(RationalLinkSpec::from_pair(26, 9)).trace;
    std::vector<Fraction> chain{trace.steps.front().before};
    for (const auto& s : trace.steps)
      if (!(s.after == chain.back()))
        chain.push_back(s.after);
    const std::vector<Fraction> expected{Fraction::reduced(26, 9), Fraction::reduced(8, 9), Fraction::reduced(8, 1),
                                         Fraction::integer(0)};
    if (chain != expected) {
      d = "chain " + render_chain(trace);
      return false;
    }
    return true;
  });

  criterion(2, "family R(2n/1) has lk = n for n = 1..20, all methods", 1.0, [](std::string& d) {
    for (Int n = 1; n <= 20; ++n)
      if (!all_methods_equal(2 * n, 1, n, d))
        return false;
    return true;
  });

  criterion(3, "tuler = reduction on even p, 2 <= |p| <= 120, 1 <= |q| <= 201", 10.0, [](std::string& d) {
    std::size_t checked = 0;
    for (Int p = -120; p <= 120; p += 2)
      for (Int q = 1; q <= 201; ++q) {
        if (p == 0 || std::gcd(p, q) != 1)
          continue;
        // A negative q names the same reduced slope as -p/|q|, covered by the sign of p.
        const auto spec = RationalLinkSpec::from_pair(p, q);
        const Int t = tuler_linking(spec);
        const Int r = reduction_linking(spec).value;
        if (t != r || t != testsupport::ref_tuler(p, q)) {
          d = spec.slope().str() + ": tuler " + std::to_string(t) + " reduce " + std::to_string(r);
          return false;
        }
        ++checked;
      }
    d = std::to_string(checked) + " slopes";
    return true;
  });

  criterion(4, "oracle = tuler on even p, |p| <= 30, |q| <= 31, after calibration", 30.0, [](std::string& d) {
    if (oracle_linking(RationalLinkSpec::from_pair(2, 1)) != 1 || oracle_linking(RationalLinkSpec::from_pair(4, 1)) != 2) {
      d = "calibration anchors";
      return false;
    }
    std::size_t checked = 0;
    for (Int p = -30; p <= 30; p += 2)
      for (Int q = 1; q <= 31; ++q) {
        if (std::gcd(p, q) != 1)
          continue;
        const auto spec = RationalLinkSpec::from_pair(p, q);
        if (oracle_linking(spec) != tuler_linking(spec)) {
          d = spec.slope().str();
          return false;
        }
        ++checked;
      }
    d = std::to_string(checked) + " slopes";
    return true;
  });

  criterion(5, "identities: negation, p+2q shift, p/(p+q), p/(q+2p)", 0, [](std::string& d) {
    const auto lk = [](Int p, Int q) { return tuler_linking(RationalLinkSpec(Fraction::make(p, q))); };
    for (Int p = -120; p <= 120; p += 2)
      for (Int q = 1; q <= 201; ++q) {
        if (p == 0 || std::gcd(p, q) != 1)
          continue;
        const Int base = lk(p, q);
        const bool ok = lk(-p, q) == -base && lk(p + 2 * q, q) == base + 1 && (p + q == 0 || lk(p, p + q) == -base) &&
                        (q + 2 * p == 0 || lk(p, q + 2 * p) == base);
        if (!ok) {
          d = std::to_string(p) + "/" + std::to_string(q);
          return false;
        }
      }
    return true;
  });

  criterion(6, "oracle rational diagrams have 2 components iff p even", 0, [](std::string& d) {
    for (Int p = -30; p <= 30; ++p)
      for (Int q = 1; q <= 31; ++q) {
        if (std::gcd(p, q) != 1)
          continue;
        const auto c = rational_link_diagram(Fraction::reduced(p, q)).component_count();
        if ((c == 2) != (p % 2 == 0) || (c != 1 && c != 2)) {
          d = std::to_string(p) + "/" + std::to_string(q) + ": " + std::to_string(c);
          return false;
        }
      }
    return true;
  });

  criterion(7, "M(1/1,1/1,1/1,1/1|0): theorem |lk| 2, oracle 2 components with |lk| 2", 0, [](std::string& d) {
    const auto ev = evaluate_montesinos(parse_montesinos("M(1/1,1/1,1/1,1/1|0)"));
    const auto* pair = ev.theorem ? ev.theorem->find(0, 1) : nullptr;
    const auto olk = ev.oracle ? ev.oracle->linking(0, 1) : std::nullopt;
    d = std::string("theorem ") + (ev.theorem ? to_string(ev.theorem->theorem) : "none");
    return pair && pair->abs_lk == 2 && ev.oracle->component_count == 2 && olk && std::abs(*olk) == 2 &&
           ev.discrepancies.empty();
  });

  criterion(8, "M(2/1,2/1,1/1|1): sigma 4, theorem |lk| 2, oracle 2 components through both H-tangles, |lk| 2", 0,
            [](std::string& d) {
              const auto spec = parse_montesinos("M(2/1,2/1,1/1|1)");
              const auto ev = evaluate_montesinos(spec);
              if (sigma(spec) != 4 || !ev.theorem || ev.theorem->theorem != Theorem::T42) {
                d = "sigma or dispatch";
                return false;
              }
              const auto* pair = ev.theorem->find(0, 1);
              const auto olk = ev.oracle->linking(0, 1);
              bool through = ev.oracle->labels_consistent;
              for (std::size_t k : ev.census.h_indices) {
                const auto& s = ev.structure.tangle_arcs(k);
                through = through && s[0] != s[1];
              }
              d = "oracle lk " + std::to_string(olk.value_or(0));
              return pair && pair->abs_lk == 2 && ev.oracle->component_count == 2 && through && olk &&
                     std::abs(*olk) == 2 && ev.discrepancies.empty();
            });

  criterion(9, "M(1/2,1/2,1/2|0): inapplicable with 3 components, each pair |lk| 1", 0, [](std::string& d) {
    const auto ev = evaluate_montesinos(parse_montesinos("M(1/2,1/2,1/2|0)"));
    std::ostringstream os;
    os << "frame " << to_string(ev.frame) << ": dispatch " << (ev.theorem ? to_string(ev.theorem->theorem) : "none")
       << ", oracle " << ev.oracle->component_count << " components";
    for (const auto& p : ev.oracle->pairs)
      os << ", lk(" << p.a << "," << p.b << ") = " << p.lk;
    d = os.str();
    bool ok = ev.theorem && ev.theorem->theorem == Theorem::Inapplicable && ev.oracle->component_count == 3 &&
              ev.oracle->pairs.size() == 3;
    for (const auto& p : ev.oracle->pairs)
      ok = ok && std::abs(p.lk) == 1;
    return ok;
  });

  criterion(10, "sweep n = 3 over the slope set, |e| <= 2: deterministic, strict T42/T43 agree with oracle", 60.0,
            [](std::string& d) {
              SweepOptions opt;
              opt.slopes = sweep_slopes();
              opt.max_n = 3;
              opt.max_e = 2;
              const auto strict = run_sweep(opt);
              const std::string first = to_json(make_report(opt, strict)).dump();
              const std::string second = to_json(make_report(opt, run_sweep(opt))).dump();
              bool ok = first == second && strict.targets == sweep_set().size();
              for (const auto& disc : strict.discrepancies)
                ok = ok && disc.method != "T42" && disc.method != "T43";

              opt.mode = TheoremMode::PaperLiteral;
              const auto literal = run_sweep(opt);
              const std::string third = to_json(make_report(opt, literal)).dump();
              ok = ok && third == to_json(make_report(opt, run_sweep(opt))).dump();

              std::ostringstream os;
              os << strict.targets << " targets, strict discrepancies " << strict.discrepancies.size()
                 << ", paper-literal discrepancies " << literal.discrepancies.size();
              d = os.str();
              return ok;
            });

  criterion(11, "conway <-> fraction round trip; flype output all-V and component preserving", 0, [](std::string& d) {
    for (Int p = -50; p <= 50; ++p)
      for (Int q = 1; q <= 50; ++q) {
        if (std::gcd(p, q) != 1)
          continue;
        const Fraction f = Fraction::reduced(p, q);
        const auto seq = conway_from_fraction(f);
        const auto ref = testsupport::ref_continued_fraction(seq.terms);
        if (!(fraction_from_conway(seq) == f) || ref != std::make_pair(p, q)) {
          d = f.str();
          return false;
        }
      }
    std::size_t flyped = 0;
    for (const auto& spec : sweep_set()) {
      if (h_census(spec).h != 0)
        continue;
      const auto out = flype_normalize(spec).spec;
      for (const auto& t : out.tangles)
        if (classify(t) != TangleClass::V) {
          d = render(spec) + " flypes to a non-V tangle";
          return false;
        }
      const auto before = orient_and_trace(build_montesinos(spec, Frame::Stacked)).component_count();
      const auto after = orient_and_trace(build_montesinos(out, Frame::Stacked)).component_count();
      if (before != after || trace_components(out).component_count != after) {
        d = render(spec) + " -> " + render(out);
        return false;
      }
      ++flyped;
    }
    d = std::to_string(flyped) + " H-free specs flyped";
    return true;
  });

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
