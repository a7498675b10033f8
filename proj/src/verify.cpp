#include "tanglelink/verify.hpp"

#include <algorithm>
#include <random>

namespace tanglelink {

using nlohmann::json;

const char* to_string(Method m) noexcept {
  switch (m) {
  case Method::Tuler: return "tuler";
  case Method::Reduce: return "reduce";
  case Method::Oracle: return "oracle";
  case Method::Theorem: return "theorem";
  case Method::All: return "all";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Tuler, Method::Reduce, Method::Oracle, Method::Theorem, Method::All})
    if (name == to_string(m))
      return m;
  throw Error(ErrorCode::InvalidSpec, "unknown method '" + std::string(name) + "'");
}

namespace {

bool wants(Method requested, Method m) { return requested == Method::All || requested == m; }

std::string pair_name(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

} // namespace

// ---------------------------------------------------------------- rational

std::size_t RationalEvaluation::methods_run() const {
  return (tuler ? 1 : 0) + (reduce ? 1 : 0) + (oracle ? 1 : 0);
}

RationalEvaluation evaluate_rational(const RationalLinkSpec& spec, Method method) {
  if (method == Method::Theorem)
    throw Error(ErrorCode::InvalidSpec, "method 'theorem' applies only to Montesinos targets");

  RationalEvaluation ev{spec, {}, {}, {}, {}, 2, {}};
  const std::string input = render(spec);
  if (wants(method, Method::Tuler))
    ev.tuler = tuler_linking(spec);
  if (wants(method, Method::Reduce)) {
    auto r = reduction_linking(spec);
    ev.reduce = r.value;
    ev.trace = std::move(r.trace);
  }
  if (wants(method, Method::Oracle)) {
    const Diagram d = rational_link_diagram(spec.slope());
    ev.components = d.component_count();
    ev.oracle = pairwise_linking(d).linking(0, 1);
  }

  auto check = [&](const char* name, const std::optional<Int>& value, const std::optional<Int>& reference,
                   const char* reference_name) {
    if (!value || !reference || *value == *reference)
      return;
    Discrepancy d{input, name, "", std::to_string(*value), std::to_string(*reference), {}};
    if (std::string(reference_name) != "oracle")
      d.notes.push_back(std::string("compared against ") + reference_name + "; oracle not run");
    ev.discrepancies.push_back(std::move(d));
  };
  if (ev.oracle) {
    check("tuler", ev.tuler, ev.oracle, "oracle");
    check("reduce", ev.reduce, ev.oracle, "oracle");
  } else {
    check("reduce", ev.reduce, ev.tuler, "tuler");
  }
  return ev;
}

// -------------------------------------------------------------- montesinos

std::optional<Int> MontesinosOracle::linking(int a, int b) const {
  for (const auto& p : pairs)
    if ((p.a == a && p.b == b) || (p.a == b && p.b == a))
      return p.lk;
  return std::nullopt;
}

MontesinosOracle montesinos_oracle(const MontesinosSpec& spec, Frame frame, const ComponentStructure& structure) {
  const Diagram d = orient_and_trace(build_montesinos(spec, frame));
  const PairwiseLinking pl = pairwise_linking(d);

  MontesinosOracle out;
  out.component_count = d.component_count();
  out.crossings = d.crossing_count();

  // trace label -> diagram label, and the reverse, from shared slot corners.
  std::vector<int> to_diagram(structure.component_count, -1);
  std::vector<int> to_trace(d.component_count(), -1);
  const auto& corner_arcs = d.slot_corner_arcs();
  for (std::size_t s = 0; s < corner_arcs.size() && s < structure.corners.size(); ++s) {
    for (std::size_t c = 0; c < 4; ++c) {
      const int t = structure.corners[s][c];
      const int o = d.component_of(corner_arcs[s][c]);
      if (to_diagram[static_cast<std::size_t>(t)] < 0)
        to_diagram[static_cast<std::size_t>(t)] = o;
      if (to_trace[static_cast<std::size_t>(o)] < 0)
        to_trace[static_cast<std::size_t>(o)] = t;
      if (to_diagram[static_cast<std::size_t>(t)] != o || to_trace[static_cast<std::size_t>(o)] != t)
        out.labels_consistent = false;
    }
  }
  if (structure.component_count != d.component_count())
    out.labels_consistent = false;

  const int n = static_cast<int>(d.component_count());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (out.labels_consistent) {
        const auto oa = static_cast<std::size_t>(to_diagram[static_cast<std::size_t>(a)]);
        const auto ob = static_cast<std::size_t>(to_diagram[static_cast<std::size_t>(b)]);
        out.pairs.push_back({a, b, pl.linking(oa, ob)});
      } else {
        out.pairs.push_back({a, b, pl.linking(static_cast<std::size_t>(a), static_cast<std::size_t>(b))});
      }
    }
  }
  return out;
}

std::size_t MontesinosEvaluation::methods_run() const { return (theorem ? 1 : 0) + (oracle ? 1 : 0); }

MontesinosEvaluation evaluate_montesinos(const MontesinosSpec& spec, Method method, TheoremMode mode, Frame frame) {
  if (method == Method::Tuler || method == Method::Reduce)
    throw Error(ErrorCode::InvalidSpec, std::string("method '") + to_string(method) +
                                            "' applies only to rational targets");
  MontesinosEvaluation ev;
  ev.spec = spec;
  ev.frame = frame;
  ev.mode = mode;
  ev.structure = trace_components(spec, frame);
  ev.census = h_census(spec);
  const std::string input = render(spec);

  if (wants(method, Method::Theorem)) {
    try {
      ev.theorem = linking_by_theorem(spec, mode, frame);
      for (const auto& note : ev.theorem->hypothesis_notes)
        ev.notes.push_back(note);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ParityViolation && err.code() != ErrorCode::NotMontesinosScope)
        throw;
      ev.theorem_error = std::string(to_string(err.code())) + ": " + err.what();
      ev.notes.push_back(*ev.theorem_error);
    }
  }
  if (wants(method, Method::Oracle))
    ev.oracle = montesinos_oracle(spec, frame, ev.structure);

  if (ev.oracle) {
    if (!ev.oracle->labels_consistent || ev.oracle->component_count != ev.structure.component_count) {
      ev.discrepancies.push_back({input, "components", "", std::to_string(ev.structure.component_count),
                                  std::to_string(ev.oracle->component_count),
                                  {"endpoint walk and diagram disagree on components"}});
    } else if (ev.theorem) {
      for (const auto& pv : ev.theorem->pair_values) {
        if (!pv.abs_lk)
          continue;
        const auto o = ev.oracle->linking(pv.a, pv.b);
        const Int oracle_abs = o ? checked::abs(*o) : 0;
        if (oracle_abs != *pv.abs_lk) {
          ev.discrepancies.push_back({input, to_string(ev.theorem->theorem), pair_name(pv.a, pv.b),
                                      std::to_string(*pv.abs_lk), std::to_string(oracle_abs),
                                      ev.theorem->hypothesis_notes});
        }
      }
    }
  }
  return ev;
}

// ------------------------------------------------------------------ sweeps

std::vector<Fraction> slope_box(Int max_p, Int max_q) {
  std::vector<Fraction> out;
  for (Int q = 1; q <= max_q; ++q)
    for (Int p = -max_p; p <= max_p; ++p)
      if (checked::gcd(p, q) == 1)
        out.push_back(Fraction::reduced(p, q));
  return out;
}

namespace {

void tally(SweepSummary& summary, const MontesinosEvaluation& ev) {
  ++summary.targets;
  if (ev.oracle)
    ++summary.components[ev.oracle->component_count];
  if (ev.theorem_error) {
    ++summary.dispatch["error"];
    if (ev.theorem_error->rfind("ParityViolation", 0) == 0)
      ++summary.parity_violations;
  }
  if (ev.theorem) {
    const std::string name = to_string(ev.theorem->theorem);
    ++summary.dispatch[name];
    for (const auto& pv : ev.theorem->pair_values) {
      if (!pv.abs_lk) {
        ++summary.not_covered_pairs;
        continue;
      }
      const auto o = ev.oracle ? ev.oracle->linking(pv.a, pv.b) : std::nullopt;
      const bool agree = ev.oracle && ev.oracle->labels_consistent && checked::abs(o.value_or(0)) == *pv.abs_lk;
      ++summary.agreement[name + (agree ? ":agree" : ":disagree")];
    }
  }
  summary.discrepancies.insert(summary.discrepancies.end(), ev.discrepancies.begin(), ev.discrepancies.end());
}

void sweep_rational(const SweepOptions& o, SweepSummary& summary) {
  auto visit = [&](Int p, Int q) {
    const auto ev = evaluate_rational(RationalLinkSpec::from_pair(p, q), Method::All);
    ++summary.targets;
    ++summary.components[ev.components];
    const bool agree = ev.discrepancies.empty();
    ++summary.agreement[std::string("rational") + (agree ? ":agree" : ":disagree")];
    summary.discrepancies.insert(summary.discrepancies.end(), ev.discrepancies.begin(), ev.discrepancies.end());
  };
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::uniform_int_distribution<Int> pd(-o.max_p / 2, o.max_p / 2);
    std::uniform_int_distribution<Int> qd(1, std::max<Int>(1, o.max_q));
    for (std::size_t i = 0; i < o.samples;) {
      const Int p = 2 * pd(rng);
      const Int q = qd(rng);
      if (checked::gcd(p, q) != 1)
        continue;
      visit(p, q);
      ++i;
    }
    return;
  }
  for (Int p = -o.max_p; p <= o.max_p; ++p) {
    if (p % 2 != 0)
      continue;
    for (Int q = 1; q <= o.max_q; ++q)
      if (checked::gcd(p, q) == 1)
        visit(p, q);
  }
}

void sweep_montesinos(const SweepOptions& o, SweepSummary& summary) {
  const std::vector<Fraction> slopes = o.slopes.empty() ? slope_box(o.max_p, o.max_q) : o.slopes;
  if (slopes.empty())
    throw Error(ErrorCode::InvalidSpec, "sweep has no slopes");
  const std::size_t min_n = 3;
  if (o.max_n < min_n)
    throw Error(ErrorCode::InvalidSpec, "sweep needs --max-n >= 3");

  auto visit = [&](const MontesinosSpec& spec) {
    tally(summary, evaluate_montesinos(spec, Method::All, o.mode, o.frame));
  };

  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::uniform_int_distribution<std::size_t> nd(min_n, o.max_n);
    std::uniform_int_distribution<std::size_t> sd(0, slopes.size() - 1);
    std::uniform_int_distribution<Int> ed(-o.max_e, o.max_e);
    for (std::size_t i = 0; i < o.samples; ++i) {
      MontesinosSpec spec;
      const std::size_t n = nd(rng);
      for (std::size_t k = 0; k < n; ++k)
        spec.tangles.push_back(slopes[sd(rng)]);
      spec.e = ed(rng);
      visit(spec);
    }
    return;
  }

  for (std::size_t n = min_n; n <= o.max_n; ++n) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      MontesinosSpec spec;
      for (std::size_t k : idx)
        spec.tangles.push_back(slopes[k]);
      for (Int e = -o.max_e; e <= o.max_e; ++e) {
        spec.e = e;
        visit(spec);
      }
      // Odometer over slope indices, last position fastest.
      std::size_t pos = n;
      while (pos > 0 && ++idx[pos - 1] == slopes.size())
        idx[--pos] = 0;
      if (pos == 0)
        break;
    }
  }
}

} // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  SweepSummary summary;
  if (options.family == Family::Rational)
    sweep_rational(options, summary);
  else
    sweep_montesinos(options, summary);
  return summary;
}

// ----------------------------------------------------------------- reports

json to_json(const Discrepancy& d) {
  json j = {{"input", d.input}, {"method", d.method}, {"formula", d.formula}, {"oracle", d.oracle},
            {"notes", d.notes}};
  if (!d.pair.empty())
    j["pair"] = d.pair;
  return j;
}

json to_json(const Report& r) {
  json discrepancies = json::array();
  for (const auto& d : r.discrepancies)
    discrepancies.push_back(to_json(d));
  json j;
  j["input"] = r.input;
  j["methods"] = r.methods;
  j["values"] = r.values;
  j["components"] = r.components;
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  j["discrepancies"] = std::move(discrepancies);
  j["notes"] = r.notes;
  return j;
}

namespace {

std::optional<bool> verdict(std::size_t methods, const std::vector<Discrepancy>& discrepancies) {
  if (methods < 2)
    return std::nullopt;
  return discrepancies.empty();
}

json trace_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"rule", to_string(s.rule)},
                     {"before", s.before.str()},
                     {"after", s.after.str()},
                     {"delta", s.delta},
                     {"sign_flip", s.sign_flip}});
  return {{"steps", steps}, {"result", trace.result}};
}

json census_json(const ClassCensus& c) {
  return {{"V", c.v}, {"D", c.d}, {"H", c.h}, {"h_indices", c.h_indices}};
}

} // namespace

Report make_report(const RationalEvaluation& ev) {
  Report r;
  r.input = render(ev.spec);
  if (ev.tuler) {
    r.methods.push_back("tuler");
    r.values["tuler"] = *ev.tuler;
  }
  if (ev.reduce) {
    r.methods.push_back("reduce");
    r.values["reduce"] = *ev.reduce;
    r.values["trace"] = trace_json(*ev.trace);
  }
  if (ev.oracle) {
    r.methods.push_back("oracle");
    r.values["oracle"] = *ev.oracle;
  }
  r.components = ev.components;
  r.agreement = verdict(ev.methods_run(), ev.discrepancies);
  r.discrepancies = ev.discrepancies;
  return r;
}

Report make_report(const MontesinosEvaluation& ev) {
  Report r;
  r.input = render(ev.spec);
  r.values["frame"] = to_string(ev.frame);
  r.values["mode"] = ev.mode == TheoremMode::Strict ? "strict" : "paper-literal";
  r.values["sigma"] = sigma(ev.spec);
  r.values["census"] = census_json(ev.census);
  if (ev.theorem) {
    r.methods.push_back("theorem");
    json pairs = json::array();
    for (const auto& pv : ev.theorem->pair_values)
      pairs.push_back({{"components", {pv.a, pv.b}}, {"abs_lk", pv.abs_lk ? json(*pv.abs_lk) : json(nullptr)}});
    r.values["theorem"] = {{"theorem", to_string(ev.theorem->theorem)}, {"pairs", pairs}};
  } else if (ev.theorem_error) {
    r.values["theorem"] = {{"theorem", "error"}, {"error", *ev.theorem_error}};
  }
  if (ev.oracle) {
    r.methods.push_back("oracle");
    json pairs = json::array();
    for (const auto& p : ev.oracle->pairs)
      pairs.push_back({{"components", {p.a, p.b}}, {"lk", p.lk}});
    r.values["oracle"] = {{"pairs", pairs}, {"crossings", ev.oracle->crossings},
                          {"components", ev.oracle->component_count}};
  }
  r.components = ev.structure.component_count;
  r.agreement = verdict(ev.methods_run(), ev.discrepancies);
  r.discrepancies = ev.discrepancies;
  r.notes = ev.notes;
  return r;
}

Report make_report(const SweepOptions& o, const SweepSummary& s) {
  Report r;
  json slopes = json::array();
  for (const auto& f : o.slopes)
    slopes.push_back(f.str());
  r.input = {{"family", o.family == Family::Rational ? "rational" : "montesinos"},
             {"max_p", o.max_p},
             {"max_q", o.max_q},
             {"max_n", o.max_n},
             {"max_e", o.max_e},
             {"slopes", slopes},
             {"seed", o.seed ? json(*o.seed) : json(nullptr)},
             {"samples", o.seed ? json(o.samples) : json(nullptr)},
             {"mode", o.mode == TheoremMode::Strict ? "strict" : "paper-literal"},
             {"frame", to_string(o.frame)}};
  if (o.family == Family::Rational)
    r.methods = {"tuler", "reduce", "oracle"};
  else
    r.methods = {"theorem", "oracle"};
  r.values = {{"targets", s.targets},
              {"dispatch", s.dispatch},
              {"pairs", s.agreement},
              {"not_covered_pairs", s.not_covered_pairs},
              {"parity_violations", s.parity_violations}};
  json hist = json::object();
  for (const auto& [count, n] : s.components)
    hist[std::to_string(count)] = n;
  r.components = hist;
  r.agreement = s.discrepancies.empty();
  r.discrepancies = s.discrepancies;
  r.notes = s.notes;
  return r;
}

} // namespace tanglelink
