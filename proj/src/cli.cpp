#include "tanglelink/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanglelink/verify.hpp"

namespace tanglelink {

using nlohmann::json;

namespace {

struct Options {
  std::vector<std::string> targets;
  std::string method = "all";
  bool json_output = false;
  bool paper_literal = false;
  bool strict = false;
  std::string frame = "stacked";
  std::string batch;
  std::string out_file;
  Int max_p = 3;
  Int max_q = 3;
  std::size_t max_n = 3;
  Int max_e = 2;
  std::string slopes;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  std::string family = "montesinos";
};

Frame parse_frame(const std::string& name) {
  if (name == "stacked")
    return Frame::Stacked;
  if (name == "side-by-side")
    return Frame::SideBySide;
  throw Error(ErrorCode::InvalidSpec, "unknown frame '" + name + "'");
}

TheoremMode mode_of(const Options& o) { return o.paper_literal ? TheoremMode::PaperLiteral : TheoremMode::Strict; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Targets from the command line followed by the batch file, if any.
std::vector<std::pair<std::string, std::string>> collect_targets(const Options& o) {
  std::vector<std::pair<std::string, std::string>> out; // (origin, text)
  for (const auto& t : o.targets)
    out.emplace_back("argument", t);
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in)
      throw Error(ErrorCode::InvalidSpec, "cannot read batch file '" + o.batch + "'");
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
      if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      line = trim(line);
      if (!line.empty())
        out.emplace_back(o.batch + ":" + std::to_string(n), line);
    }
  }
  if (out.empty())
    throw Error(ErrorCode::InvalidSpec, "no targets given");
  return out;
}

Target parse_located(const std::pair<std::string, std::string>& t) {
  try {
    return parse_target(t.second);
  } catch (const ParseError& e) {
    throw Error(ErrorCode::ParseError, t.first + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), t.first + ": " + e.what());
  }
}

// ------------------------------------------------------------------- text

std::string components_text(std::size_t n) { return std::to_string(n) + (n == 1 ? " component" : " components"); }

std::string pair_label(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

void write_text(std::ostream& os, const RationalEvaluation& ev) {
  os << render(ev.spec) << '\n';
  if (ev.tuler)
    os << "  tuler:  " << *ev.tuler << '\n';
  if (ev.reduce)
    os << "  reduce: " << *ev.reduce << " (" << ev.trace->steps.size() << " steps)\n";
  if (ev.oracle)
    os << "  oracle: " << *ev.oracle << '\n';
  os << "  components: " << ev.components << '\n';
  if (ev.methods_run() >= 2)
    os << "  agreement: " << (ev.discrepancies.empty() ? "yes" : "no") << '\n';
}

void write_text(std::ostream& os, const MontesinosEvaluation& ev) {
  os << render(ev.spec) << '\n';
  os << "  frame: " << to_string(ev.frame) << ", sigma " << sigma(ev.spec) << '\n';
  os << "  components: " << ev.structure.component_count << '\n';
  if (ev.theorem) {
    os << "  theorem: " << to_string(ev.theorem->theorem) << '\n';
    for (const auto& pv : ev.theorem->pair_values) {
      os << "    pair " << pair_label(pv.a, pv.b) << ": ";
      if (pv.abs_lk)
        os << "|lk| = " << *pv.abs_lk << '\n';
      else
        os << "not covered\n";
    }
  } else if (ev.theorem_error) {
    os << "  theorem: " << *ev.theorem_error << '\n';
  }
  if (ev.oracle) {
    os << "  oracle: " << components_text(ev.oracle->component_count) << ", " << ev.oracle->crossings << " crossings\n";
    for (const auto& p : ev.oracle->pairs)
      os << "    pair " << pair_label(p.a, p.b) << ": lk = " << p.lk << '\n';
  }
  if (ev.methods_run() >= 2)
    os << "  agreement: " << (ev.discrepancies.empty() ? "yes" : "no") << '\n';
  for (const auto& n : ev.notes)
    os << "  note: " << n << '\n';
}

void write_discrepancies(std::ostream& os, const std::vector<Discrepancy>& ds) {
  for (const auto& d : ds) {
    os << "  discrepancy: " << d.input << ' ' << d.method;
    if (!d.pair.empty())
      os << " pair " << d.pair;
    os << ": formula " << d.formula << ", oracle " << d.oracle << '\n';
  }
}

// --------------------------------------------------------------- commands

struct Emitter {
  bool json_output;
  std::vector<json> items;
  std::ostringstream text;
  bool any_discrepancy = false;

  void add(const Report& r) {
    any_discrepancy = any_discrepancy || !r.discrepancies.empty();
    items.push_back(to_json(r));
  }

  std::string finish(bool force_array) const {
    if (!json_output)
      return text.str();
    if (items.size() == 1 && !force_array)
      return items.front().dump(2) + "\n";
    return json(items).dump(2) + "\n";
  }
};

int cmd_lk(const Options& o, Emitter& em, bool verifying) {
  const Method method = verifying ? Method::All : parse_method(o.method);
  const Frame frame = parse_frame(o.frame);
  for (const auto& t : collect_targets(o)) {
    const Target target = parse_located(t);
    if (const auto* r = std::get_if<RationalLinkSpec>(&target)) {
      const auto ev = evaluate_rational(*r, method);
      em.add(make_report(ev));
      if (!em.json_output) {
        write_text(em.text, ev);
        write_discrepancies(em.text, ev.discrepancies);
      }
    } else {
      const auto& m = std::get<MontesinosSpec>(target);
      const auto ev = evaluate_montesinos(m, method, mode_of(o), frame);
      if (method == Method::Theorem && ev.theorem_error && ev.theorem_error->rfind("NotMontesinosScope", 0) == 0)
        throw Error(ErrorCode::NotMontesinosScope, t.first + ": " + *ev.theorem_error);
      em.add(make_report(ev));
      if (!em.json_output) {
        write_text(em.text, ev);
        write_discrepancies(em.text, ev.discrepancies);
      }
    }
  }
  return em.any_discrepancy ? 2 : 0;
}

int cmd_classify(const Options& o, Emitter& em) {
  for (const auto& t : collect_targets(o)) {
    Fraction f = Fraction::integer(0);
    std::optional<ConwaySequence> seq;
    try {
      if (!t.second.empty() && t.second.front() == '[') {
        seq = parse_conway(t.second);
        f = fraction_from_conway(*seq);
      } else {
        f = parse_slope(t.second);
      }
    } catch (const ParseError& e) {
      throw Error(ErrorCode::ParseError, t.first + ": " + e.what());
    }
    const TangleClass c = classify(f);
    const ConwaySequence conway = seq ? *seq : conway_from_fraction(f);
    Report r;
    r.input = t.second;
    r.methods = {"classify"};
    r.values = {{"fraction", f.str()}, {"class", to_string(c)}, {"conway", conway.terms}};
    r.components = (f.p() % 2 == 0) ? 2 : 1;
    r.notes.push_back("numerator closure components");
    em.add(r);
    if (!em.json_output)
      em.text << f << ' ' << to_string(c) << ' ' << render(conway) << '\n';
  }
  return 0;
}

int cmd_components(const Options& o, Emitter& em) {
  const Frame frame = parse_frame(o.frame);
  for (const auto& t : collect_targets(o)) {
    if (!t.second.empty() && (t.second.front() == 'M' || t.second.front() == 'm')) {
      const MontesinosSpec spec = std::get<MontesinosSpec>(parse_located(t));
      const auto s = trace_components(spec, frame);
      const auto c = h_census(spec);
      Report r;
      r.input = render(spec);
      r.methods = {"trace"};
      json strands = json::array();
      for (const auto& a : s.strands)
        strands.push_back(a);
      r.values = {{"census", {{"V", c.v}, {"D", c.d}, {"H", c.h}}},
                  {"h_indices", c.h_indices},
                  {"strands", strands},
                  {"twist_class", to_string(twist_class(spec.e, frame))},
                  {"frame", to_string(frame)}};
      r.components = s.component_count;
      em.add(r);
      if (!em.json_output) {
        em.text << render(spec) << ": " << components_text(s.component_count) << ", census V:" << c.v << " D:" << c.d
                << " H:" << c.h << '\n';
        for (std::size_t k = 0; k + 1 < s.strands.size(); ++k)
          em.text << "  tangle " << k + 1 << " (" << to_string(classify(spec.tangles[k])) << "): components "
                  << s.strands[k][0] << ", " << s.strands[k][1] << '\n';
        em.text << "  twist region: components " << s.twist_arcs()[0] << ", " << s.twist_arcs()[1] << '\n';
      }
    } else {
      Fraction f = Fraction::integer(0);
      try {
        f = parse_slope(t.second);
      } catch (const ParseError& e) {
        throw Error(ErrorCode::ParseError, t.first + ": " + e.what());
      }
      const Diagram d = rational_link_diagram(f);
      Report r;
      r.input = "R(" + f.str() + ")";
      r.methods = {"oracle"};
      r.values = {{"class", to_string(classify(f))}, {"crossings", d.crossing_count()}};
      r.components = d.component_count();
      em.add(r);
      if (!em.json_output)
        em.text << "R(" << f << "): " << components_text(d.component_count()) << '\n';
    }
  }
  return 0;
}

int cmd_explain(const Options& o, Emitter& em) {
  for (const auto& t : collect_targets(o)) {
    const Target target = parse_located(t);
    const auto* spec = std::get_if<RationalLinkSpec>(&target);
    if (!spec)
      throw Error(ErrorCode::InvalidSpec, t.first + ": explain takes a rational link R(p/q)");
    const auto ev = evaluate_rational(*spec, Method::Reduce);
    Report r = make_report(ev);
    r.values["chain"] = render_chain(*ev.trace);
    em.add(r);
    if (!em.json_output)
      em.text << render_chain(*ev.trace);
  }
  return 0;
}

std::vector<Fraction> parse_slope_list(const std::string& text) {
  std::vector<Fraction> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty())
      out.push_back(parse_fraction(trim(item)));
  return out;
}

int cmd_sweep(const Options& o, Emitter& em) {
  SweepOptions so;
  if (o.family == "rational")
    so.family = Family::Rational;
  else if (o.family != "montesinos")
    throw Error(ErrorCode::InvalidSpec, "unknown family '" + o.family + "'");
  if (o.max_p < 0 || o.max_q < 1 || o.max_e < 0)
    throw Error(ErrorCode::InvalidSpec, "sweep bounds must be non-negative and --max-q >= 1");
  so.max_p = o.max_p;
  so.max_q = o.max_q;
  so.max_n = o.max_n;
  so.max_e = o.max_e;
  so.slopes = parse_slope_list(o.slopes);
  so.seed = o.seed;
  so.samples = o.samples;
  so.mode = mode_of(o);
  so.frame = parse_frame(o.frame);

  const SweepSummary s = run_sweep(so);
  const Report r = make_report(so, s);
  em.add(r);
  if (!em.json_output) {
    em.text << "targets: " << s.targets << '\n';
    for (const auto& [k, v] : s.dispatch)
      em.text << "dispatch " << k << ": " << v << '\n';
    for (const auto& [k, v] : s.agreement)
      em.text << "pairs " << k << ": " << v << '\n';
    em.text << "not covered pairs: " << s.not_covered_pairs << '\n';
    em.text << "parity violations: " << s.parity_violations << '\n';
    for (const auto& [k, v] : s.components)
      em.text << "components " << k << ": " << v << '\n';
    em.text << "discrepancies: " << s.discrepancies.size() << '\n';
    write_discrepancies(em.text, s.discrepancies);
  }
  return s.discrepancies.empty() ? 0 : 2;
}

void add_common(CLI::App* sub, Options& o) {
  // Targets are collected from the unmatched arguments so that bracketed
  // Conway sequences and negative fractions reach the parser unsplit.
  sub->allow_extras();
  sub->footer("Targets: R(p/q), p/q, M(p1/q1,...,pn/qn|e) or [a1,...,an]");
  sub->add_flag("--json", o.json_output, "JSON output");
  sub->add_option("--batch", o.batch, "file with one target per line, # comments");
  sub->add_option("--out", o.out_file, "write the report to FILE");
}

void add_theorem_flags(CLI::App* sub, Options& o) {
  auto* strict = sub->add_flag("--strict", o.strict, "only count theorem pairs whose hypotheses fully hold (default)");
  auto* literal = sub->add_flag("--paper-literal", o.paper_literal, "apply theorem formulas as literally stated");
  strict->excludes(literal);
  sub->add_option("--frame", o.frame, "stacked (default) or side-by-side")
      ->check(CLI::IsMember({"stacked", "side-by-side"}));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linking numbers of rational and Montesinos links", "tanglelink"};
  app.require_subcommand(1);
  Options o;

  auto* lk = app.add_subcommand("lk", "linking numbers by the chosen method(s)");
  add_common(lk, o);
  lk->add_option("--method", o.method, "tuler, reduce, oracle, theorem or all")
      ->check(CLI::IsMember({"tuler", "reduce", "oracle", "theorem", "all"}));
  add_theorem_flags(lk, o);

  auto* classify_cmd = app.add_subcommand("classify", "V/D/H class of a tangle fraction or Conway sequence");
  add_common(classify_cmd, o);

  auto* components = app.add_subcommand("components", "component count and class census");
  add_common(components, o);
  components->add_option("--frame", o.frame, "stacked (default) or side-by-side")
      ->check(CLI::IsMember({"stacked", "side-by-side"}));

  auto* explain = app.add_subcommand("explain", "reduction chain for R(p/q)");
  add_common(explain, o);

  auto* verify = app.add_subcommand("verify", "all methods against the oracle; exit 2 on discrepancies");
  add_common(verify, o);
  add_theorem_flags(verify, o);

  auto* sweep = app.add_subcommand("sweep", "enumerate targets and compare formulas with the oracle");
  sweep->add_flag("--json", o.json_output, "JSON output");
  sweep->add_option("--out", o.out_file, "write the report to FILE");
  sweep->add_option("--family", o.family, "montesinos (default) or rational")
      ->check(CLI::IsMember({"montesinos", "rational"}));
  sweep->add_option("--max-p", o.max_p, "largest |p|");
  sweep->add_option("--max-q", o.max_q, "largest q");
  sweep->add_option("--max-n", o.max_n, "largest number of tangles (from 3)");
  sweep->add_option("--max-e", o.max_e, "largest |e|");
  sweep->add_option("--slopes", o.slopes, "comma-separated slope list replacing the p/q box");
  sweep->add_option("--seed", o.seed, "sample randomly with this seed instead of enumerating");
  sweep->add_option("--samples", o.samples, "number of random samples with --seed");
  add_theorem_flags(sweep, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  for (auto* sub : {lk, classify_cmd, components, explain, verify}) {
    if (!sub->parsed())
      continue;
    o.targets = sub->remaining();
    for (const auto& t : o.targets) {
      if (t.rfind("--", 0) == 0) {
        err << "error: unknown option " << t << '\n';
        return 1;
      }
    }
  }

  Emitter em{o.json_output, {}, {}, false};
  int code = 0;
  try {
    if (lk->parsed())
      code = cmd_lk(o, em, false);
    else if (verify->parsed())
      code = cmd_lk(o, em, true);
    else if (classify_cmd->parsed())
      code = cmd_classify(o, em);
    else if (components->parsed())
      code = cmd_components(o, em);
    else if (explain->parsed())
      code = cmd_explain(o, em);
    else if (sweep->parsed())
      code = cmd_sweep(o, em);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return 1;
  }

  const bool batch = !o.batch.empty() || o.targets.size() > 1;
  const std::string text = em.finish(batch);
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file);
    if (!f) {
      err << "error: cannot write '" << o.out_file << "'\n";
      return 1;
    }
    f << text;
  }
  return code;
}

} // namespace tanglelink
