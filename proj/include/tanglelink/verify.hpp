#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanglelink/diagram.hpp"
#include "tanglelink/montesinos.hpp"
#include "tanglelink/notation.hpp"
#include "tanglelink/rational_linking.hpp"

namespace tanglelink {

enum class Method { Tuler, Reduce, Oracle, Theorem, All };

const char* to_string(Method m) noexcept;
Method parse_method(std::string_view name);

/// Disagreement between a formula and the diagram oracle.
struct Discrepancy {
  std::string input;
  std::string method;  // formula side: tuler, reduce, theorem or components
  std::string pair;    // "0-1" for Montesinos pairs, empty otherwise
  std::string formula; // formula value as text
  std::string oracle;  // oracle value as text
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------- rational

struct RationalEvaluation {
  RationalLinkSpec spec;
  std::optional<Int> tuler;
  std::optional<Int> reduce;
  std::optional<ReductionTrace> trace;
  std::optional<Int> oracle;
  std::size_t components = 2;
  std::vector<Discrepancy> discrepancies;

  std::size_t methods_run() const;
};

RationalEvaluation evaluate_rational(const RationalLinkSpec& spec, Method method = Method::All);

// -------------------------------------------------------------- montesinos

struct OraclePair {
  int a = 0;
  int b = 0;
  Int lk = 0;
};

/// Oracle values with components relabelled to match trace_components.
struct MontesinosOracle {
  std::size_t component_count = 0;
  std::vector<OraclePair> pairs; // every a < b
  bool labels_consistent = true; // endpoint walk and diagram induce the same partition
  std::size_t crossings = 0;

  std::optional<Int> linking(int a, int b) const;
};

MontesinosOracle montesinos_oracle(const MontesinosSpec& spec, Frame frame,
                                   const ComponentStructure& structure);

struct MontesinosEvaluation {
  MontesinosSpec spec;
  Frame frame = Frame::Stacked;
  TheoremMode mode = TheoremMode::Strict;
  ComponentStructure structure;
  ClassCensus census;
  std::optional<TheoremReport> theorem;
  std::optional<std::string> theorem_error; // e.g. ParityViolation text
  std::optional<MontesinosOracle> oracle;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;

  std::size_t methods_run() const;
};

MontesinosEvaluation evaluate_montesinos(const MontesinosSpec& spec, Method method = Method::All,
                                         TheoremMode mode = TheoremMode::Strict, Frame frame = Frame::Stacked);

// ------------------------------------------------------------------ sweeps

enum class Family { Rational, Montesinos };

struct SweepOptions {
  Family family = Family::Montesinos;
  Int max_p = 3;
  Int max_q = 3;
  std::size_t max_n = 3;
  Int max_e = 2;
  std::vector<Fraction> slopes; // overrides the p/q box when non-empty
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  TheoremMode mode = TheoremMode::Strict;
  Frame frame = Frame::Stacked;
};

struct SweepSummary {
  std::size_t targets = 0;
  std::map<std::string, std::size_t> dispatch;  // theorem name -> count
  std::map<std::string, std::size_t> agreement; // "<theorem>:agree" / "<theorem>:disagree" pair counts
  std::size_t not_covered_pairs = 0;
  std::size_t parity_violations = 0;
  std::map<std::size_t, std::size_t> components; // component count histogram
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

/// Slopes of the p/q box: |p| <= max_p, 1 <= q <= max_q, reduced, sorted by (q, p).
std::vector<Fraction> slope_box(Int max_p, Int max_q);

SweepSummary run_sweep(const SweepOptions& options);

// ----------------------------------------------------------------- reports

/// Key set is fixed: input, methods, values, components, agreement,
/// discrepancies, notes.
struct Report {
  nlohmann::json input;
  std::vector<std::string> methods;
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json components;
  std::optional<bool> agreement;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

Report make_report(const RationalEvaluation& ev);
Report make_report(const MontesinosEvaluation& ev);
Report make_report(const SweepOptions& options, const SweepSummary& summary);

nlohmann::json to_json(const Discrepancy& d);
nlohmann::json to_json(const Report& r);

} // namespace tanglelink
