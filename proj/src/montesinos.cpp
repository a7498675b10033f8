#include "tanglelink/montesinos.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tanglelink/rational_linking.hpp"

namespace tanglelink {

const char* to_string(Frame f) noexcept {
  switch (f) {
  case Frame::Stacked: return "stacked";
  case Frame::SideBySide: return "side-by-side";
  }
  return "?";
}

const char* to_string(Theorem t) noexcept {
  switch (t) {
  case Theorem::T41: return "T41";
  case Theorem::T42: return "T42";
  case Theorem::T43: return "T43";
  case Theorem::Inapplicable: return "inapplicable";
  }
  return "?";
}

Int sigma(const MontesinosSpec& spec) {
  Int s = spec.e;
  for (const auto& f : spec.tangles)
    s = checked::add(s, f.q());
  return s;
}

ClassCensus h_census(const MontesinosSpec& spec) {
  ClassCensus c;
  for (std::size_t i = 0; i < spec.tangles.size(); ++i) {
    switch (classify(spec.tangles[i])) {
    case TangleClass::V: ++c.v; break;
    case TangleClass::D: ++c.d; break;
    case TangleClass::H:
      ++c.h;
      c.h_indices.push_back(i);
      break;
    }
  }
  return c;
}

TangleClass twist_class(Int e, Frame frame) noexcept {
  if (e % 2 != 0)
    return TangleClass::D;
  return frame == Frame::Stacked ? TangleClass::V : TangleClass::H;
}

namespace {

enum : std::size_t { NW = 0, NE = 1, SW = 2, SE = 3 };

// Corner pairs joined inside a tangle of the given class.
std::array<std::array<std::size_t, 2>, 2> internal_arcs(TangleClass c) {
  switch (c) {
  case TangleClass::V: return {{{NW, SW}, {NE, SE}}};
  case TangleClass::D: return {{{NW, SE}, {NE, SW}}};
  case TangleClass::H: return {{{NW, NE}, {SW, SE}}};
  }
  return {};
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<TangleClass> slot_classes(const MontesinosSpec& spec, Frame frame) {
  std::vector<TangleClass> classes;
  for (const auto& f : spec.tangles)
    classes.push_back(classify(f));
  classes.push_back(twist_class(spec.e, frame));
  return classes;
}

void require_scope(const MontesinosSpec& spec) {
  if (spec.tangles.size() < 3)
    throw Error(ErrorCode::NotMontesinosScope,
                "theorems need at least 3 tangles; with " + std::to_string(spec.tangles.size()) +
                    " the link is 2-bridge");
}

bool same_pair(const std::array<int, 2>& s, int a, int b) {
  return (s[0] == a && s[1] == b) || (s[0] == b && s[1] == a);
}

Int rational_lk(const Fraction& f) { return tuler_linking(RationalLinkSpec(f)); }

} // namespace

ComponentStructure trace_components(const MontesinosSpec& spec, Frame frame) {
  const auto classes = slot_classes(spec, frame);
  const std::size_t slots = classes.size();
  DisjointSets sets(4 * slots);
  auto node = [](std::size_t slot, std::size_t corner) { return 4 * slot + corner; };

  for (std::size_t s = 0; s < slots; ++s)
    for (const auto& arc : internal_arcs(classes[s]))
      sets.unite(node(s, arc[0]), node(s, arc[1]));

  for (std::size_t s = 0; s < slots; ++s) {
    const std::size_t t = (s + 1) % slots;
    if (frame == Frame::Stacked) {
      sets.unite(node(s, SW), node(t, NW));
      sets.unite(node(s, SE), node(t, NE));
    } else {
      sets.unite(node(s, NE), node(t, NW));
      sets.unite(node(s, SE), node(t, SW));
    }
  }

  ComponentStructure out;
  std::vector<int> label(4 * slots, -1);
  int next = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    std::array<int, 4> corner_ids{};
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t root = sets.find(node(s, c));
      if (label[root] < 0)
        label[root] = next++;
      corner_ids[c] = label[root];
    }
    out.corners.push_back(corner_ids);
    const std::size_t other = classes[s] == TangleClass::H ? SW : NE;
    out.strands.push_back({corner_ids[NW], corner_ids[other]});
  }
  out.component_count = static_cast<std::size_t>(next);
  return out;
}

FlypeResult flype_normalize(const MontesinosSpec& spec) {
  FlypeResult out;
  out.spec.e = spec.e;
  for (std::size_t i = 0; i < spec.tangles.size(); ++i) {
    const Fraction& f = spec.tangles[i];
    if (classify(f) == TangleClass::H)
      throw Error(ErrorCode::HasHTangle, "tangle " + std::to_string(i + 1) + " (" + f.str() + ") is an H-tangle");
    // q + p = 0 only for -1/1, whose forward flype is the infinity tangle;
    // flyping the other way gives the V-tangle -1/2 instead.
    Int ei = (f.q() % 2 != 0) ? 1 : 0;
    if (ei == 1 && checked::add(f.q(), f.p()) == 0)
      ei = -1;
    out.e_list.push_back(ei);
    out.spec.tangles.push_back(Fraction::make(f.p(), checked::add(f.q(), checked::mul(ei, f.p()))));
    out.spec.e = checked::sub(out.spec.e, ei);
  }
  return out;
}

const PairValue* TheoremReport::find(int a, int b) const {
  for (const auto& pv : pair_values)
    if ((pv.a == a && pv.b == b) || (pv.a == b && pv.b == a))
      return &pv;
  return nullptr;
}

TheoremReport linking_by_theorem(const MontesinosSpec& spec, TheoremMode mode, Frame frame) {
  require_scope(spec);
  const auto census = h_census(spec);
  const auto structure = trace_components(spec, frame);
  const auto classes = slot_classes(spec, frame);
  const std::size_t slots = classes.size();
  const bool strict = mode == TheoremMode::Strict;

  TheoremReport report;
  report.sigma = sigma(spec);
  report.component_count = structure.component_count;

  // Non-H slots that carry crossings between components a and b.
  auto shared_non_h = [&](int a, int b) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < slots; ++s) {
      if (classes[s] == TangleClass::H)
        continue;
      if (s == slots - 1 && spec.e == 0)
        continue;
      if (same_pair(structure.strands[s], a, b))
        out.push_back(s);
    }
    return out;
  };
  auto slot_name = [&](std::size_t s) {
    return s == slots - 1 ? std::string("the twist region") : "tangle " + std::to_string(s + 1);
  };

  const std::size_t h = census.h;
  const int count = static_cast<int>(structure.component_count);

  if (h >= 3) {
    report.theorem = Theorem::T41;
    for (int a = 0; a < count; ++a) {
      for (int b = a + 1; b < count; ++b) {
        PairValue pv{a, b, std::nullopt};
        std::vector<std::size_t> meets;
        for (std::size_t k : census.h_indices)
          if (same_pair(structure.strands[k], a, b))
            meets.push_back(k);
        const auto others = shared_non_h(a, b);
        std::ostringstream note;
        if (meets.size() >= 2) {
          note << "components " << a << "," << b << " meet at " << meets.size() << " H-tangles";
        } else if (strict && !others.empty()) {
          note << "components " << a << "," << b << " also cross in " << slot_name(others.front());
        } else if (meets.size() == 1) {
          pv.abs_lk = checked::abs(rational_lk(spec.tangles[meets.front()]));
        } else {
          pv.abs_lk = 0;
        }
        if (!note.str().empty())
          report.hypothesis_notes.push_back(note.str() + ": not covered");
        report.pair_values.push_back(pv);
      }
    }
    return report;
  }

  if (h == 2) {
    const std::size_t i = census.h_indices[0];
    const std::size_t j = census.h_indices[1];
    if (count != 2 || !same_pair(structure.strands[i], 0, 1) || !same_pair(structure.strands[j], 0, 1)) {
      report.hypothesis_notes.push_back("two H-tangles, " + std::to_string(count) +
                                        " component(s): not two components through both");
      return report;
    }
    report.theorem = Theorem::T42;
    PairValue pv{0, 1, std::nullopt};
    const auto others = shared_non_h(0, 1);
    if (strict && !others.empty()) {
      report.hypothesis_notes.push_back("components also cross in " + slot_name(others.front()) + ": not covered");
    } else {
      const Int sign = (report.sigma % 2 == 0) ? 1 : -1;
      pv.abs_lk = checked::abs(
          checked::add(rational_lk(spec.tangles[i]), checked::mul(sign, rational_lk(spec.tangles[j]))));
    }
    report.pair_values.push_back(pv);
    return report;
  }

  if (h == 0) {
    if (count != 2) {
      report.hypothesis_notes.push_back("no H-tangle and " + std::to_string(count) + " component(s)");
      return report;
    }
    const auto flyped = flype_normalize(spec);
    if (flyped.spec.e % 2 != 0)
      throw Error(ErrorCode::ParityViolation,
                  "e - sum(e_k) = " + std::to_string(flyped.spec.e) + " is odd; the twist term is not an integer");
    report.theorem = Theorem::T43;
    Int total = flyped.spec.e / 2;
    for (const auto& f : flyped.spec.tangles) {
      // Rotated slope q'/p of the flyped V-tangle p/q'.
      total = checked::add(total, rational_lk(Fraction::make(f.q(), f.p())));
    }
    report.pair_values.push_back({0, 1, checked::abs(total)});
    return report;
  }

  report.hypothesis_notes.push_back("exactly one H-tangle (" + std::to_string(count) + " component(s))");
  return report;
}

} // namespace tanglelink
