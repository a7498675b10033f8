#include "tanglelink/diagram.hpp"

#include <sstream>
#include <stdexcept>

#include "tanglelink/montesinos.hpp"

namespace tanglelink {

const char* to_string(Corner c) noexcept {
  switch (c) {
  case Corner::NW: return "NW";
  case Corner::NE: return "NE";
  case Corner::SW: return "SW";
  case Corner::SE: return "SE";
  }
  return "?";
}

std::optional<ArcEnd> Diagram::open_end(Corner c) const {
  if (!is_tangle())
    return std::nullopt;
  return terminals_[static_cast<std::size_t>(c)];
}

using Kind = Diagram::Attachment::Kind;

// Mutating access to Diagram internals. Arcs merged by join() are left in
// place and marked dead until finish() compacts the arc table.
class DiagramEditor {
public:
  // Structural edits invalidate tracing unless keep_trace is set.
  explicit DiagramEditor(Diagram& d, bool keep_trace = false) : d_(d), merged_into_(d.arcs_.size(), -1) {
    if (keep_trace)
      return;
    d_.component_of_.clear();
    d_.forward_.clear();
    d_.component_count_ = 0;
  }

  void mirror_crossings() {
    for (auto& x : d_.crossings_) {
      x.over ^= 1;
      x.handedness = -x.handedness;
    }
  }

  std::uint32_t new_arc() {
    d_.arcs_.emplace_back();
    merged_into_.push_back(-1);
    return static_cast<std::uint32_t>(d_.arcs_.size() - 1);
  }

  std::uint32_t new_crossing(int handedness, int slot) {
    Crossing x;
    x.over = handedness > 0 ? 0 : 1;
    x.handedness = handedness > 0 ? 1 : -1;
    x.slot = slot;
    d_.crossings_.push_back(x);
    return static_cast<std::uint32_t>(d_.crossings_.size() - 1);
  }

  // Points `end` at `at` and updates the back reference held by `at`.
  void attach(ArcEnd end, Diagram::Attachment at) {
    d_.arcs_[end.arc].ends[end.side] = at;
    switch (at.kind) {
    case Kind::Port: d_.crossings_[at.index].ends[at.port] = end; break;
    case Kind::Terminal: d_.terminals_[at.index] = end; break;
    case Kind::None: break;
    }
  }

  static Diagram::Attachment port(std::uint32_t crossing, std::uint8_t p) {
    return {Kind::Port, crossing, p};
  }
  static Diagram::Attachment terminal(std::uint32_t t) { return {Kind::Terminal, t, 0}; }

  // Splices the arcs at two terminals into one arc; both terminals vanish.
  void join(std::size_t t1, std::size_t t2) {
    const auto x = d_.terminals_.at(t1);
    const auto y = d_.terminals_.at(t2);
    if (!x || !y)
      throw std::logic_error("join: terminal already consumed");
    d_.terminals_[t1].reset();
    d_.terminals_[t2].reset();
    if (x->arc == y->arc) {
      d_.arcs_[x->arc].ends = {};
      return;
    }
    const ArcEnd far{y->arc, static_cast<std::uint8_t>(1 - y->side)};
    attach(*x, d_.arcs_[far.arc].ends[far.side]);
    merged_into_[y->arc] = x->arc;
  }

  // Copies `other` in; returns the terminal offset of its corners.
  std::size_t append(const Diagram& other) {
    const auto arc_off = static_cast<std::uint32_t>(d_.arcs_.size());
    const auto cross_off = static_cast<std::uint32_t>(d_.crossings_.size());
    const auto term_off = static_cast<std::uint32_t>(d_.terminals_.size());
    for (auto a : other.arcs_) {
      for (auto& at : a.ends) {
        if (at.kind == Kind::Port)
          at.index += cross_off;
        else if (at.kind == Kind::Terminal)
          at.index += term_off;
      }
      d_.arcs_.push_back(a);
      merged_into_.push_back(-1);
    }
    for (auto x : other.crossings_) {
      for (auto& e : x.ends)
        e.arc += arc_off;
      d_.crossings_.push_back(x);
    }
    for (auto t : other.terminals_) {
      if (t)
        t->arc += arc_off;
      d_.terminals_.push_back(t);
    }
    for (auto s : other.seeds_) {
      s.crossing += cross_off;
      d_.seeds_.push_back(s);
    }
    for (auto corners : other.slot_corners_) {
      for (auto& a : corners)
        a += arc_off;
      d_.slot_corners_.push_back(corners);
    }
    return term_off;
  }

  // Keeps the listed terminals, renumbered 0..k-1; all others must be consumed.
  void select_terminals(const std::vector<std::size_t>& keep) {
    std::vector<std::optional<ArcEnd>> next;
    for (std::size_t t : keep)
      next.push_back(d_.terminals_.at(t));
    d_.terminals_ = std::move(next);
    for (std::size_t i = 0; i < d_.terminals_.size(); ++i)
      if (d_.terminals_[i])
        attach(*d_.terminals_[i], terminal(static_cast<std::uint32_t>(i)));
  }

  std::uint32_t new_terminal() {
    d_.terminals_.emplace_back();
    return static_cast<std::uint32_t>(d_.terminals_.size() - 1);
  }

  std::optional<ArcEnd> terminal_end(std::size_t t) const { return d_.terminals_.at(t); }

  const Diagram::Arc& arc(std::uint32_t a) const { return d_.arcs_[a]; }

  void set_seeds(std::vector<Diagram::PortRef> seeds) { d_.seeds_ = std::move(seeds); }
  void set_slot_corners(std::vector<std::array<std::uint32_t, 4>> corners) {
    d_.slot_corners_ = std::move(corners);
  }
  void set_slot(int slot) {
    for (auto& x : d_.crossings_)
      x.slot = slot;
  }

  void finish() {
    std::vector<std::uint32_t> new_id(d_.arcs_.size(), 0);
    std::vector<Diagram::Arc> kept;
    for (std::size_t i = 0; i < d_.arcs_.size(); ++i) {
      if (merged_into_[i] >= 0)
        continue;
      new_id[i] = static_cast<std::uint32_t>(kept.size());
      kept.push_back(d_.arcs_[i]);
    }
    auto resolve = [&](std::uint32_t a) {
      while (merged_into_[a] >= 0)
        a = static_cast<std::uint32_t>(merged_into_[a]);
      return new_id[a];
    };
    for (auto& x : d_.crossings_)
      for (auto& e : x.ends)
        e.arc = resolve(e.arc);
    for (auto& t : d_.terminals_)
      if (t)
        t->arc = resolve(t->arc);
    for (auto& corners : d_.slot_corners_)
      for (auto& a : corners)
        a = resolve(a);
    d_.arcs_ = std::move(kept);
    merged_into_.assign(d_.arcs_.size(), -1);
  }

  // Tracing state.
  std::vector<int>& component_of() { return d_.component_of_; }
  std::vector<std::uint8_t>& forward() { return d_.forward_; }
  std::size_t& component_count() { return d_.component_count_; }

private:
  Diagram& d_;
  std::vector<std::int64_t> merged_into_;
};

namespace {

constexpr std::size_t kNW = 0, kNE = 1, kSW = 2, kSE = 3;

void require_tangle(const Diagram& d, const char* op) {
  if (!d.is_tangle())
    throw Error(ErrorCode::NotATangle, std::string(op) + ": diagram has no four open ends");
}

// Crossingless tangle with strands a0-a1 and b0-b1.
Diagram crossingless(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  Diagram d;
  DiagramEditor ed(d);
  for (int i = 0; i < 4; ++i)
    ed.new_terminal();
  const auto a = ed.new_arc();
  const auto b = ed.new_arc();
  ed.attach({a, 0}, DiagramEditor::terminal(static_cast<std::uint32_t>(a0)));
  ed.attach({a, 1}, DiagramEditor::terminal(static_cast<std::uint32_t>(a1)));
  ed.attach({b, 0}, DiagramEditor::terminal(static_cast<std::uint32_t>(b0)));
  ed.attach({b, 1}, DiagramEditor::terminal(static_cast<std::uint32_t>(b1)));
  return d;
}

// Places a crossing beyond two corners of the tangle. The old corners feed
// ports in_a and in_b; ports out_a and out_b become the new corners.
Diagram twist(Diagram d, int handedness, std::size_t corner_a, std::size_t corner_b, std::uint8_t in_a,
              std::uint8_t in_b, std::uint8_t out_a, std::uint8_t out_b) {
  require_tangle(d, "twist");
  DiagramEditor ed(d);
  const auto c = ed.new_crossing(handedness, -1);
  const ArcEnd ea = *ed.terminal_end(corner_a);
  const ArcEnd eb = *ed.terminal_end(corner_b);
  ed.attach(ea, DiagramEditor::port(c, in_a));
  ed.attach(eb, DiagramEditor::port(c, in_b));
  const auto na = ed.new_arc();
  const auto nb = ed.new_arc();
  ed.attach({na, 0}, DiagramEditor::port(c, out_a));
  ed.attach({na, 1}, DiagramEditor::terminal(static_cast<std::uint32_t>(corner_a)));
  ed.attach({nb, 0}, DiagramEditor::port(c, out_b));
  ed.attach({nb, 1}, DiagramEditor::terminal(static_cast<std::uint32_t>(corner_b)));
  return d;
}

std::optional<Diagram::PortRef> first_port_from(const Diagram& d, Corner c) {
  const auto end = d.open_end(c);
  const auto& far = d.arcs()[end->arc].ends[1 - end->side];
  if (far.kind != Kind::Port)
    return std::nullopt;
  return Diagram::PortRef{far.index, far.port};
}

void walk(const Diagram& d, std::vector<int>& comp, std::vector<std::uint8_t>& fwd, std::uint32_t start,
          bool start_forward, int label) {
  std::uint32_t arc = start;
  bool f = start_forward;
  for (;;) {
    comp[arc] = label;
    fwd[arc] = f ? 1 : 0;
    const auto& exit = d.arcs()[arc].ends[f ? 1 : 0];
    if (exit.kind == Kind::None)
      return;
    if (exit.kind == Kind::Terminal)
      throw std::invalid_argument("orient_and_trace: diagram has open ends");
    const ArcEnd next = d.crossings()[exit.index].ends[(exit.port + 2) % 4];
    arc = next.arc;
    f = next.side == 0;
    if (arc == start) {
      if (f != start_forward)
        throw std::logic_error("orient_and_trace: inconsistent strand direction");
      return;
    }
  }
}

} // namespace

Corner Diagram::partner(Corner c) const {
  if (!is_tangle())
    throw Error(ErrorCode::NotATangle, "partner: diagram has no four open ends");
  ArcEnd at = *terminals_[static_cast<std::size_t>(c)];
  for (;;) {
    const auto& far = arcs_[at.arc].ends[1 - at.side];
    if (far.kind == Attachment::Kind::Terminal)
      return static_cast<Corner>(far.index);
    at = crossings_[far.index].ends[(far.port + 2) % 4];
  }
}

Diagram zero_tangle() { return crossingless(kNW, kNE, kSW, kSE); }

Diagram infinity_tangle() { return crossingless(kNW, kSW, kNE, kSE); }

// Crossing east of the box: old NE into port 1 (its NW side), old SE into
// port 2, ports 0 and 3 become the new NE and SE.
Diagram add_horizontal_twist(Diagram d, int handedness) { return twist(std::move(d), handedness, kNE, kSE, 1, 2, 0, 3); }

// Crossing south of the box: old SW into port 1, old SE into port 0, ports 2
// and 3 become the new SW and SE.
Diagram add_vertical_twist(Diagram d, int handedness) { return twist(std::move(d), handedness, kSW, kSE, 1, 0, 2, 3); }

Diagram build_rational_tangle(const ConwaySequence& seq) {
  (void)fraction_from_conway(seq); // validates
  const std::size_t n = seq.terms.size();
  Diagram d = (n % 2 == 1) ? zero_tangle() : infinity_tangle();
  for (std::size_t k = 0; k < n; ++k) {
    const bool horizontal = (n - 1 - k) % 2 == 0;
    const Int a = seq.terms[k];
    const int h = a > 0 ? 1 : -1;
    for (Int i = 0; i < checked::abs(a); ++i)
      d = horizontal ? add_horizontal_twist(std::move(d), h) : add_vertical_twist(std::move(d), h);
  }
  return d;
}

Diagram tangle_sum(const Diagram& left, const Diagram& right) {
  require_tangle(left, "tangle_sum");
  require_tangle(right, "tangle_sum");
  Diagram d = left;
  DiagramEditor ed(d);
  const auto off = ed.append(right);
  ed.join(kNE, off + kNW);
  ed.join(kSE, off + kSW);
  ed.select_terminals({kNW, off + kNE, kSW, off + kSE});
  ed.finish();
  return d;
}

Diagram tangle_stack(const Diagram& top, const Diagram& bottom) {
  require_tangle(top, "tangle_stack");
  require_tangle(bottom, "tangle_stack");
  Diagram d = top;
  DiagramEditor ed(d);
  const auto off = ed.append(bottom);
  ed.join(kSW, off + kNW);
  ed.join(kSE, off + kNE);
  ed.select_terminals({kNW, kNE, off + kSW, off + kSE});
  ed.finish();
  return d;
}

Diagram numerator_closure(const Diagram& src) {
  require_tangle(src, "numerator_closure");
  std::vector<Diagram::PortRef> seeds;
  for (Corner c : {Corner::NE, Corner::SW})
    if (auto p = first_port_from(src, c))
      seeds.push_back(*p);
  Diagram d = src;
  DiagramEditor ed(d);
  ed.join(kNW, kNE);
  ed.join(kSW, kSE);
  ed.select_terminals({});
  ed.set_seeds(std::move(seeds));
  ed.finish();
  return d;
}

Diagram denominator_closure(const Diagram& src) {
  require_tangle(src, "denominator_closure");
  Diagram d = src;
  DiagramEditor ed(d);
  ed.join(kNW, kSW);
  ed.join(kNE, kSE);
  ed.select_terminals({});
  ed.set_seeds({});
  ed.finish();
  return d;
}

Diagram build_montesinos(const MontesinosSpec& spec, Frame frame) {
  if (spec.tangles.empty())
    throw Error(ErrorCode::InvalidSpec, "Montesinos link needs at least one tangle");

  auto tag = [](Diagram t, int slot) {
    DiagramEditor ed(t);
    ed.set_slot(slot);
    std::array<std::uint32_t, 4> corners{};
    for (std::size_t c = 0; c < 4; ++c)
      corners[c] = ed.terminal_end(c)->arc;
    ed.set_slot_corners({corners});
    return t;
  };

  std::vector<Diagram> slots;
  for (std::size_t k = 0; k < spec.tangles.size(); ++k)
    slots.push_back(tag(build_rational_tangle(conway_from_fraction(spec.tangles[k])), static_cast<int>(k)));

  const int h = spec.e > 0 ? 1 : -1;
  Diagram twists = frame == Frame::Stacked ? infinity_tangle() : zero_tangle();
  for (Int i = 0; i < checked::abs(spec.e); ++i)
    twists = frame == Frame::Stacked ? add_vertical_twist(std::move(twists), h)
                                     : add_horizontal_twist(std::move(twists), h);
  slots.push_back(tag(std::move(twists), static_cast<int>(spec.tangles.size())));

  Diagram acc = slots.front();
  for (std::size_t k = 1; k < slots.size(); ++k)
    acc = frame == Frame::Stacked ? tangle_stack(acc, slots[k]) : tangle_sum(acc, slots[k]);
  Diagram closed = frame == Frame::Stacked ? denominator_closure(acc) : numerator_closure(acc);

  DiagramEditor ed(closed);
  ed.set_seeds({});
  return closed;
}

Diagram orient_and_trace(const Diagram& src) {
  if (!src.is_closed())
    throw std::invalid_argument("orient_and_trace: diagram has open ends");
  Diagram d = src;
  DiagramEditor ed(d);
  auto& comp = ed.component_of();
  auto& fwd = ed.forward();
  comp.assign(d.arc_count(), -1);
  fwd.assign(d.arc_count(), 1);
  int next = 0;
  for (const auto& seed : d.orientation_seeds()) {
    const ArcEnd e = d.crossings()[seed.crossing].ends[seed.port];
    if (comp[e.arc] >= 0)
      continue;
    walk(d, comp, fwd, e.arc, e.side == 1, next++);
  }
  for (std::uint32_t a = 0; a < d.arc_count(); ++a)
    if (comp[a] < 0)
      walk(d, comp, fwd, a, true, next++);
  ed.component_count() = static_cast<std::size_t>(next);
  return d;
}

int crossing_sign(const Diagram& d, std::size_t crossing) {
  const Crossing& x = d.crossings().at(crossing);
  auto leaves = [&](int port) {
    const ArcEnd e = x.ends[static_cast<std::size_t>(port)];
    return (e.side == 0) == d.forward(e.arc);
  };
  const int over = x.over;
  const int under = 1 - x.over;
  const int over_out = leaves(over) ? over : over + 2;
  const int under_out = leaves(under) ? under : under + 2;
  return under_out == (over_out + 1) % 4 ? 1 : -1;
}

PairwiseLinking pairwise_linking(const Diagram& d) {
  if (!d.traced())
    throw std::invalid_argument("pairwise_linking: diagram is not traced");
  PairwiseLinking out;
  const std::size_t n = d.component_count();
  out.component_count = n;
  out.crossing_sum.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    const auto a = static_cast<std::size_t>(d.component_of(x.ends[0].arc));
    const auto b = static_cast<std::size_t>(d.component_of(x.ends[1].arc));
    if (a == b)
      continue;
    const int s = crossing_sign(d, i);
    out.crossing_sum[a][b] += s;
    out.crossing_sum[b][a] += s;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (out.crossing_sum[i][j] % 2 != 0)
        throw std::logic_error("OddSignSum: components " + std::to_string(i) + " and " + std::to_string(j));
  return out;
}

Diagram mirror(const Diagram& src) {
  Diagram d = src;
  DiagramEditor(d, true).mirror_crossings();
  return d;
}

std::string export_code(const Diagram& d) {
  std::size_t loops = 0;
  for (const auto& a : d.arcs())
    loops += a.closed_loop() ? 1 : 0;
  std::ostringstream os;
  os << "# arcs=" << d.arc_count() << " crossings=" << d.crossing_count() << " loops=" << loops << "\n";
  for (const auto& x : d.crossings()) {
    os << "X";
    for (const auto& e : x.ends)
      os << ' ' << e.arc;
    os << ' ' << (x.over == 0 ? "02" : "13") << ' ' << (x.handedness > 0 ? "+1" : "-1") << "\n";
  }
  return os.str();
}

Diagram rational_link_diagram(const Fraction& slope) {
  return orient_and_trace(numerator_closure(build_rational_tangle(conway_from_fraction(slope))));
}

Int oracle_linking(const RationalLinkSpec& spec) {
  const Diagram d = rational_link_diagram(spec.slope());
  if (d.component_count() != 2)
    throw std::logic_error("oracle_linking: closure of " + spec.slope().str() + " is not a 2-component link");
  return pairwise_linking(d).linking(0, 1);
}

} // namespace tanglelink
