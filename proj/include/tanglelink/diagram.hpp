#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tanglelink/rational_linking.hpp"
#include "tanglelink/tangle.hpp"

namespace tanglelink {

struct MontesinosSpec;
enum class Frame;

enum class Corner : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

const char* to_string(Corner c) noexcept;

/// One end of an arc. Every arc has two sides, 0 and 1; travelling "forward"
/// along an arc means going from side 0 to side 1.
struct ArcEnd {
  std::uint32_t arc = 0;
  std::uint8_t side = 0;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// Four arc ends in counterclockwise order. Port 0 faces NE, 1 NW, 2 SW,
/// 3 SE; the strands run 0-2 and 1-3.
struct Crossing {
  std::array<ArcEnd, 4> ends{};
  std::uint8_t over = 0; // 0: the 0-2 strand is on top, 1: the 1-3 strand
  int handedness = 1;    // +1 for a positive twist (NE-SW diagonal over)
  int slot = -1;         // producing Montesinos slot, -1 outside a Montesinos build

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Combinatorial link or tangle diagram. No planar coordinates are kept:
/// signs come from the cyclic order at each crossing and the arc directions.
class Diagram {
public:
  struct Attachment {
    enum class Kind : std::uint8_t { None, Port, Terminal };
    Kind kind = Kind::None;
    std::uint32_t index = 0; // crossing index or terminal index
    std::uint8_t port = 0;

    friend bool operator==(const Attachment&, const Attachment&) = default;
  };

  struct Arc {
    std::array<Attachment, 2> ends{};

    bool closed_loop() const noexcept {
      return ends[0].kind == Attachment::Kind::None && ends[1].kind == Attachment::Kind::None;
    }
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  /// Entry port of a crossing: a strand arrives at `port` and leaves at port + 2.
  struct PortRef {
    std::uint32_t crossing = 0;
    std::uint8_t port = 0;

    friend bool operator==(const PortRef&, const PortRef&) = default;
  };

  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  bool is_tangle() const noexcept { return terminals_.size() == 4; }
  bool is_closed() const noexcept { return terminals_.empty(); }
  std::optional<ArcEnd> open_end(Corner c) const;

  /// Corner reached by the strand that starts at `c`, for a tangle.
  Corner partner(Corner c) const;

  bool traced() const noexcept { return !component_of_.empty() || arcs_.empty(); }
  std::size_t component_count() const noexcept { return component_count_; }
  int component_of(std::uint32_t arc) const { return component_of_.at(arc); }
  bool forward(std::uint32_t arc) const { return forward_.at(arc) != 0; }

  /// Per Montesinos slot, the arc through each corner point (NW, NE, SW, SE).
  const std::vector<std::array<std::uint32_t, 4>>& slot_corner_arcs() const noexcept {
    return slot_corners_;
  }

  const std::vector<PortRef>& orientation_seeds() const noexcept { return seeds_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  friend class DiagramEditor;

  std::vector<Arc> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<std::optional<ArcEnd>> terminals_;
  std::vector<PortRef> seeds_;
  std::vector<std::array<std::uint32_t, 4>> slot_corners_;

  std::vector<int> component_of_;
  std::vector<std::uint8_t> forward_;
  std::size_t component_count_ = 0;
};

/// Signed crossing sums between components and the resulting linking numbers.
struct PairwiseLinking {
  std::size_t component_count = 0;
  std::vector<std::vector<Int>> crossing_sum; // symmetric, zero diagonal

  Int linking(std::size_t i, std::size_t j) const { return crossing_sum.at(i).at(j) / 2; }
};

Diagram zero_tangle();
Diagram infinity_tangle();

/// Twist on the east ends (NE, SE); +1 puts the NE-SW diagonal over.
Diagram add_horizontal_twist(Diagram d, int handedness);
/// Twist on the south ends (SW, SE), same handedness convention.
Diagram add_vertical_twist(Diagram d, int handedness);

/// a_k is applied horizontally iff n - k is even, so a_n is always a
/// horizontal twist; the build starts from T_0 for odd n and T_inf for even n.
Diagram build_rational_tangle(const ConwaySequence& seq);

/// Side by side: left NE to right NW, left SE to right SW.
Diagram tangle_sum(const Diagram& left, const Diagram& right);
/// Top over bottom: top SW to bottom NW, top SE to bottom NE.
Diagram tangle_stack(const Diagram& top, const Diagram& bottom);

/// Joins (NW, NE) and (SW, SE). Seeds the orientation so the strand from NE
/// runs toward NW and the strand from SW toward SE.
Diagram numerator_closure(const Diagram& d);
/// Joins (NW, SW) and (NE, SE). No orientation seeds.
Diagram denominator_closure(const Diagram& d);

Diagram build_montesinos(const MontesinosSpec& spec, Frame frame);

/// Labels components and orients arcs: seeds first, then each remaining
/// component from its lowest-numbered arc, travelling forward.
Diagram orient_and_trace(const Diagram& d);

PairwiseLinking pairwise_linking(const Diagram& d);

/// Crossing sign under the current orientation, +1 or -1.
int crossing_sign(const Diagram& d, std::size_t crossing);

Diagram mirror(const Diagram& d);

/// One crossing per line: "X a b c d <over-pair> <handedness>", arcs in
/// counterclockwise order starting from the NE port.
std::string export_code(const Diagram& d);

/// Closed, oriented diagram of R_{p/q} under the NE-to-NW / SW-to-SE convention.
Diagram rational_link_diagram(const Fraction& slope);

/// lk of R_{p/q} read off the diagram.
Int oracle_linking(const RationalLinkSpec& spec);

} // namespace tanglelink
