#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superext/weights.hpp"

namespace superext {

/// Contents of one position.  times > 1 happens only at the zero position.
struct Cell {
  int times = 0;
  bool gt = false;
  bool lt = false;

  bool empty() const { return times == 0 && !gt && !lt; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Position -> symbols.  Positions are slot indices; when `half` is set the
/// slot p stands for the coordinate p + 1/2.  Empty positions are implicit.
///
/// A general q diagram (`general`) may carry core symbols > and < anywhere;
/// its ctx only records the family (Q) and integrality.
struct WeightDiagram {
  AlgebraContext ctx;
  bool general = false;
  bool half = false;
  int sign = 0;
  std::map<int, Cell> cells;

  Cell at(int p) const;
  int times_at(int p) const { return at(p).times; }
  /// Position 0 may hold a stack (every integral diagram except GL).
  bool stacked() const { return !half && (general || ctx.family != Family::GL); }
  int cross_count() const;

  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;
};

struct Arch {
  enum class Kind { Two, Three, Wobbly };
  Kind kind = Kind::Two;
  int a = 0;
  int b1 = 0;
  int b2 = 0;  // Three only

  int right() const { return kind == Kind::Three ? b2 : b1; }
  friend bool operator==(const Arch&, const Arch&) = default;
};

struct ArchDiagram {
  WeightDiagram base;
  std::vector<Arch> arches;  // sorted by smallest right leg
};

WeightDiagram diagram_of(const BlockWeight& w);
BlockWeight weight_of(const WeightDiagram& d);
WeightDiagram qdiagram_of(const GeneralQWeight& w);

ArchDiagram arcs(const WeightDiagram& d);
/// Right ends of the arches leaving p; at the zero position of a stacked
/// diagram this is the union over the stack plus the wobbly end.
std::set<int> arc_ends(const ArchDiagram& ad, int p);
std::set<int> arc_ends(const WeightDiagram& d, int p);

/// (f)_a^q.  When the result needs a sign and none is given, the sign of d is
/// kept; a still missing sign raises MoveUndefined.
WeightDiagram move_one(const WeightDiagram& d, int a, int q, std::optional<int> sign = std::nullopt);
/// (f)_{0,0}^{p,q}.
WeightDiagram move_two(const WeightDiagram& d, int p, int q, std::optional<int> sign = std::nullopt);
/// Inverses: pull a x back from q to a < q, and two x from p,q onto the stack.
WeightDiagram unmove_one(const WeightDiagram& d, int q, int a, std::optional<int> sign = std::nullopt);
WeightDiagram unmove_two(const WeightDiagram& d, int p, int q, std::optional<int> sign = std::nullopt);

WeightDiagram tau(const WeightDiagram& d);
WeightDiagram tau_inv(const WeightDiagram& d);
/// tau on arches: legs shift left by one, a leg landing on 0 is dropped.
std::vector<Arch> tau_arches(const std::vector<Arch>& arches);

enum class ArchOrder { Less, Greater, Incomparable };
ArchOrder arch_compare(const Arch& a1, const Arch& a2);

std::string render_ascii(const WeightDiagram& d);
std::string render_arches(const ArchDiagram& ad);
WeightDiagram parse_ascii(const std::string& text, const AlgebraContext& ctx);

}  // namespace superext
