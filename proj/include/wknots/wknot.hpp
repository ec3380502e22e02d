#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wknots/wbraid.hpp"

namespace wk {

/// One crossing of a long knot: an arrow from the over passage (tail) to the
/// under passage (head).
struct GaussArrow {
  int tail = 0;
  int head = 0;
  int sign = 1;

  /// +1 when the tail comes first along the strand.
  int direction() const { return tail < head ? 1 : -1; }
  friend bool operator==(const GaussArrow&, const GaussArrow&) = default;
  friend auto operator<=>(const GaussArrow&, const GaussArrow&) = default;
};

/// A long w-knot diagram on slots 1..2n. Arrows are kept sorted by tail slot.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  explicit GaussDiagram(std::vector<GaussArrow> arrows);

  int crossings() const { return static_cast<int>(arrows_.size()); }
  int slots() const { return 2 * crossings(); }
  const std::vector<GaussArrow>& arrows() const { return arrows_; }
  const GaussArrow& arrow(int i) const { return arrows_.at(i); }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<GaussArrow> arrows_;
};

/// Passage-sequence view: entry k describes slot k + 1.
struct Passage {
  int arrow = 0;
  bool head = false;
  friend bool operator==(const Passage&, const Passage&) = default;
};

std::vector<Passage> passage_sequence(const GaussDiagram& k);
GaussDiagram diagram_from_sequence(const std::vector<Passage>& seq, const std::vector<int>& signs);

/// Gauss text format: `n=<k>` then one line `t=<slot> h=<slot> s=<+|->` per arrow.
GaussDiagram parse_gauss(std::string_view text);
std::string format_gauss(const GaussDiagram& k);

using PDCrossing = std::array<int, 4>;

/// Planar diagram code. X[a,b,c,d] lists the edges counterclockwise starting at
/// the incoming under edge a; c = a + 1 is the outgoing under edge.
struct PDCode {
  std::vector<PDCrossing> crossings;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Parses `X[a,b,c,d]` records separated by commas or whitespace. `#` comments.
PDCode parse_pd(std::string_view text);
std::string format_pd(const PDCode& pd);
/// +1 or -1 for crossing index i; throws on inconsistent records.
int pd_sign(const PDCode& pd, std::size_t i);
/// Checks labels and orientation; throws Error on failure.
void pd_validate(const PDCode& pd);
/// Long knot obtained by cutting just before edge `base_edge`.
GaussDiagram pd_to_gauss(const PDCode& pd, int base_edge = 1);
/// Connected sum by splicing the second code after the first.
PDCode pd_connected_sum(const PDCode& a, const PDCode& b);

int self_linking(const GaussDiagram& k);

/// Long closure of a braid whose skeleton is an n-cycle. Virtual letters add no
/// arrows; flips are rejected.
GaussDiagram braid_closure(const BraidWord& b);
/// Planar diagram of the closure of a classical braid (no virtual letters).
PDCode braid_to_pd(const BraidWord& b);

enum class MoveKind {
  R1Add,      // insert an isolated arrow: before slot `a`, sign, tail first iff flag
  R1Remove,   // remove the isolated arrow occupying slots a, a+1
  R1s,        // reverse the isolated arrow at slots a, a+1, keeping its sign
  R2Add,      // tails at a, a+1 and heads at b, b+1 in the result; sign of tail-a arrow; flag = antiparallel
  R2Remove,   // remove the R2 pair whose tails are at a, a+1
  R3,         // sites {a,a+1}, {b,b+1}, {c,c+1}: reverse each pair
  OC,         // exchange the adjacent tails at a, a+1
  VR1,        // virtual moves and the mixed move leave the Gauss diagram unchanged
  VR2,
  VR3,
  M,
};

struct Move {
  MoveKind kind = MoveKind::OC;
  int a = 0;
  int b = 0;
  int c = 0;
  int sign = 1;
  bool flag = false;
  friend bool operator==(const Move&, const Move&) = default;
};

std::string move_name(MoveKind kind);

/// Throws Error when the pattern does not match at the given location.
GaussDiagram apply_move(const GaussDiagram& k, const Move& m);
/// The move undoing `m` when applied to apply_move(k, m).
Move inverse_move(const GaussDiagram& k, const Move& m);
/// True when the R3 pattern holds at the three sites.
bool r3_applicable(const GaussDiagram& k, int a, int b, int c);

/// Every legal non-inserting move on k (R1s, R2Remove, R3, OC, and R1Remove when
/// `with_r1` is set).
std::vector<Move> legal_local_moves(const GaussDiagram& k, bool with_r1 = false);

/// Per-strand passage pattern of a braid-like or orientation-varied R3 move,
/// strands 0..2. Used for fuzzing by insertion.
struct R3Template {
  // order[s] lists the two passages on strand s: (other strand, is_head).
  std::array<std::array<std::pair<int, bool>, 2>, 3> order;
  // sign of the arrow between strands {0,1}, {0,2}, {1,2}.
  std::array<int, 3> sign;
};
const std::vector<R3Template>& r3_templates();

GaussDiagram random_gauss_diagram(std::mt19937_64& rng, int n);
/// A random legal move, including insertions of R1s/R2/R3 patterns and, when
/// `with_r1`, plain R1 kinks.
Move random_legal_move(std::mt19937_64& rng, const GaussDiagram& k, bool with_r1 = false);
/// Inserts an R3 left-hand pattern at random sites so that an R3 move applies.
GaussDiagram insert_random_r3(std::mt19937_64& rng, const GaussDiagram& k, Move* where = nullptr);

}  // namespace wk
