#pragma once

#include <random>
#include <string>
#include <vector>

#include "wknots/arrows.hpp"

namespace wk {

/// A diagram on the long strand with internal "two in one out" vertices.
///
/// Edges are named by integers. Each edge starts at a skeleton tail or at a
/// vertex output and ends at a skeleton head or at a vertex input. The vertex
/// with inputs (in1, in2) stands for the bracket [in1, in2]; swapping the inputs
/// negates the diagram.
struct TrivalentDiagram {
  struct Vertex {
    int in1 = 0;
    int in2 = 0;
    int out = 0;
  };
  struct End {
    int edge = 0;
    bool head = false;
  };

  std::vector<End> skeleton;  // in order along the strand
  std::vector<Vertex> vertices;

  int degree() const { return static_cast<int>(skeleton.size() + vertices.size()) / 2; }
  /// Throws Error unless every edge has exactly one start and one end.
  void validate() const;
};

/// Strategy for choosing the next vertex to eliminate. With an engine, eligible
/// vertices and the two rules are chosen at random; otherwise the first vertex
/// whose output lands on the skeleton goes first.
struct EliminationOrder {
  std::mt19937_64* rng = nullptr;
};

/// Rewrites internal vertices away. A vertex whose output ends on the skeleton
/// becomes the commutator of its two input heads there. A vertex fed by an edge
/// e from a skeleton tail t is replaced by moving its other input's head onto
/// the skeleton just before t minus just after t (signs for e in the first
/// input slot), while e continues along the vertex's output.
/// Throws Error("not skeleton-reducible") when no rule applies.
ArrowVector stu_eliminate(const TrivalentDiagram& d, EliminationOrder order = {});

/// The k-wheel: k tails on the skeleton feeding an oriented k-cycle. Vertex j
/// has inputs (spoke j, cycle edge from vertex j-1).
TrivalentDiagram wheel_diagram(int k);
/// Highest wheel degree accepted by wheel_to_arrows.
constexpr int kMaxWheel = 8;
ArrowVector wheel_to_arrows(int k);

/// The isolated right-going arrow [1>2], the degree-1 generator besides w_1.
ArrowVector isolated_arrow();

/// a^j w_{k1} ... w_{kr} with k1 <= ... <= kr.
struct WheelMonomial {
  int a_power = 0;
  std::vector<int> wheels;

  int degree() const;
  /// "1", "a^2 w1 w3", ...
  std::string str() const;
  friend auto operator<=>(const WheelMonomial&, const WheelMonomial&) = default;
};

/// All monomials of degree m admitted by the flags: RI removes w_1, FI removes
/// w_1 and a. Other relation ids in `rels` are ignored.
std::vector<WheelMonomial> wheel_monomial_basis(int m, RelationSet rels);
/// Product of generator images on the long strand.
ArrowVector monomial_to_arrows(const WheelMonomial& mono);

/// Arrow-IHX and arrow-AS relators of degree m, instantiated in a family of
/// contexts (trees, wheels, wheels with tree spokes, extra arrows) and pushed
/// through stu_eliminate. Each vanishes in the {TC, 4T} quotient.
std::vector<ArrowVector> ihx_relators(int m);
std::vector<ArrowVector> as_relators(int m);
/// The commutators-commute relation built from two Y-shaped trees whose heads
/// are adjacent, eliminated to pure arrows; m >= 4.
std::vector<ArrowVector> cc_relators_from_trees(int m);

}  // namespace wk
