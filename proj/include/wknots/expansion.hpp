#pragma once

#include <map>
#include <vector>

#include "wknots/arrows.hpp"
#include "wknots/jacobi.hpp"
#include "wknots/wbraid.hpp"
#include "wknots/wknot.hpp"

namespace wk {

/// Degree components 0..cap of Z. For braids the components live on strands(n)
/// with strands labeled by starting position, and `permutation` is the skeleton.
struct TruncatedExpansion {
  Skeleton skeleton;
  int cap = 0;
  std::vector<ArrowVector> components;
  std::vector<int> permutation;
};

/// Product over the letters of exp(+a(p,q)) for sigma_i and exp(-a(q,p)) for
/// sigma_i^-1, where p and q are the strands at positions i and i+1. Virtual
/// letters only permute strands. Flips are rejected.
TruncatedExpansion zed_braid(const BraidWord& b, int cap);
/// Z(b1) Z(b2) with the strands of the second factor renamed through the skeleton
/// of the first.
TruncatedExpansion expansion_product(const TruncatedExpansion& x, const TruncatedExpansion& y);

/// Each arrow of sign s becomes exp(s a): k parallel copies with weight s^k/k!,
/// tails clustered at the arrow's tail and heads at its head.
TruncatedExpansion zed_knot(const GaussDiagram& k, int cap);

/// Coordinates of every component in its quotient.
using ProjectedExpansion = std::vector<std::vector<Rational>>;
ProjectedExpansion project_expansion(const TruncatedExpansion& z, RelationSet rels);

/// The quotient used for long knots: {TC, 4T} plus the flags FI and/or RI
/// taken from `flags`.
RelationSet knot_relations(RelationSet flags);

using WheelCoordinates = std::map<WheelMonomial, Rational>;

/// Coordinates of a long-strand expansion in the wheel-monomial basis of each
/// degree (zero coordinates omitted). Throws Error with the residual if a
/// component is outside the span of the monomials.
WheelCoordinates wheels_reduce(const TruncatedExpansion& z, RelationSet flags);

/// log Z as predicted from the Alexander polynomial: sl * a, plus
/// (sum of signs of backward arrows) * w_1, plus -c_k w_k where
/// log A(e^x) = sum c_k x^k. Terms killed by the flags are dropped.
struct LogPrediction {
  Rational a;
  std::map<int, Rational> wheels;  // k -> coefficient of w_k
};
LogPrediction predicted_log(const GaussDiagram& k, int cap, RelationSet flags);
/// exp of the prediction, expanded in the wheel-monomial basis up to `cap`.
WheelCoordinates predicted_from_alexander(const GaussDiagram& k, int cap, RelationSet flags);

}  // namespace wk
