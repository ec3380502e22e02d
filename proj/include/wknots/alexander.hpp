#pragma once

#include "wknots/laurent.hpp"
#include "wknots/matrix.hpp"
#include "wknots/series.hpp"
#include "wknots/wknot.hpp"

namespace wk {

using IntMatrix = Matrix<int>;

/// diag(s_1, ..., s_n) in arrow order.
IntMatrix build_S(const GaussDiagram& k);
/// T_ij = d_i when the head of arrow j lies strictly between the two ends of
/// arrow i, and 0 otherwise. Here d_i = +1 when arrow i points forward.
IntMatrix build_T(const GaussDiagram& k);

struct AlexanderValue {
  /// det(I + Lambda T) with X = e^x, truncated. Constant term is 1.
  TruncSeries series;
  /// The same determinant over Z[X, X^-1], before normalization.
  LaurentPoly raw;
  LaurentPoly normalized;
};

/// Evaluates det(I + Lambda T), Lambda = diag(d_i (1 - X^{d_i s_i})), both as a
/// series in x = log X and as a Laurent polynomial. Row i is the linearized
/// Wirtinger relation at the head of arrow i, written in the jumps across heads.
AlexanderValue alexander_matrix(const GaussDiagram& k, int degree_cap = 5);

/// Classical Alexander polynomial from the Wirtinger presentation by Fox
/// calculus, before normalization (the first minor of the Alexander matrix).
LaurentPoly alexander_fox_raw(const PDCode& pd);
LaurentPoly alexander_fox(const PDCode& pd);

}  // namespace wk
