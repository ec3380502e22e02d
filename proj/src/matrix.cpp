#include "wknots/matrix.hpp"

namespace wk {

TruncSeries det_series(const SeriesMatrix& m, int cap) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c).cap() != cap) throw Error("series matrix entries must share the degree cap");
  return berkowitz_determinant(m, TruncSeries(cap), TruncSeries::constant(1, cap));
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
  return berkowitz_determinant(m, LaurentPoly(), LaurentPoly::constant(1));
}

Rational det_rational(const RatMatrix& m) {
  return berkowitz_determinant(m, Rational(0), Rational(1));
}

}  // namespace wk
