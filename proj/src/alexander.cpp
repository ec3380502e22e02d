#include "wknots/alexander.hpp"

#include <map>

namespace wk {

IntMatrix build_S(const GaussDiagram& k) {
  const std::size_t n = k.crossings();
  IntMatrix s(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) s.at(i, i) = k.arrow(i).sign;
  return s;
}

IntMatrix build_T(const GaussDiagram& k) {
  const std::size_t n = k.crossings();
  IntMatrix t(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ai = k.arrow(i);
    const int lo = std::min(ai.tail, ai.head), hi = std::max(ai.tail, ai.head);
    for (std::size_t j = 0; j < n; ++j) {
      const int h = k.arrow(j).head;
      if (lo < h && h < hi) t.at(i, j) = ai.direction();
    }
  }
  return t;
}

AlexanderValue alexander_matrix(const GaussDiagram& k, int degree_cap) {
  if (degree_cap < 0) throw Error("degree cap must be >= 0");
  const std::size_t n = k.crossings();
  const IntMatrix t = build_T(k);

  LaurentMatrix ml(n, n, LaurentPoly());
  SeriesMatrix ms(n, n, TruncSeries(degree_cap));
  for (std::size_t i = 0; i < n; ++i) {
    const int s = k.arrow(i).sign;
    const int d = k.arrow(i).direction();
    // Row i of Lambda T with Lambda_ii = d_i (1 - X^{d_i s_i}); the d_i cancels
    // the sign carried by T, leaving the Wirtinger coefficient 1 - X^{d_i s_i}.
    const LaurentPoly lam = LaurentPoly::constant(1) - LaurentPoly::power(d * s);
    const TruncSeries lam_s = TruncSeries::constant(1, degree_cap) - exp_of_multiple(d * s, degree_cap);
    for (std::size_t j = 0; j < n; ++j) {
      const int tij = d * t.at(i, j);
      LaurentPoly e = lam * LaurentPoly::constant(tij);
      TruncSeries es = lam_s * Rational(tij);
      if (i == j) {
        e += LaurentPoly::constant(1);
        es += TruncSeries::constant(1, degree_cap);
      }
      ml.at(i, j) = std::move(e);
      ms.at(i, j) = std::move(es);
    }
  }
  AlexanderValue v;
  v.raw = det_laurent(ml);
  v.series = det_series(ms, degree_cap);
  v.normalized = laurent_normalize(v.raw);
  return v;
}

namespace {

// Cofactor expansion along the first row with memoization on the set of used
// columns. Kept separate from the library determinant on purpose.
LaurentPoly minor_determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n > 20) throw Error("Fox oracle supports at most 21 crossings");
  std::map<unsigned, LaurentPoly> memo;
  // det of rows r..n-1 restricted to columns not in `used`.
  auto rec = [&](auto&& self, std::size_t r, unsigned used) -> LaurentPoly {
    if (r == n) return LaurentPoly::constant(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    LaurentPoly acc;
    int parity = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used >> c & 1) continue;
      if (!m[r][c].is_zero()) {
        LaurentPoly term = m[r][c] * self(self, r + 1, used | (1u << c));
        if (parity % 2) acc -= term;
        else acc += term;
      }
      ++parity;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

}  // namespace

LaurentPoly alexander_fox_raw(const PDCode& pd) {
  pd_validate(pd);
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return LaurentPoly::constant(1);
  const int m = 2 * n;
  // Edge e ends at an under passage iff it is the first entry of some crossing.
  std::vector<bool> ends_under(m + 1, false);
  for (const auto& x : pd.crossings) ends_under[x[0]] = true;
  int start = 1;
  while (!ends_under[(start + m - 2) % m + 1]) ++start;
  std::vector<int> arc(m + 1, -1);
  int current = -1;
  for (int step = 0; step < m; ++step) {
    const int e = (start - 1 + step) % m + 1;
    const int prev = (e + m - 2) % m + 1;
    if (ends_under[prev]) ++current;
    arc[e] = current;
  }
  const LaurentPoly one = LaurentPoly::constant(1), x = LaurentPoly::power(1);
  std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    const auto& c = pd.crossings[i];
    const int s = pd_sign(pd, i);
    const int over = arc[s > 0 ? c[3] : c[1]];
    const int uin = arc[c[0]], uout = arc[c[2]];
    if (s > 0) {
      rows[i][over] += one - x;
      rows[i][uin] += x;
      rows[i][uout] -= one;
    } else {
      rows[i][over] += x - one;
      rows[i][uin] += one;
      rows[i][uout] -= x;
    }
  }
  std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c + 1 < n; ++c) minor[r][c] = rows[r][c];
  return minor_determinant(minor);
}

LaurentPoly alexander_fox(const PDCode& pd) { return laurent_normalize(alexander_fox_raw(pd)); }

}  // namespace wk
