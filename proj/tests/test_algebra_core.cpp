#include <doctest.h>

#include <algorithm>
#include <random>

#include "wknots/echelon.hpp"
#include "wknots/laurent.hpp"
#include "wknots/matrix.hpp"
#include "wknots/series.hpp"

using namespace wk;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), low(-3, 3), len(0, 4);
  LaurentPoly p;
  int lo = low(rng);
  int n = len(rng);
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(coef(rng), lo + k);
  return p;
}

TruncSeries random_series(std::mt19937& rng, int cap, bool zero_constant) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  TruncSeries s(cap);
  for (int k = zero_constant ? 1 : 0; k <= cap; ++k) s[k] = Rational(num(rng), den(rng));
  for (int k = 0; k <= cap; ++k) s[k].canonicalize();
  return s;
}

// Fraction-free (Bareiss-style over integers after clearing denominators) rank.
std::size_t oracle_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][k] = v;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("laurent_normalize examples") {
  auto p = LaurentPoly::from_coefficients({1, -1, 1}, -1);  // X^-1 - 1 + X
  CHECK(laurent_normalize(p) == LaurentPoly::from_coefficients({1, -1, 1}));
  CHECK(laurent_normalize(LaurentPoly::constant(1)) == LaurentPoly::constant(1));
  CHECK(laurent_normalize(LaurentPoly::monomial(-1, 3)) == LaurentPoly::constant(1));
  CHECK_THROWS_WITH_AS(laurent_normalize(LaurentPoly()), "cannot normalize zero", Error);
}

TEST_CASE("laurent ring axioms and normalization orbit") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (a.is_zero()) continue;
    auto n = laurent_normalize(a);
    CHECK(laurent_normalize(n) == n);
    CHECK(laurent_normalize(-a.shifted(t % 7 - 3)) == n);
    CHECK(n.min_exponent() == 0);
    CHECK(n.coefficient(0) > 0);
  }
}

TEST_CASE("laurent text forms") {
  auto p = LaurentPoly::from_coefficients({1, -1, 1});
  CHECK(p.str() == "1 - X + X^2");
  CHECK(p.term_list() == "1*X^0 -1*X^1 1*X^2");
  CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("series exp and log") {
  CHECK(series_exp(TruncSeries(4)) == TruncSeries::constant(1, 4));
  auto e = series_exp(TruncSeries::variable(3));
  CHECK(e == TruncSeries(3, {1, 1, Rational(1, 2), Rational(1, 6)}));
  CHECK(series_log(TruncSeries::constant(1, 3)).is_zero());
  auto one_plus_x = TruncSeries::constant(1, 3) + TruncSeries::variable(3);
  CHECK(series_log(one_plus_x) == TruncSeries(3, {0, 1, Rational(-1, 2), Rational(1, 3)}));
  auto one_plus_x5 = TruncSeries::constant(1, 5) + TruncSeries::variable(5);
  CHECK(series_exp(series_log(one_plus_x5)) == one_plus_x5);
  CHECK(series_log(series_exp(TruncSeries::variable(6))) == TruncSeries::variable(6));
  CHECK_THROWS_AS(series_exp(TruncSeries::constant(1, 2)), Error);
  CHECK_THROWS_AS(series_log(TruncSeries(2)), Error);
  CHECK_THROWS_AS(TruncSeries(2) + TruncSeries(3), Error);
}

TEST_CASE("series random round trips and ring axioms") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    int cap = 1 + t % 6;
    auto s = random_series(rng, cap, true);
    CHECK(series_log(series_exp(s)) == s);
    auto u = s + TruncSeries::constant(1, cap);
    CHECK(series_exp(series_log(u)) == u);
    auto a = random_series(rng, cap, false), b = random_series(rng, cap, false), c = random_series(rng, cap, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK(exp_of_multiple(-2, 3) == series_exp(TruncSeries::variable(3) * Rational(-2)));
}

TEST_CASE("determinants") {
  CHECK(det_series(SeriesMatrix(0, 0, TruncSeries(2)), 2) == TruncSeries::constant(1, 2));
  SeriesMatrix id(3, 3, TruncSeries(4));
  for (int i = 0; i < 3; ++i) id.at(i, i) = TruncSeries::constant(1, 4);
  CHECK(det_series(id, 4) == TruncSeries::constant(1, 4));

  const int d = 2;
  auto one = TruncSeries::constant(1, d), x = TruncSeries::variable(d);
  SeriesMatrix m(2, 2, TruncSeries(d));
  m.at(0, 0) = one + x;
  m.at(0, 1) = x;
  m.at(1, 0) = x;
  m.at(1, 1) = one - x;
  // Hand cofactor: (1+x)(1-x) - x*x = 1 - 2x^2.
  CHECK(det_series(m, d) == TruncSeries(d, {1, 0, -2}));
  CHECK_THROWS_AS(det_series(SeriesMatrix(2, 3, TruncSeries(2)), 2), Error);

  // Random rational matrices against Laplace expansion.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-3, 3);
  std::function<Rational(const RatMatrix&)> laplace = [&](const RatMatrix& a) -> Rational {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Rational acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
      RatMatrix minor(n - 1, n - 1, Rational(0));
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t k = 0, kk = 0; k < n; ++k)
          if (k != c) minor.at(r - 1, kk++) = a.at(r, k);
      Rational term = a.at(0, c) * laplace(minor);
      acc += (c % 2 == 0) ? term : Rational(-term);
    }
    return acc;
  };
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + t % 5;
    RatMatrix a(n, n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.at(r, c) = v(rng);
    CHECK(det_rational(a) == laplace(a));
  }
}

TEST_CASE("echelon_reduce examples") {
  std::vector<SparseVec> rows{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}};
  auto f = echelon_reduce(rows, 3);
  CHECK(f.pivots == std::vector<std::size_t>{0, 1});
  CHECK(f.rank() == 2);
  std::vector<SparseVec> dep{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}};
  CHECK(echelon_reduce(dep, 2).rank() == 1);
  CHECK(echelon_reduce(std::vector<SparseVec>{}, 4).rank() == 0);
}

TEST_CASE("echelon rank agrees with fraction-free oracle and is order independent") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t dim = 20;
    std::vector<SparseVec> rows;
    std::vector<std::vector<Integer>> dense;
    // Low-rank structure: combinations of a few seeds, to make the rank nontrivial.
    std::vector<std::vector<int>> seeds(12 + trial, std::vector<int>(dim));
    for (auto& s : seeds)
      for (auto& e : s) e = keep(rng) == 0 ? val(rng) : 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Integer> row(dim, 0);
      for (auto& s : seeds) {
        int c = val(rng);
        for (std::size_t k = 0; k < dim; ++k) row[k] += c * s[k];
      }
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t k = 0; k < dim; ++k) entries.emplace_back(k, Rational(row[k]));
      rows.push_back(make_sparse(entries));
      dense.push_back(row);
    }
    auto f = echelon_reduce(rows, dim);
    CHECK(f.rank() == oracle_rank(dense));
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto g = echelon_reduce(shuffled, dim);
    CHECK(g.pivots == f.pivots);
    CHECK(g.rows == f.rows);
    RowReducer red(dim);
    for (auto& r : rows) red.add(r);
    for (auto& r : rows) CHECK(red.normal_form(r).empty());
  }
}
