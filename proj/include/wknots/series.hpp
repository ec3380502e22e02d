#pragma once

#include <string>
#include <vector>

#include "wknots/rational.hpp"

namespace wk {

/// A power series in x over Q truncated after x^cap.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  explicit TruncSeries(int cap);
  TruncSeries(int cap, std::vector<Rational> coefficients);

  static TruncSeries constant(const Rational& c, int cap);
  /// The series x (zero when cap == 0).
  static TruncSeries variable(int cap);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[k]; }
  Rational& operator[](int k) { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& q);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& q) { return a *= q; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  void require_same_cap(const TruncSeries& o) const;
  std::vector<Rational> coeffs_;
};

/// exp(s); requires a zero constant term.
TruncSeries series_exp(const TruncSeries& s);
/// log(s); requires constant term 1.
TruncSeries series_log(const TruncSeries& s);
/// e^(c x) truncated.
TruncSeries exp_of_multiple(const Rational& c, int cap);

}  // namespace wk
