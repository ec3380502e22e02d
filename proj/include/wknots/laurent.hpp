#pragma once

#include <map>
#include <string>

#include "wknots/rational.hpp"

namespace wk {

class TruncSeries;

/// An element of Z[X, X^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Integer& c, int exponent);
  /// X^e.
  static LaurentPoly power(int exponent) { return monomial(1, exponent); }

  /// Builds from ascending coefficients c[0] + c[1] X + ... shifted by X^low.
  static LaurentPoly from_coefficients(std::initializer_list<long> coeffs, int low = 0);

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by X^k.
  LaurentPoly shifted(int k) const;
  /// X -> X^-1.
  LaurentPoly inverted_variable() const;
  Integer evaluate_at_one() const;
  bool is_palindromic() const;

  /// The truncated power series of p(e^x).
  TruncSeries at_exp(int degree_cap) const;

  /// Human form, ascending powers: "1 - X + X^2".
  std::string str() const;
  /// Machine form: "c_k X^k" terms separated by spaces, e.g. "1*X^0 -1*X^1 1*X^2".
  std::string term_list() const;

 private:
  std::map<int, Integer> terms_;
};

/// The unique representative u*p, u = +-X^k, with lowest exponent 0 and positive lowest coefficient.
LaurentPoly laurent_normalize(const LaurentPoly& p);

}  // namespace wk
