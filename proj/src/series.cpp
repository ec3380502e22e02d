#include "wknots/series.hpp"

#include <sstream>

namespace wk {

TruncSeries::TruncSeries(int cap) {
  if (cap < 0) throw Error("series degree cap must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(cap) + 1, Rational(0));
}

TruncSeries::TruncSeries(int cap, std::vector<Rational> coefficients) : TruncSeries(cap) {
  for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k)
    coeffs_[k] = std::move(coefficients[k]);
}

TruncSeries TruncSeries::constant(const Rational& c, int cap) {
  TruncSeries s(cap);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::variable(int cap) {
  TruncSeries s(cap);
  if (cap >= 1) s.coeffs_[1] = 1;
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void TruncSeries::require_same_cap(const TruncSeries& o) const {
  if (cap() != o.cap()) throw Error("series degree caps differ");
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_cap(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_cap(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  require_same_cap(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= cap(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].get_str() << ")";
    if (k > 0) os << "*x^" << k;
  }
  if (first) os << "0";
  os << " + O(x^" << cap() + 1 << ")";
  return os.str();
}

TruncSeries series_exp(const TruncSeries& s) {
  if (s[0] != 0) throw Error("series_exp requires a zero constant term");
  const int d = s.cap();
  TruncSeries result = TruncSeries::constant(1, d);
  TruncSeries power = TruncSeries::constant(1, d);
  for (int k = 1; k <= d; ++k) {
    power *= s;
    power *= Rational(1, k);
    result += power;
  }
  return result;
}

TruncSeries series_log(const TruncSeries& s) {
  if (s[0] != 1) throw Error("series_log requires constant term 1");
  const int d = s.cap();
  TruncSeries u = s - TruncSeries::constant(1, d);
  TruncSeries result(d);
  TruncSeries power = TruncSeries::constant(1, d);
  for (int k = 1; k <= d; ++k) {
    power *= u;
    result += power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return result;
}

TruncSeries exp_of_multiple(const Rational& c, int cap) {
  TruncSeries s(cap);
  Rational term = 1;
  for (int k = 0; k <= cap; ++k) {
    s[k] = term;
    term *= c;
    term /= k + 1;
  }
  return s;
}

}  // namespace wk
