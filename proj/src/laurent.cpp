#include "wknots/laurent.hpp"

#include <sstream>

#include "wknots/series.hpp"

namespace wk {

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::initializer_list<long> coeffs, int low) {
  LaurentPoly p;
  int e = low;
  for (long c : coeffs) {
    if (c != 0) p.terms_[e] = c;
    ++e;
  }
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw Error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw Error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    Integer& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    Integer& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, Integer> out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  terms_.clear();
  for (auto& [e, c] : out)
    if (c != 0) terms_.emplace(e, std::move(c));
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  return laurent_normalize(*this) == laurent_normalize(inverted_variable());
}

TruncSeries LaurentPoly::at_exp(int degree_cap) const {
  TruncSeries out(degree_cap);
  for (const auto& [e, c] : terms_) out += exp_of_multiple(Rational(e), degree_cap) * Rational(c);
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "X";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string LaurentPoly::term_list() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " ";
    first = false;
    os << c.get_str() << "*X^" << e;
  }
  return os.str();
}

LaurentPoly laurent_normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw Error("cannot normalize zero");
  LaurentPoly r = p.shifted(-p.min_exponent());
  if (r.coefficient(0) < 0) r = -r;
  return r;
}

}  // namespace wk
