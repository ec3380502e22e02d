#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wknots/arrows.hpp"

namespace wk {

/// A finite-dimensional Lie algebra g on the basis x_1..x_r, given by
/// [x_j, x_k] = sum_l c(j,k,l) x_l. Indices are 1-based.
class LieData {
 public:
  explicit LieData(int dimension = 0);

  int dimension() const { return r_; }
  const Rational& c(int j, int k, int l) const { return c_[index(j, k, l)]; }
  void set(int j, int k, int l, const Rational& q) { c_[index(j, k, l)] = q; }

  /// Constants of the induced bracket on g*: [x_j, phi^i] = -sum_l c(j,l,i) phi^l.
  /// b(j,i,l) is the coefficient of phi^l.
  Rational b(int j, int i, int l) const { return -c(j, l, i); }

 private:
  std::size_t index(int j, int k, int l) const;
  int r_;
  std::vector<Rational> c_;
};

/// Text format: a line `dimension=<r>` followed by lines `c[j,k,l]=q` for the
/// nonzero constants (both orders of j, k must be listed). `#` starts a comment.
LieData parse_lie_data(std::string_view text);
std::string format_lie_data(const LieData& L);

/// Antisymmetry and the Jacobi identity, exactly.
bool lie_validate(const LieData& L);

/// Fixtures.
LieData lie_abelian(int r);
/// [x1, x2] = x2.
LieData lie_two_dim();
/// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieData lie_sl2();

/// An element of U(Ig)^{tensor n}, Ig = g* semidirect g. Generators are numbered
/// 0..r-1 for phi^1..phi^r and r..2r-1 for x_1..x_r; a monomial holds one
/// nondecreasing generator word per tensor factor, so every phi precedes every x.
class PBWElement {
 public:
  using Monomial = std::vector<std::vector<int>>;

  PBWElement() = default;
  PBWElement(int rank, int factors) : rank_(rank), factors_(factors) {}
  static PBWElement unit(int rank, int factors);

  int rank() const { return rank_; }
  int factors() const { return factors_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times an already ordered monomial.
  void add(const Monomial& m, const Rational& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator*=(const Rational& q);
  friend bool operator==(const PBWElement&, const PBWElement&) = default;

  /// "phi1 x1 + 2 phi2 x1^2"; tensor factors are joined by " | ". Zero prints "0".
  std::string str() const;

 private:
  int rank_ = 0;
  int factors_ = 1;
  std::map<Monomial, Rational> terms_;
};

/// Product in U(Ig)^{tensor n}, straightened back to PBW order.
PBWElement pbw_product(const PBWElement& a, const PBWElement& b, const LieData& L);
/// Straightens an arbitrary generator word (one tensor factor).
PBWElement pbw_normalize(const std::vector<int>& word, const LieData& L);

/// Each arrow contributes sum_i phi^i at its tail and x_i at its head, read in
/// order along each strand (on strands(n), in the order of the arrow word).
/// Throws Error when L fails lie_validate.
PBWElement weight_system(const ArrowVector& v, const LieData& L);
PBWElement weight_system(const ArrowDiagram& d, const LieData& L);

}  // namespace wk
