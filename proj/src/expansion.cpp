#include "wknots/expansion.hpp"

#include <sstream>

#include "wknots/alexander.hpp"

namespace wk {

namespace {

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

TruncatedExpansion unit(Skeleton skeleton, int cap) {
  if (cap < 0) throw Error("degree must be >= 0");
  TruncatedExpansion z{skeleton, cap, {}, {}};
  z.components.reserve(cap + 1);
  z.components.push_back(ArrowVector::single(ArrowDiagram(skeleton, {})));
  for (int m = 1; m <= cap; ++m) z.components.emplace_back(skeleton, m);
  return z;
}

// z <- z * exp(c a) for a single arrow a on strands.
void multiply_exp(TruncatedExpansion& z, Arrow a, const Rational& c) {
  std::vector<ArrowVector> powers;  // c^j/j! a^j
  std::vector<Arrow> word;
  Rational coeff = 1;
  for (int j = 0; j <= z.cap; ++j) {
    powers.push_back(ArrowVector::single(ArrowDiagram(z.skeleton, word), coeff));
    word.push_back(a);
    coeff *= c;
    coeff /= j + 1;
  }
  std::vector<ArrowVector> next;
  for (int m = 0; m <= z.cap; ++m) {
    ArrowVector acc(z.skeleton, m);
    for (int j = 0; j <= m; ++j) {
      if (z.components[m - j].is_zero()) continue;
      acc += z.components[m - j] * powers[j];
    }
    next.push_back(std::move(acc));
  }
  z.components = std::move(next);
}

}  // namespace

TruncatedExpansion zed_braid(const BraidWord& b, int cap) {
  b.validate();
  TruncatedExpansion z = unit(Skeleton::braid(b.n), cap);
  std::vector<int> at(b.n);  // strand label sitting at each position
  for (int p = 0; p < b.n; ++p) at[p] = p + 1;
  for (const auto& l : b.letters) {
    const int i = l.index - 1;
    switch (l.gen) {
      case BraidGen::Sigma:
        multiply_exp(z, {at[i], at[i + 1]}, 1);
        break;
      case BraidGen::SigmaInv:
        multiply_exp(z, {at[i + 1], at[i]}, -1);
        break;
      case BraidGen::Virtual:
        break;
      case BraidGen::Flip:
        throw Error("zed_braid: flips have no expansion here");
    }
    std::swap(at[i], at[i + 1]);
  }
  z.permutation = braid_skeleton(b);
  return z;
}

TruncatedExpansion expansion_product(const TruncatedExpansion& x, const TruncatedExpansion& y) {
  if (x.skeleton != y.skeleton || x.skeleton.kind != SkeletonKind::Strands)
    throw Error("expansion_product: both factors must live on the same strands skeleton");
  const int n = x.skeleton.strands;
  if (static_cast<int>(x.permutation.size()) != n || static_cast<int>(y.permutation.size()) != n)
    throw Error("expansion_product: missing skeleton permutation");
  const int cap = std::min(x.cap, y.cap);
  // The strand of y starting at position j is the strand of x ending there.
  std::vector<int> rename(n);
  for (int p = 1; p <= n; ++p) rename[x.permutation[p - 1] - 1] = p;
  std::vector<ArrowVector> ry;
  for (int m = 0; m <= cap; ++m) ry.push_back(relabel_strands(y.components[m], rename));

  TruncatedExpansion z = unit(x.skeleton, cap);
  for (int m = 0; m <= cap; ++m) {
    ArrowVector acc(x.skeleton, m);
    for (int j = 0; j <= m; ++j) {
      if (x.components[j].is_zero() || ry[m - j].is_zero()) continue;
      acc += x.components[j] * ry[m - j];
    }
    z.components[m] = std::move(acc);
  }
  z.permutation.resize(n);
  for (int p = 1; p <= n; ++p) z.permutation[p - 1] = y.permutation[x.permutation[p - 1] - 1];
  return z;
}

TruncatedExpansion zed_knot(const GaussDiagram& k, int cap) {
  TruncatedExpansion z = unit(Skeleton::long_strand(), cap);
  const int n = k.crossings();
  const int stride = cap + 1;
  std::vector<int> mult(n, 0);
  // Distributes the remaining degree over arrows idx..n-1.
  auto rec = [&](auto&& self, int idx, int used) -> void {
    if (idx == n) {
      if (used == 0) return;
      std::vector<Arrow> arrows;
      Rational c = 1;
      for (int i = 0; i < n; ++i) {
        const GaussArrow& g = k.arrow(i);
        for (int copy = 0; copy < mult[i]; ++copy)
          arrows.push_back({g.tail * stride + copy, g.head * stride + copy});
        if (mult[i] > 0) c *= Rational(g.sign < 0 && mult[i] % 2 ? -1 : 1) / factorial(mult[i]);
      }
      z.components[used].add(ArrowDiagram(z.skeleton, std::move(arrows)), c);
      return;
    }
    for (int j = 0; used + j <= cap; ++j) {
      mult[idx] = j;
      self(self, idx + 1, used + j);
    }
    mult[idx] = 0;
  };
  rec(rec, 0, 0);
  return z;
}

ProjectedExpansion project_expansion(const TruncatedExpansion& z, RelationSet rels) {
  ProjectedExpansion out;
  for (int m = 0; m <= z.cap; ++m) out.push_back(quotient(z.skeleton, m, rels)->project(z.components[m]));
  return out;
}

RelationSet knot_relations(RelationSet flags) {
  RelationSet r{Relation::TC, Relation::FourT};
  if (flags.contains(Relation::FI)) r = r.with(Relation::FI);
  if (flags.contains(Relation::RI)) r = r.with(Relation::RI);
  return r;
}

namespace {

// Solves sum_j c_j cols[j] = target exactly. Returns false when inconsistent;
// `residual` then receives the reduced target.
bool solve_columns(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& target,
                   std::vector<Rational>& solution, std::vector<Rational>& residual) {
  const std::size_t rows = target.size();
  const std::size_t n = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) m[r][j] = cols[j][r];
    m[r][n] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  residual.assign(rows, Rational(0));
  bool ok = true;
  for (std::size_t r = row; r < rows; ++r) {
    residual[r] = m[r][n];
    if (m[r][n] != 0) ok = false;
  }
  solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) solution[pivot_col[i]] = m[i][n];
  return ok;
}

}  // namespace

WheelCoordinates wheels_reduce(const TruncatedExpansion& z, RelationSet flags) {
  if (z.skeleton.kind != SkeletonKind::Long) throw Error("wheels_reduce: expansion must live on the long strand");
  const RelationSet rels = knot_relations(flags);
  WheelCoordinates out;
  for (int m = 0; m <= z.cap; ++m) {
    const auto q = quotient(z.skeleton, m, rels);
    const auto monos = wheel_monomial_basis(m, rels);
    std::vector<std::vector<Rational>> cols;
    for (const auto& mono : monos) cols.push_back(q->project(monomial_to_arrows(mono)));
    std::vector<Rational> sol, residual;
    if (!solve_columns(cols, q->project(z.components[m]), sol, residual)) {
      std::ostringstream os;
      os << "wheels_reduce: degree " << m << " component is not in the wheel span; residual";
      for (const auto& r : residual)
        if (r != 0) os << ' ' << r.get_str();
      throw Error(os.str());
    }
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (sol[i] != 0) out[monos[i]] = sol[i];
  }
  return out;
}

LogPrediction predicted_log(const GaussDiagram& k, int cap, RelationSet flags) {
  LogPrediction p;
  if (cap < 1) return p;
  const bool fi = flags.contains(Relation::FI);
  const bool ri = flags.contains(Relation::RI);
  if (!fi) p.a = self_linking(k);
  const TruncSeries ell = series_log(alexander_matrix(k, cap).series);
  if (!fi && !ri) {
    Rational back = 0;
    for (const auto& g : k.arrows())
      if (g.direction() < 0) back += g.sign;
    back -= ell[1];
    if (back != 0) p.wheels[1] = back;
  }
  for (int j = 2; j <= cap; ++j)
    if (ell[j] != 0) p.wheels[j] = -ell[j];
  return p;
}

WheelCoordinates predicted_from_alexander(const GaussDiagram& k, int cap, RelationSet flags) {
  const LogPrediction p = predicted_log(k, cap, flags);
  const RelationSet rels = knot_relations(flags);
  WheelCoordinates out;
  // exp of a sum of commuting generators: each monomial a^p w_k^{n_k} gets
  // a^p/p! times the product of c_k^{n_k}/n_k!.
  for (int m = 0; m <= cap; ++m) {
    for (const auto& mono : wheel_monomial_basis(m, rels)) {
      Rational c = 1;
      for (int i = 0; i < mono.a_power; ++i) c *= p.a;
      c /= factorial(mono.a_power);
      std::size_t i = 0;
      while (i < mono.wheels.size() && c != 0) {
        std::size_t j = i;
        while (j < mono.wheels.size() && mono.wheels[j] == mono.wheels[i]) ++j;
        const auto it = p.wheels.find(mono.wheels[i]);
        const Rational w = it == p.wheels.end() ? Rational(0) : it->second;
        for (std::size_t r = i; r < j; ++r) c *= w;
        c /= factorial(static_cast<int>(j - i));
        i = j;
      }
      if (c != 0) out[mono] = c;
    }
  }
  return out;
}

}  // namespace wk
