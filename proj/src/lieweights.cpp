#include "wknots/lieweights.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wk {

LieData::LieData(int dimension) : r_(dimension) {
  if (dimension < 0) throw Error("Lie algebra dimension must be >= 0");
  c_.assign(static_cast<std::size_t>(r_) * r_ * r_, Rational(0));
}

std::size_t LieData::index(int j, int k, int l) const {
  if (j < 1 || j > r_ || k < 1 || k > r_ || l < 1 || l > r_)
    throw Error("structure constant index out of range");
  return (static_cast<std::size_t>(j - 1) * r_ + (k - 1)) * r_ + (l - 1);
}

namespace {

// Strips comments and surrounding blanks.
std::string clean_line(std::string_view raw) {
  auto hash = raw.find('#');
  if (hash != std::string_view::npos) raw = raw.substr(0, hash);
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return s;
}

int parse_int(const std::string& s, int line, int col) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw ParseError("expected a positive integer, got '" + s + "'", line, col);
  return std::stoi(s);
}

}  // namespace

LieData parse_lie_data(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_dim = false;
  LieData L;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string s = clean_line(raw);
    if (s.empty()) continue;
    if (!have_dim) {
      const std::string key = "dimension=";
      if (s.rfind(key, 0) != 0) throw ParseError("expected 'dimension=<r>'", line_no, 1);
      L = LieData(parse_int(s.substr(key.size()), line_no, static_cast<int>(key.size()) + 1));
      have_dim = true;
      continue;
    }
    const auto close = s.find(']');
    if (s.rfind("c[", 0) != 0 || close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '=')
      throw ParseError("expected 'c[j,k,l]=q'", line_no, 1);
    std::vector<int> idx;
    std::stringstream parts(s.substr(2, close - 2));
    std::string part;
    while (std::getline(parts, part, ',')) idx.push_back(parse_int(part, line_no, 3));
    if (idx.size() != 3) throw ParseError("expected three indices", line_no, 3);
    for (int i : idx)
      if (i < 1 || i > L.dimension()) throw ParseError("index out of range", line_no, 3);
    Rational q;
    try {
      q = Rational(s.substr(close + 2));
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational '" + s.substr(close + 2) + "'", line_no, static_cast<int>(close) + 3);
    }
    L.set(idx[0], idx[1], idx[2], q);
  }
  if (!have_dim) throw ParseError("missing 'dimension=<r>'", line_no + 1, 1);
  return L;
}

std::string format_lie_data(const LieData& L) {
  std::ostringstream os;
  os << "dimension=" << L.dimension() << '\n';
  const int r = L.dimension();
  for (int j = 1; j <= r; ++j)
    for (int k = 1; k <= r; ++k)
      for (int l = 1; l <= r; ++l)
        if (L.c(j, k, l) != 0) os << "c[" << j << ',' << k << ',' << l << "]=" << L.c(j, k, l).get_str() << '\n';
  return os.str();
}

bool lie_validate(const LieData& L) {
  const int r = L.dimension();
  for (int j = 1; j <= r; ++j)
    for (int k = 1; k <= r; ++k)
      for (int l = 1; l <= r; ++l)
        if (L.c(j, k, l) != -L.c(k, j, l)) return false;
  // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0, coefficient of x_m.
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        for (int m = 1; m <= r; ++m) {
          Rational s = 0;
          for (int l = 1; l <= r; ++l)
            s += L.c(j, k, l) * L.c(i, l, m) + L.c(k, i, l) * L.c(j, l, m) + L.c(i, j, l) * L.c(k, l, m);
          if (s != 0) return false;
        }
  return true;
}

LieData lie_abelian(int r) { return LieData(r); }

LieData lie_two_dim() {
  LieData L(2);
  L.set(1, 2, 2, 1);
  L.set(2, 1, 2, -1);
  return L;
}

LieData lie_sl2() {
  LieData L(3);  // e = x1, f = x2, h = x3
  L.set(1, 2, 3, 1);
  L.set(2, 1, 3, -1);
  L.set(3, 1, 1, 2);
  L.set(1, 3, 1, -2);
  L.set(3, 2, 2, -2);
  L.set(2, 3, 2, 2);
  return L;
}

PBWElement PBWElement::unit(int rank, int factors) {
  PBWElement e(rank, factors);
  e.add(Monomial(factors), 1);
  return e;
}

void PBWElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != factors_) throw Error("PBWElement: wrong number of tensor factors");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  if (o.rank_ != rank_ || o.factors_ != factors_) throw Error("PBWElement: incompatible operands");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PBWElement& PBWElement::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

std::string PBWElement::str() const {
  if (terms_.empty()) return "0";
  auto gen_name = [&](int g) {
    return g < rank_ ? "phi" + std::to_string(g + 1) : "x" + std::to_string(g - rank_ + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    std::vector<std::string> factors;
    for (const auto& word : mono) {
      std::string f;
      std::size_t i = 0;
      while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!f.empty()) f += ' ';
        f += gen_name(word[i]);
        if (j - i > 1) f += '^' + std::to_string(j - i);
        i = j;
      }
      factors.push_back(f.empty() ? "1" : f);
    }
    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? " | " : "") + factors[i];
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << ' ';
    else if (body == "1" && factors.size() == 1) {
      os << "1";
      continue;
    }
    os << body;
  }
  return os.str();
}

namespace {

using WordTerms = std::map<std::vector<int>, Rational>;

// Straightening of single-factor words, memoized for one LieData.
class Straightener {
 public:
  explicit Straightener(const LieData& L) : L_(L), r_(L.dimension()) {}

  const WordTerms& normalize(const std::vector<int>& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    WordTerms out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out.emplace(w, 1);
    } else {
      // w = u b a v with b > a: u a b v + u [b,a] v.
      std::vector<int> swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      accumulate(out, normalize(swapped), 1);
      for (const auto& [g, q] : bracket(w[i], w[i + 1])) {
        std::vector<int> shorter(w.begin(), w.begin() + i);
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
        accumulate(out, normalize(shorter), q);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  static void accumulate(WordTerms& out, const WordTerms& in, const Rational& q) {
    for (const auto& [m, c] : in) {
      auto [it, fresh] = out.try_emplace(m, c * q);
      if (!fresh) {
        it->second += c * q;
        if (it->second == 0) out.erase(it);
      }
    }
  }

  // [g1, g2] as a combination of generators.
  std::vector<std::pair<int, Rational>> bracket(int g1, int g2) const {
    std::vector<std::pair<int, Rational>> out;
    const bool x1 = g1 >= r_;
    const bool x2 = g2 >= r_;
    if (!x1 && !x2) return out;
    for (int l = 1; l <= r_; ++l) {
      Rational q;
      if (x1 && x2) {
        q = L_.c(g1 - r_ + 1, g2 - r_ + 1, l);
        if (q != 0) out.emplace_back(r_ + l - 1, q);
      } else if (x1) {
        q = L_.b(g1 - r_ + 1, g2 + 1, l);
        if (q != 0) out.emplace_back(l - 1, q);
      } else {
        q = -L_.b(g2 - r_ + 1, g1 + 1, l);
        if (q != 0) out.emplace_back(l - 1, q);
      }
    }
    return out;
  }

  const LieData& L_;
  int r_;
  std::map<std::vector<int>, WordTerms> memo_;
};

// Tensor product of per-factor normal forms, scaled by q, added into `out`.
void add_tensor(PBWElement& out, const std::vector<const WordTerms*>& factors, const Rational& q) {
  PBWElement::Monomial mono(factors.size());
  auto rec = [&](auto&& self, std::size_t f, const Rational& c) -> void {
    if (f == factors.size()) {
      out.add(mono, c);
      return;
    }
    for (const auto& [w, k] : *factors[f]) {
      mono[f] = w;
      self(self, f + 1, c * k);
    }
  };
  rec(rec, 0, q);
}

int factor_count(const Skeleton& s) { return s.kind == SkeletonKind::Long ? 1 : s.strands; }

void add_weight(PBWElement& out, const ArrowDiagram& d, const Rational& coeff, Straightener& st) {
  const int r = out.rank();
  const int m = d.degree();
  const int n = out.factors();
  std::vector<int> label(m, 0);
  std::vector<std::vector<int>> words(n);
  std::vector<const WordTerms*> normal(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      for (auto& w : words) w.clear();
      if (d.skeleton().kind == SkeletonKind::Long) {
        words[0].assign(2 * m, 0);
        for (int a = 0; a < m; ++a) {
          words[0][d.arrows()[a].tail - 1] = label[a];
          words[0][d.arrows()[a].head - 1] = r + label[a];
        }
      } else {
        for (int a = 0; a < m; ++a) {
          words[d.arrows()[a].tail - 1].push_back(label[a]);
          words[d.arrows()[a].head - 1].push_back(r + label[a]);
        }
      }
      for (int f = 0; f < n; ++f) normal[f] = &st.normalize(words[f]);
      add_tensor(out, normal, coeff);
      return;
    }
    for (int l = 0; l < r; ++l) {
      label[i] = l;
      self(self, i + 1);
    }
  };
  if (m > 0 && r == 0) return;
  rec(rec, 0);
}

}  // namespace

PBWElement pbw_normalize(const std::vector<int>& word, const LieData& L) {
  for (int g : word)
    if (g < 0 || g >= 2 * L.dimension()) throw Error("generator index out of range");
  Straightener st(L);
  PBWElement out(L.dimension(), 1);
  add_tensor(out, {&st.normalize(word)}, 1);
  return out;
}

PBWElement pbw_product(const PBWElement& a, const PBWElement& b, const LieData& L) {
  if (a.rank() != L.dimension() || b.rank() != L.dimension() || a.factors() != b.factors())
    throw Error("pbw_product: incompatible operands");
  Straightener st(L);
  PBWElement out(L.dimension(), a.factors());
  std::vector<const WordTerms*> normal(a.factors());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (int f = 0; f < a.factors(); ++f) {
        std::vector<int> w = ma[f];
        w.insert(w.end(), mb[f].begin(), mb[f].end());
        normal[f] = &st.normalize(w);
      }
      add_tensor(out, normal, ca * cb);
    }
  return out;
}

PBWElement weight_system(const ArrowVector& v, const LieData& L) {
  if (!lie_validate(L)) throw Error("weight_system: invalid Lie data");
  Straightener st(L);
  PBWElement out(L.dimension(), factor_count(v.skeleton()));
  for (const auto& [d, c] : v.terms()) add_weight(out, d, c, st);
  return out;
}

PBWElement weight_system(const ArrowDiagram& d, const LieData& L) {
  return weight_system(ArrowVector::single(d), L);
}

}  // namespace wk
