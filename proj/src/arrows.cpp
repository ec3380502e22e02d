#include "wknots/arrows.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "wknots/embedded.hpp"

namespace wk {

Skeleton Skeleton::braid(int n) {
  if (n < 1) throw Error("strands(n) needs n >= 1");
  return {SkeletonKind::Strands, n};
}

std::string Skeleton::str() const {
  return kind == SkeletonKind::Long ? "long" : "strands(" + std::to_string(strands) + ")";
}

namespace {

bool disjoint(const Arrow& a, const Arrow& b) {
  return a.tail != b.tail && a.tail != b.head && a.head != b.tail && a.head != b.head;
}

// Lexicographically least word in the commutation class: repeatedly emit the
// smallest letter that commutes with everything before it.
std::vector<Arrow> trace_normal_form(std::vector<Arrow> word) {
  std::vector<Arrow> out;
  out.reserve(word.size());
  while (!word.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < word.size(); ++p) {
      if (!(word[p] < word[best])) continue;
      bool minimal = true;
      for (std::size_t q = 0; q < p && minimal; ++q) minimal = disjoint(word[p], word[q]);
      if (minimal) best = p;
    }
    out.push_back(word[best]);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

ArrowDiagram::ArrowDiagram(Skeleton skeleton, std::vector<Arrow> arrows) : skeleton_(skeleton) {
  if (skeleton.kind == SkeletonKind::Strands) {
    for (const auto& a : arrows)
      if (a.tail < 1 || a.head < 1 || a.tail > skeleton.strands || a.head > skeleton.strands || a.tail == a.head)
        throw Error("arrow (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") invalid on " + skeleton.str());
    arrows_ = trace_normal_form(std::move(arrows));
    return;
  }
  std::vector<std::pair<int, std::size_t>> ends;  // (position, 2 * arrow + is_head)
  ends.reserve(2 * arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    ends.emplace_back(arrows[i].tail, 2 * i);
    ends.emplace_back(arrows[i].head, 2 * i + 1);
  }
  std::sort(ends.begin(), ends.end());
  for (std::size_t e = 1; e < ends.size(); ++e)
    if (ends[e].first == ends[e - 1].first) throw Error("arrow endpoints must be distinct");
  arrows_.assign(arrows.size(), Arrow{});
  for (std::size_t e = 0; e < ends.size(); ++e) {
    auto& a = arrows_[ends[e].second / 2];
    (ends[e].second % 2 ? a.head : a.tail) = static_cast<int>(e) + 1;
  }
  std::sort(arrows_.begin(), arrows_.end());
}

std::string ArrowDiagram::str() const {
  std::ostringstream os;
  if (skeleton_.kind == SkeletonKind::Long) {
    os << '[';
    for (std::size_t i = 0; i < arrows_.size(); ++i) os << (i ? "," : "") << arrows_[i].tail << '>' << arrows_[i].head;
    os << ']';
    return os.str();
  }
  if (arrows_.empty()) return "1";
  for (std::size_t i = 0; i < arrows_.size(); ++i) os << (i ? " " : "") << "a(" << arrows_[i].tail << ',' << arrows_[i].head << ')';
  return os.str();
}

ArrowDiagram concatenate(const ArrowDiagram& a, const ArrowDiagram& b) {
  if (a.skeleton() != b.skeleton()) throw Error("cannot concatenate diagrams on different skeletons");
  std::vector<Arrow> arrows = a.arrows();
  const int shift = a.skeleton().kind == SkeletonKind::Long ? 2 * a.degree() : 0;
  for (const auto& x : b.arrows()) arrows.push_back({x.tail + shift, x.head + shift});
  return ArrowDiagram(a.skeleton(), std::move(arrows));
}

// ---------------------------------------------------------------------------

ArrowVector ArrowVector::single(const ArrowDiagram& d, const Rational& c) {
  ArrowVector v(d.skeleton(), d.degree());
  v.add(d, c);
  return v;
}

Rational ArrowVector::coefficient(const ArrowDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ArrowVector::check_compatible(const ArrowDiagram& d) const {
  if (d.skeleton() != skeleton_ || d.degree() != degree_)
    throw Error("diagram of degree " + std::to_string(d.degree()) + " on " + d.skeleton().str() +
                " added to a vector of degree " + std::to_string(degree_) + " on " + skeleton_.str());
}

void ArrowVector::add(const ArrowDiagram& d, const Rational& c) {
  check_compatible(d);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ArrowVector& ArrowVector::operator+=(const ArrowVector& o) {
  if (o.skeleton_ != skeleton_ || o.degree_ != degree_) throw Error("adding arrow vectors of different shapes");
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

ArrowVector& ArrowVector::operator-=(const ArrowVector& o) {
  if (o.skeleton_ != skeleton_ || o.degree_ != degree_) throw Error("subtracting arrow vectors of different shapes");
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

ArrowVector& ArrowVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, x] : terms_) x *= c;
  return *this;
}

std::string ArrowVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (c > 0 ? "+" : "") << c.get_str() << '*' << d.str();
  }
  return os.str();
}

ArrowVector operator*(const ArrowVector& a, const ArrowVector& b) {
  if (a.skeleton() != b.skeleton()) throw Error("multiplying arrow vectors on different skeletons");
  ArrowVector out(a.skeleton(), a.degree() + b.degree());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out.add(concatenate(da, db), ca * cb);
  return out;
}

ArrowDiagram relabel_strands(const ArrowDiagram& d, const std::vector<int>& perm) {
  if (d.skeleton().kind != SkeletonKind::Strands || static_cast<int>(perm.size()) != d.skeleton().strands)
    throw Error("strand relabeling needs a permutation of the strands");
  std::vector<Arrow> arrows;
  for (const auto& a : d.arrows()) arrows.push_back({perm[a.tail - 1], perm[a.head - 1]});
  return ArrowDiagram(d.skeleton(), std::move(arrows));
}

ArrowVector relabel_strands(const ArrowVector& v, const std::vector<int>& perm) {
  ArrowVector out(v.skeleton(), v.degree());
  for (const auto& [d, c] : v.terms()) out.add(relabel_strands(d, perm), c);
  return out;
}

ArrowVector delete_strand(const ArrowVector& v, int k) {
  const Skeleton& s = v.skeleton();
  if (s.kind != SkeletonKind::Strands || k < 1 || k > s.strands || s.strands < 2)
    throw Error("strand deletion needs strands(n), n >= 2, and 1 <= k <= n");
  const Skeleton smaller = Skeleton::braid(s.strands - 1);
  ArrowVector out(smaller, v.degree());
  auto shift = [k](int p) { return p > k ? p - 1 : p; };
  for (const auto& [d, c] : v.terms()) {
    bool touches = false;
    std::vector<Arrow> arrows;
    for (const auto& a : d.arrows()) {
      if (a.tail == k || a.head == k) touches = true;
      arrows.push_back({shift(a.tail), shift(a.head)});
    }
    if (!touches) out.add(ArrowDiagram(smaller, std::move(arrows)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<Arrow> strand_letters(int n) {
  std::vector<Arrow> letters;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) letters.push_back({i, j});
  return letters;
}

void for_each_word(const std::vector<Arrow>& letters, int length, const std::function<void(const std::vector<Arrow>&)>& f) {
  std::vector<Arrow> word(length);
  std::vector<std::size_t> digit(length, 0);
  if (letters.empty() && length > 0) return;
  while (true) {
    for (int p = 0; p < length; ++p) word[p] = letters[digit[p]];
    f(word);
    int p = length - 1;
    while (p >= 0 && ++digit[p] == letters.size()) digit[p--] = 0;
    if (p < 0) return;
  }
}

void long_matchings(std::vector<int>& partner, std::vector<Arrow>& arrows, std::vector<ArrowDiagram>& out) {
  const int slots = static_cast<int>(partner.size());
  int first = 0;
  while (first < slots && partner[first] != -1) ++first;
  if (first == slots) {
    out.emplace_back(Skeleton::long_strand(), arrows);
    return;
  }
  for (int other = first + 1; other < slots; ++other) {
    if (partner[other] != -1) continue;
    partner[first] = other;
    partner[other] = first;
    for (int dir = 0; dir < 2; ++dir) {
      arrows.push_back(dir == 0 ? Arrow{first + 1, other + 1} : Arrow{other + 1, first + 1});
      long_matchings(partner, arrows, out);
      arrows.pop_back();
    }
    partner[first] = partner[other] = -1;
  }
}

}  // namespace

std::vector<ArrowDiagram> enumerate_diagrams(Skeleton skeleton, int m) {
  if (m < 0) throw Error("degree must be >= 0");
  std::vector<ArrowDiagram> out;
  if (skeleton.kind == SkeletonKind::Long) {
    std::vector<int> partner(2 * m, -1);
    std::vector<Arrow> arrows;
    long_matchings(partner, arrows, out);
  } else {
    for_each_word(strand_letters(skeleton.strands), m,
                  [&](const std::vector<Arrow>& w) { out.emplace_back(skeleton, w); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t diagram_count(Skeleton skeleton, int m) {
  if (m < 0) throw Error("degree must be >= 0");
  if (skeleton.kind == SkeletonKind::Long) {
    std::size_t c = 1;
    for (int k = m + 1; k <= 2 * m; ++k) c *= static_cast<std::size_t>(k);
    return c;
  }
  // Cartier-Foata: sum_k (-1)^k M_k c_{m-k} = [m == 0], where M_k counts sets
  // of k pairwise commuting letters, i.e. k disjoint ordered strand pairs.
  const long n = skeleton.strands;
  std::vector<long> cliques{1};
  for (long k = 1; 2 * k <= n; ++k) {
    // Ordered choices of k disjoint ordered pairs, divided by k!.
    long ordered = 1;
    for (long p = 0; p < 2 * k; ++p) ordered *= n - p;
    long fact = 1;
    for (long p = 2; p <= k; ++p) fact *= p;
    cliques.push_back(ordered / fact);
  }
  std::vector<long> c(m + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= m; ++j) {
    long acc = 0;
    for (int k = 1; k < static_cast<int>(cliques.size()) && k <= j; ++k) acc += (k % 2 ? 1 : -1) * cliques[k] * c[j - k];
    c[j] = acc;
  }
  return static_cast<std::size_t>(c[m]);
}

// ---------------------------------------------------------------------------
// Relation sets and templates

namespace {

constexpr std::pair<Relation, const char*> kRelationNames[] = {
    {Relation::SixT, "6t"}, {Relation::TC, "tc"}, {Relation::FourT, "4t"},
    {Relation::FI, "fi"},   {Relation::RI, "ri"}, {Relation::CC, "cc"},
};

}  // namespace

RelationSet::RelationSet(std::initializer_list<Relation> rs) {
  for (auto r : rs) bits_ |= 1u << static_cast<int>(r);
}

RelationSet RelationSet::with(Relation r) const {
  RelationSet out = *this;
  out.bits_ |= 1u << static_cast<int>(r);
  return out;
}

std::string relation_name(Relation r) {
  for (const auto& [rel, name] : kRelationNames)
    if (rel == r) return name;
  return "?";
}

std::string RelationSet::str() const {
  std::string out;
  for (const auto& [rel, name] : kRelationNames)
    if (contains(rel)) out += (out.empty() ? "" : ",") + std::string(name);
  return out.empty() ? "none" : out;
}

RelationSet parse_relation_set(std::string_view text) {
  RelationSet out;
  std::string token;
  auto flush = [&] {
    if (token.empty() || token == "none") {
      token.clear();
      return;
    }
    bool found = false;
    for (const auto& [rel, name] : kRelationNames)
      if (token == name) {
        out = out.with(rel);
        found = true;
      }
    if (!found) throw Error("unknown relation id '" + token + "'");
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(ch))) token += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  flush();
  return out;
}

std::vector<RelatorTemplate> parse_relator_templates(std::string_view text) {
  std::vector<RelatorTemplate> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, line_no, static_cast<int>(i) + 1); };
    skip_ws();
    if (i == line.size()) continue;
    const std::size_t colon = line.find(':', i);
    if (colon == std::string_view::npos) throw fail("expected 'NAME:'");
    std::string name(line.substr(i, colon - i));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    RelatorTemplate t;
    t.relation = [&] {
      RelationSet s;
      try {
        s = parse_relation_set(name);
      } catch (const Error&) {
        throw fail("unknown relation '" + name + "'");
      }
      for (const auto& [rel, n] : kRelationNames)
        if (s == RelationSet{rel}) return rel;
      throw fail("expected a single relation name");
    }();
    i = colon + 1;
    std::map<char, int> segment;
    auto seg = [&](char c) {
      if (!std::isalpha(static_cast<unsigned char>(c))) throw fail("segment labels are letters");
      auto [it, inserted] = segment.try_emplace(c, static_cast<int>(segment.size()));
      return it->second;
    };
    while (true) {
      skip_ws();
      if (i == line.size()) break;
      if (line[i] != '+' && line[i] != '-') throw fail("expected '+' or '-' to start a term");
      Rational coeff = line[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
      if (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        std::size_t j = i;
        while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '/')) ++j;
        coeff *= Rational(std::string(line.substr(i, j - i)));
        i = j;
        if (i == line.size() || line[i] != '*') throw fail("expected '*' after a coefficient");
        ++i;
      }
      std::vector<TemplateLetter> word;
      while (true) {
        skip_ws();
        if (i == line.size() || line[i] == '+' || line[i] == '-') break;
        TemplateLetter l;
        l.kind = line[i];
        if (l.kind != 'a' && l.kind != 'R' && l.kind != 'L') throw fail("expected a(x,y), R(x) or L(x)");
        ++i;
        if (i == line.size() || line[i] != '(') throw fail("expected '('");
        ++i;
        l.from = seg(i < line.size() ? line[i] : ' ');
        ++i;
        if (l.kind == 'a') {
          if (i == line.size() || line[i] != ',') throw fail("expected ','");
          ++i;
          l.to = seg(i < line.size() ? line[i] : ' ');
          ++i;
          if (l.to == l.from) throw fail("a(x,x) is not allowed; use R(x) or L(x)");
        } else {
          l.to = l.from;
        }
        if (i == line.size() || line[i] != ')') throw fail("expected ')'");
        ++i;
        word.push_back(l);
      }
      if (word.empty()) throw fail("empty term");
      if (t.terms.empty()) t.degree = static_cast<int>(word.size());
      else if (t.degree != static_cast<int>(word.size())) throw fail("terms of a template must have equal degree");
      t.terms.emplace_back(coeff, std::move(word));
    }
    if (t.terms.empty()) throw fail("template without terms");
    t.segments = static_cast<int>(segment.size());
    out.push_back(std::move(t));
  }
  return out;
}

const std::vector<RelatorTemplate>& relator_templates() {
  static const std::vector<RelatorTemplate> templates = parse_relator_templates(embedded::arrow_relators());
  return templates;
}

// ---------------------------------------------------------------------------
// Relator instantiation

namespace {

struct Endpoint {
  int arrow;
  bool head;
};

ArrowDiagram diagram_from_endpoints(const std::vector<Endpoint>& ends, int arrows) {
  std::vector<Arrow> out(arrows);
  for (std::size_t p = 0; p < ends.size(); ++p) (ends[p].head ? out[ends[p].arrow].head : out[ends[p].arrow].tail) = static_cast<int>(p) + 1;
  return ArrowDiagram(Skeleton::long_strand(), std::move(out));
}

std::vector<Endpoint> endpoints_of(const ArrowDiagram& d) {
  std::vector<Endpoint> ends(2 * d.degree());
  for (int i = 0; i < d.degree(); ++i) {
    ends[d.arrows()[i].tail - 1] = {i, false};
    ends[d.arrows()[i].head - 1] = {i, true};
  }
  return ends;
}

// Calls f(seq) for every interleaving of `base` endpoints (entries -1) with `s`
// distinct markers (entries 0..s-1).
void for_each_placement(int base, int s, const std::function<void(const std::vector<int>&)>& f) {
  const int total = base + s;
  std::vector<int> seq(total, -1);  // -1 = base endpoint, else marker id
  std::vector<bool> used(s, false);
  std::function<void(int, int)> rec = [&](int pos, int placed) {
    if (pos == total) {
      if (placed == s) f(seq);
      return;
    }
    if (total - pos > s - placed) {
      seq[pos] = -1;
      rec(pos + 1, placed);
    }
    for (int x = 0; x < s; ++x) {
      if (used[x]) continue;
      used[x] = true;
      seq[pos] = x;
      rec(pos + 1, placed + 1);
      used[x] = false;
    }
    seq[pos] = -1;
  };
  rec(0, 0);
}

void for_each_relator(Skeleton skeleton, int m, RelationSet rels, const std::function<void(ArrowVector&&)>& emit) {
  if (m < 0) throw Error("degree must be >= 0");
  for (const auto& t : relator_templates()) {
    if (!rels.contains(t.relation) || t.degree > m) continue;
    const int rest = m - t.degree;
    if (skeleton.kind == SkeletonKind::Strands) {
      for (const auto& [c, w] : t.terms)
        for (const auto& l : w)
          if (l.kind != 'a') throw Error(relation_name(t.relation) + " relators exist only on the long strand");
      const int n = skeleton.strands;
      if (t.segments > n) continue;
      std::vector<int> assign(n);
      std::iota(assign.begin(), assign.end(), 1);
      const auto letters = strand_letters(n);
      // Every injective segment -> strand map appears as the prefix of some
      // permutation; visit each prefix once.
      std::set<std::vector<int>> seen;
      do {
        std::vector<int> map(assign.begin(), assign.begin() + t.segments);
        if (!seen.insert(map).second) continue;
        std::vector<std::vector<Arrow>> words;
        for (const auto& [c, w] : t.terms) {
          std::vector<Arrow> word;
          for (const auto& l : w) word.push_back({map[l.from], map[l.to]});
          words.push_back(std::move(word));
        }
        for (int left = 0; left <= rest; ++left) {
          for_each_word(letters, left, [&](const std::vector<Arrow>& u) {
            for_each_word(letters, rest - left, [&](const std::vector<Arrow>& v) {
              ArrowVector rel(skeleton, m);
              for (std::size_t k = 0; k < words.size(); ++k) {
                std::vector<Arrow> full = u;
                full.insert(full.end(), words[k].begin(), words[k].end());
                full.insert(full.end(), v.begin(), v.end());
                rel.add(ArrowDiagram(skeleton, std::move(full)), t.terms[k].first);
              }
              if (!rel.is_zero()) emit(std::move(rel));
            });
          });
        }
      } while (std::next_permutation(assign.begin(), assign.end()));
      continue;
    }
    // Long strand: each segment's contents per term, as endpoints of template arrows.
    std::vector<std::vector<std::vector<Endpoint>>> contents(t.terms.size(), std::vector<std::vector<Endpoint>>(t.segments));
    for (std::size_t k = 0; k < t.terms.size(); ++k) {
      const auto& w = t.terms[k].second;
      for (int li = 0; li < static_cast<int>(w.size()); ++li) {
        const auto& l = w[li];
        if (l.kind == 'a') {
          contents[k][l.from].push_back({li, false});
          contents[k][l.to].push_back({li, true});
        } else if (l.kind == 'R') {
          contents[k][l.from].push_back({li, false});
          contents[k][l.from].push_back({li, true});
        } else {
          contents[k][l.from].push_back({li, true});
          contents[k][l.from].push_back({li, false});
        }
      }
    }
    for (const auto& base : enumerate_diagrams(skeleton, rest)) {
      const auto base_ends = endpoints_of(base);
      for_each_placement(2 * rest, t.segments, [&](const std::vector<int>& seq) {
        ArrowVector rel(skeleton, m);
        for (std::size_t k = 0; k < t.terms.size(); ++k) {
          std::vector<Endpoint> ends;
          ends.reserve(2 * m);
          std::size_t b = 0;
          for (int x : seq) {
            if (x < 0) {
              ends.push_back(base_ends[b++]);
            } else {
              for (const auto& e : contents[k][x]) ends.push_back({rest + e.arrow, e.head});
            }
          }
          rel.add(diagram_from_endpoints(ends, m), t.terms[k].first);
        }
        if (!rel.is_zero()) emit(std::move(rel));
      });
    }
  }
}

}  // namespace

std::vector<ArrowVector> generate_relations(Skeleton skeleton, int m, RelationSet rels) {
  std::vector<ArrowVector> out;
  for_each_relator(skeleton, m, rels, [&](ArrowVector&& v) { out.push_back(std::move(v)); });
  return out;
}

// ---------------------------------------------------------------------------
// Quotient

namespace {

// Union-find over diagrams where value(i) = ratio[i] * value(parent[i]).
class ScaledUnionFind {
 public:
  explicit ScaledUnionFind(std::size_t n) : parent_(n), ratio_(n, Rational(1)), zero_(n, false) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, Rational> find(std::size_t x) {
    if (parent_[x] == x) return {x, Rational(1)};
    auto [root, f] = find(parent_[x]);
    ratio_[x] *= f;
    parent_[x] = root;
    return {root, ratio_[x]};
  }

  // a * value(x) + b * value(y) = 0.
  void relate(std::size_t x, const Rational& a, std::size_t y, const Rational& b) {
    auto [rx, fx] = find(x);
    auto [ry, fy] = find(y);
    if (rx == ry) {
      if (a * fx + b * fy != 0) zero_[rx] = true;
      return;
    }
    if (rx < ry) {
      parent_[ry] = rx;
      ratio_[ry] = -(a * fx) / (b * fy);
      zero_[rx] = zero_[rx] || zero_[ry];
    } else {
      parent_[rx] = ry;
      ratio_[rx] = -(b * fy) / (a * fx);
      zero_[ry] = zero_[ry] || zero_[rx];
    }
  }

  void kill(std::size_t x) { zero_[find(x).first] = true; }
  bool is_zero_root(std::size_t root) const { return zero_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Rational> ratio_;
  std::vector<bool> zero_;
};

}  // namespace

QuotientSpace::QuotientSpace(Skeleton skeleton, int m, RelationSet rels)
    : skeleton_(skeleton), degree_(m), relations_(rels), diagrams_(enumerate_diagrams(skeleton, m)) {
  for (std::size_t i = 0; i < diagrams_.size(); ++i) index_.emplace(diagrams_[i], i);
  const std::size_t n = diagrams_.size();

  std::vector<SparseVec> long_rows;
  ScaledUnionFind uf(n);
  for_each_relator(skeleton, m, rels, [&](ArrowVector&& rel) {
    ++relator_count_;
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [d, c] : rel.terms()) entries.emplace_back(index_of(d), c);
    if (entries.size() == 1) uf.kill(entries[0].first);
    else if (entries.size() == 2) uf.relate(entries[0].first, entries[0].second, entries[1].first, entries[1].second);
    else long_rows.push_back(make_sparse(std::move(entries)));
  });

  // Classes: live roots in ascending order.
  constexpr std::size_t kDead = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_class(n, kDead);
  std::vector<std::size_t> class_root;
  class_.assign(n, kDead);
  factor_.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    auto [root, f] = uf.find(i);
    if (uf.is_zero_root(root)) continue;
    if (root_class[root] == kDead) {
      root_class[root] = class_root.size();
      class_root.push_back(root);
    }
    class_[i] = root_class[root];
    factor_[i] = f;
  }
  const std::size_t classes = class_root.size();

  RowReducer reducer(classes);
  for (const auto& row : long_rows) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [col, c] : row)
      if (class_[col] != kDead) entries.emplace_back(class_[col], c * factor_[col]);
    auto v = make_sparse(std::move(entries));
    if (!v.empty()) reducer.add(std::move(v));
  }
  long_rows.clear();

  const EchelonForm rref = reducer.to_rref();
  std::vector<std::size_t> coord(classes, kDead);
  for (std::size_t c = 0; c < classes; ++c) {
    if (reducer.is_pivot(c)) continue;
    coord[c] = basis_.size();
    basis_.push_back(diagrams_[class_root[c]]);
  }
  image_.assign(classes, SparseVec{});
  for (std::size_t c = 0; c < classes; ++c)
    if (coord[c] != kDead) image_[c] = {{coord[c], Rational(1)}};
  for (std::size_t r = 0; r < rref.rows.size(); ++r) {
    SparseVec img;
    for (std::size_t k = 1; k < rref.rows[r].size(); ++k) img.emplace_back(coord[rref.rows[r][k].first], -rref.rows[r][k].second);
    image_[rref.pivots[r]] = make_sparse(std::move(img));
  }
}

std::size_t QuotientSpace::index_of(const ArrowDiagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) throw Error("diagram " + d.str() + " is not in the enumerated space");
  return it->second;
}

void QuotientSpace::require(const Skeleton& s, int degree) const {
  if (s != skeleton_ || degree != degree_)
    throw Error("projection of a degree " + std::to_string(degree) + " element on " + s.str() + " into the degree " +
                std::to_string(degree_) + " quotient on " + skeleton_.str());
}

std::vector<Rational> QuotientSpace::project(const ArrowDiagram& d) const {
  require(d.skeleton(), d.degree());
  std::vector<Rational> out(dimension());
  const std::size_t i = index_of(d);
  if (class_[i] == static_cast<std::size_t>(-1)) return out;
  for (const auto& [k, c] : image_[class_[i]]) out[k] += factor_[i] * c;
  return out;
}

std::vector<Rational> QuotientSpace::project(const ArrowVector& v) const {
  if (!v.is_zero()) require(v.skeleton(), v.degree());
  std::vector<Rational> out(dimension());
  for (const auto& [d, coeff] : v.terms()) {
    const std::size_t i = index_of(d);
    if (class_[i] == static_cast<std::size_t>(-1)) continue;
    const Rational f = coeff * factor_[i];
    for (const auto& [k, c] : image_[class_[i]]) out[k] += f * c;
  }
  return out;
}

ArrowVector QuotientSpace::lift(const std::vector<Rational>& coords) const {
  if (coords.size() != dimension()) throw Error("coordinate vector has the wrong length");
  ArrowVector out(skeleton_, degree_);
  for (std::size_t k = 0; k < coords.size(); ++k) out.add(basis_[k], coords[k]);
  return out;
}

std::shared_ptr<const QuotientSpace> quotient(Skeleton skeleton, int m, RelationSet rels) {
  static std::mutex mutex;
  static std::map<std::tuple<Skeleton, int, RelationSet>, std::shared_ptr<const QuotientSpace>> cache;
  const auto key = std::make_tuple(skeleton, m, rels);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto q = std::make_shared<const QuotientSpace>(skeleton, m, rels);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(q)).first->second;
}

}  // namespace wk
