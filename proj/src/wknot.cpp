#include "wknots/wknot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace wk {

GaussDiagram::GaussDiagram(std::vector<GaussArrow> arrows) : arrows_(std::move(arrows)) {
  const int n = static_cast<int>(arrows_.size());
  std::vector<int> used(2 * n + 1, 0);
  for (const auto& a : arrows_) {
    if (a.sign != 1 && a.sign != -1) throw Error("arrow sign must be +1 or -1");
    if (a.tail == a.head) throw Error("arrow tail and head coincide");
    for (int s : {a.tail, a.head}) {
      if (s < 1 || s > 2 * n) throw Error("slot " + std::to_string(s) + " out of range 1.." + std::to_string(2 * n));
      if (used[s]++) throw Error("slot " + std::to_string(s) + " used twice");
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
}

std::vector<Passage> passage_sequence(const GaussDiagram& k) {
  std::vector<Passage> seq(k.slots());
  for (int i = 0; i < k.crossings(); ++i) {
    seq[k.arrow(i).tail - 1] = {i, false};
    seq[k.arrow(i).head - 1] = {i, true};
  }
  return seq;
}

GaussDiagram diagram_from_sequence(const std::vector<Passage>& seq, const std::vector<int>& signs) {
  std::map<int, GaussArrow> by_id;
  std::map<int, int> seen;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const auto& p = seq[s];
    if (p.arrow < 0 || p.arrow >= static_cast<int>(signs.size())) throw Error("passage refers to an unknown arrow");
    auto& a = by_id[p.arrow];
    a.sign = signs[p.arrow];
    (p.head ? a.head : a.tail) = static_cast<int>(s) + 1;
    seen[p.arrow] += p.head ? 2 : 1;
  }
  std::vector<GaussArrow> arrows;
  for (auto& [id, a] : by_id) {
    if (seen[id] != 3) throw Error("arrow needs exactly one tail and one head");
    arrows.push_back(a);
  }
  return GaussDiagram(std::move(arrows));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space_and_comments(bool commas) {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) || (commas && c == ',')) {
        advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }
  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  int integer() {
    bool neg = false;
    if (!done() && peek() == '-') {
      neg = true;
      advance();
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("integer too large");
      advance();
    }
    return static_cast<int>(neg ? -v : v);
  }
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

GaussDiagram parse_gauss(std::string_view text) {
  auto lines = split_lines(text);
  int n = -1;
  std::vector<GaussArrow> arrows;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    Cursor c{lines[li], 0, static_cast<int>(li) + 1, 1};
    c.skip_space_and_comments(false);
    if (c.done()) continue;
    if (n < 0) {
      c.expect('n');
      c.expect('=');
      n = c.integer();
      if (n < 0) c.fail("crossing count must be >= 0");
    } else {
      GaussArrow a;
      c.expect('t');
      c.expect('=');
      a.tail = c.integer();
      c.skip_space_and_comments(false);
      c.expect('h');
      c.expect('=');
      a.head = c.integer();
      c.skip_space_and_comments(false);
      c.expect('s');
      c.expect('=');
      if (c.done() || (c.peek() != '+' && c.peek() != '-')) c.fail("expected sign '+' or '-'");
      a.sign = c.peek() == '+' ? 1 : -1;
      c.advance();
      arrows.push_back(a);
    }
    c.skip_space_and_comments(false);
    if (!c.done()) c.fail("trailing characters");
  }
  if (n < 0) throw ParseError("missing header 'n=<k>'", 1, 1);
  if (static_cast<int>(arrows.size()) != n)
    throw ParseError("header announces " + std::to_string(n) + " arrows, found " + std::to_string(arrows.size()),
                     static_cast<int>(lines.size()), 1);
  return GaussDiagram(std::move(arrows));
}

std::string format_gauss(const GaussDiagram& k) {
  std::ostringstream os;
  os << "n=" << k.crossings() << "\n";
  for (const auto& a : k.arrows()) os << "t=" << a.tail << " h=" << a.head << " s=" << (a.sign > 0 ? '+' : '-') << "\n";
  return os.str();
}

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  Cursor c{text};
  c.skip_space_and_comments(true);
  while (!c.done()) {
    c.expect('X');
    c.expect('[');
    PDCrossing x{};
    for (int k = 0; k < 4; ++k) {
      c.skip_space_and_comments(false);
      x[k] = c.integer();
      if (x[k] < 1) c.fail("edge labels must be positive");
      c.skip_space_and_comments(false);
      if (k < 3) c.expect(',');
    }
    c.expect(']');
    pd.crossings.push_back(x);
    c.skip_space_and_comments(true);
  }
  pd_validate(pd);
  return pd;
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    if (i) os << ",";
    os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  return os.str();
}

namespace {

int next_label(int e, int m) { return e % m + 1; }

}  // namespace

int pd_sign(const PDCode& pd, std::size_t i) {
  const int m = 2 * static_cast<int>(pd.crossings.size());
  const auto& x = pd.crossings.at(i);
  if (x[1] == next_label(x[3], m)) return 1;
  if (x[3] == next_label(x[1], m)) return -1;
  throw Error("crossing " + std::to_string(i + 1) + " has no consistent over-strand orientation");
}

void pd_validate(const PDCode& pd) {
  const int m = 2 * static_cast<int>(pd.crossings.size());
  std::vector<int> incoming(m + 1, 0), outgoing(m + 1, 0);
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    for (int e : x)
      if (e < 1 || e > m) throw Error("edge label " + std::to_string(e) + " out of range 1.." + std::to_string(m));
    if (x[2] != next_label(x[0], m)) throw Error("crossing " + std::to_string(i + 1) + ": under edges must be consecutive");
    const int s = pd_sign(pd, i);
    ++incoming[x[0]];
    ++outgoing[x[2]];
    ++incoming[s > 0 ? x[3] : x[1]];
    ++outgoing[s > 0 ? x[1] : x[3]];
  }
  for (int e = 1; e <= m; ++e)
    if (incoming[e] != 1 || outgoing[e] != 1) throw Error("edge " + std::to_string(e) + " is not traversed exactly once");
}

GaussDiagram pd_to_gauss(const PDCode& pd, int base_edge) {
  pd_validate(pd);
  const int m = 2 * static_cast<int>(pd.crossings.size());
  if (m == 0) return GaussDiagram();
  if (base_edge < 1 || base_edge > m) throw Error("base edge out of range");
  auto slot = [&](int label) { return ((label - base_edge) % m + m) % m + 1; };
  std::vector<GaussArrow> arrows;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    const int s = pd_sign(pd, i);
    arrows.push_back({slot(s > 0 ? x[3] : x[1]), slot(x[0]), s});
  }
  return GaussDiagram(std::move(arrows));
}

PDCode pd_connected_sum(const PDCode& a, const PDCode& b) {
  if (a.crossings.empty()) return b;
  if (b.crossings.empty()) return a;
  pd_validate(a);
  pd_validate(b);
  const int ma = 2 * static_cast<int>(a.crossings.size());
  // Index of the outgoing occurrence of label 1 within a crossing.
  auto outgoing_slot_of_one = [](const PDCode& pd, std::size_t i) -> int {
    const auto& x = pd.crossings[i];
    const int s = pd_sign(pd, i);
    if (x[2] == 1) return 2;
    const int over_out = s > 0 ? 1 : 3;
    if (x[over_out] == 1) return over_out;
    return -1;
  };
  PDCode out;
  for (std::size_t i = 0; i < a.crossings.size(); ++i) {
    auto x = a.crossings[i];
    if (int k = outgoing_slot_of_one(a, i); k >= 0) x[k] = ma + 1;
    out.crossings.push_back(x);
  }
  for (std::size_t i = 0; i < b.crossings.size(); ++i) {
    auto x = b.crossings[i];
    const int k = outgoing_slot_of_one(b, i);
    for (int j = 0; j < 4; ++j) x[j] = (j == k) ? 1 : x[j] + ma;
    out.crossings.push_back(x);
  }
  pd_validate(out);
  return out;
}

int self_linking(const GaussDiagram& k) {
  int s = 0;
  for (const auto& a : k.arrows()) s += a.sign;
  return s;
}

// ---------------------------------------------------------------------------
// Braid closures

namespace {

struct ClosureCrossing {
  int over_slot = 0;
  int under_slot = 0;
  int sign = 0;
  bool inverse = false;
};

// Walks the long closure from bottom position 1 and numbers passages 1..2c.
std::vector<ClosureCrossing> walk_closure(const BraidWord& b, bool allow_virtual) {
  b.validate();
  auto perm = braid_skeleton(b);
  int p = 1;
  for (int step = 1; step <= b.n; ++step) {
    p = perm[p - 1];
    if (p == 1 && step < b.n) throw Error("braid closure has more than one component");
  }
  std::vector<ClosureCrossing> crossings(b.letters.size());
  int slot = 0;
  int pos = 1;
  for (int pass = 0; pass < b.n; ++pass) {
    for (std::size_t li = 0; li < b.letters.size(); ++li) {
      const auto& l = b.letters[li];
      if (l.gen == BraidGen::Flip) throw Error("closure of a braid with flips is not supported");
      if (pos != l.index && pos != l.index + 1) continue;
      const bool left = pos == l.index;
      if (l.gen == BraidGen::Virtual) {
        if (!allow_virtual) throw Error("virtual crossings have no planar diagram code");
      } else {
        ++slot;
        auto& c = crossings[li];
        c.sign = l.gen == BraidGen::Sigma ? 1 : -1;
        c.inverse = l.gen == BraidGen::SigmaInv;
        // sigma_i: the strand entering on the left passes over.
        const bool over = (l.gen == BraidGen::Sigma) == left;
        (over ? c.over_slot : c.under_slot) = slot;
      }
      pos = left ? l.index + 1 : l.index;
    }
  }
  std::vector<ClosureCrossing> out;
  for (std::size_t li = 0; li < b.letters.size(); ++li)
    if (b.letters[li].is_crossing()) out.push_back(crossings[li]);
  return out;
}

}  // namespace

GaussDiagram braid_closure(const BraidWord& b) {
  std::vector<GaussArrow> arrows;
  for (const auto& c : walk_closure(b, true)) arrows.push_back({c.over_slot, c.under_slot, c.sign});
  return GaussDiagram(std::move(arrows));
}

PDCode braid_to_pd(const BraidWord& b) {
  auto cs = walk_closure(b, false);
  const int m = 2 * static_cast<int>(cs.size());
  PDCode pd;
  for (const auto& c : cs) {
    const int u = c.under_slot, o = c.over_slot;
    if (!c.inverse)
      pd.crossings.push_back({u, next_label(o, m), next_label(u, m), o});
    else
      pd.crossings.push_back({u, o, next_label(u, m), next_label(o, m)});
  }
  if (!pd.crossings.empty()) pd_validate(pd);
  return pd;
}

// ---------------------------------------------------------------------------
// Moves

std::string move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R1s: return "R1s";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::OC: return "OC";
    case MoveKind::VR1: return "VR1";
    case MoveKind::VR2: return "VR2";
    case MoveKind::VR3: return "VR3";
    case MoveKind::M: return "M";
  }
  return "?";
}

namespace {

std::vector<int> signs_of(const GaussDiagram& k) {
  std::vector<int> s;
  for (const auto& a : k.arrows()) s.push_back(a.sign);
  return s;
}

void require_slot(const GaussDiagram& k, int a, int width, const char* what) {
  if (a < 1 || a + width - 1 > k.slots()) throw Error(std::string(what) + ": location out of range");
}

// Pattern of three sites for R3 matching. order[s][j] = (other site, is_head).
struct SitePattern {
  std::array<std::array<std::pair<int, bool>, 2>, 3> order;
  std::array<int, 3> sign;  // arrow between sites {0,1}, {0,2}, {1,2}
};

int pair_index(int x, int y) {
  if (x > y) std::swap(x, y);
  return x == 0 ? y - 1 : 2;
}

std::vector<int> pattern_key(const SitePattern& p, const std::array<int, 3>& perm) {
  // perm maps pattern strand -> new label; emit in new-label order.
  std::array<int, 3> inv{};
  for (int s = 0; s < 3; ++s) inv[perm[s]] = s;
  std::vector<int> key;
  for (int t = 0; t < 3; ++t) {
    const int s = inv[t];
    for (const auto& [other, head] : p.order[s]) {
      key.push_back(perm[other]);
      key.push_back(head ? 1 : 0);
    }
  }
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y) key.push_back(p.sign[pair_index(inv[x], inv[y])]);
  return key;
}

std::vector<int> canonical_key(const SitePattern& p) {
  std::array<int, 3> perm{0, 1, 2};
  std::vector<int> best;
  do {
    auto k = pattern_key(p, perm);
    if (best.empty() || k < best) best = k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SitePattern from_template(const R3Template& t) { return SitePattern{t.order, t.sign}; }

std::vector<R3Template> derive_r3_templates() {
  // All equalities between three-letter classical words on three strands that
  // involve every pair of strands once. Each yields a braid-like R3 move.
  std::vector<BraidLetter> alphabet{{BraidGen::Sigma, 1}, {BraidGen::SigmaInv, 1}, {BraidGen::Sigma, 2}, {BraidGen::SigmaInv, 2}};
  struct Local {
    SitePattern pattern;
    bool ok = false;
  };
  auto local_of = [](const BraidWord& w) {
    Local out;
    std::array<int, 3> at{0, 1, 2};
    std::array<int, 3> filled{0, 0, 0};
    std::array<bool, 3> used{false, false, false};
    for (const auto& l : w.letters) {
      const int x = at[l.index - 1], y = at[l.index];
      const int pi = pair_index(x, y);
      if (used[pi]) return out;
      used[pi] = true;
      const bool left_over = l.gen == BraidGen::Sigma;
      const int over = left_over ? x : y;
      out.pattern.sign[pi] = l.gen == BraidGen::Sigma ? 1 : -1;
      out.pattern.order[x][filled[x]++] = {y, x != over};
      out.pattern.order[y][filled[y]++] = {x, y != over};
      std::swap(at[l.index - 1], at[l.index]);
    }
    out.ok = true;
    return out;
  };
  std::vector<R3Template> out;
  std::set<std::vector<int>> seen;
  for (int a = 0; a < 64; ++a) {
    std::vector<BraidLetter> la{alphabet[a % 4], alphabet[(a / 4) % 4], alphabet[a / 16]};
    BraidWord wa(3, la);
    auto pa = local_of(wa);
    if (!pa.ok) continue;
    for (int b = 0; b < 64; ++b) {
      if (a == b) continue;
      std::vector<BraidLetter> lb{alphabet[b % 4], alphabet[(b / 4) % 4], alphabet[b / 16]};
      BraidWord wb(3, lb);
      auto pb = local_of(wb);
      if (!pb.ok || !braid_equal(wa, wb)) continue;
      // Orientation variants: reversing a strand reverses its passages and flips
      // the sign of every arrow with exactly one end on it.
      for (int mask = 0; mask < 8; ++mask) {
        SitePattern p = pa.pattern;
        for (int s = 0; s < 3; ++s)
          if (mask >> s & 1) std::swap(p.order[s][0], p.order[s][1]);
        for (int x = 0; x < 3; ++x)
          for (int y = x + 1; y < 3; ++y)
            if (((mask >> x) ^ (mask >> y)) & 1) p.sign[pair_index(x, y)] *= -1;
        auto key = canonical_key(p);
        if (seen.insert(key).second) out.push_back(R3Template{p.order, p.sign});
      }
    }
  }
  return out;
}

const std::set<std::vector<int>>& r3_keys() {
  static const std::set<std::vector<int>> keys = [] {
    std::set<std::vector<int>> k;
    for (const auto& t : r3_templates()) k.insert(canonical_key(from_template(t)));
    return k;
  }();
  return keys;
}

// Reads the three-site pattern at slots {s, s+1}; false when the arrows do not form a triangle.
bool read_sites(const GaussDiagram& k, std::array<int, 3> sites, SitePattern& out) {
  std::sort(sites.begin(), sites.end());
  if (sites[0] < 1 || sites[2] + 1 > k.slots()) return false;
  if (sites[1] - sites[0] < 2 || sites[2] - sites[1] < 2) return false;
  auto seq = passage_sequence(k);
  auto site_of = [&](int slot) {
    for (int s = 0; s < 3; ++s)
      if (slot == sites[s] || slot == sites[s] + 1) return s;
    return -1;
  };
  std::array<bool, 3> covered{false, false, false};
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < 2; ++j) {
      const auto& p = seq[sites[s] + j - 1];
      const auto& arrow = k.arrow(p.arrow);
      const int other = site_of(p.head ? arrow.tail : arrow.head);
      if (other < 0 || other == s) return false;
      out.order[s][j] = {other, p.head};
      const int pi = pair_index(s, other);
      out.sign[pi] = arrow.sign;
      covered[pi] = true;
    }
    if (out.order[s][0].first == out.order[s][1].first) return false;
  }
  return covered[0] && covered[1] && covered[2];
}

}  // namespace

const std::vector<R3Template>& r3_templates() {
  static const std::vector<R3Template> templates = derive_r3_templates();
  return templates;
}

bool r3_applicable(const GaussDiagram& k, int a, int b, int c) {
  SitePattern p;
  if (!read_sites(k, {a, b, c}, p)) return false;
  return r3_keys().count(canonical_key(p)) != 0;
}

GaussDiagram apply_move(const GaussDiagram& k, const Move& m) {
  auto seq = passage_sequence(k);
  auto signs = signs_of(k);
  const int n = k.crossings();
  switch (m.kind) {
    case MoveKind::R1Add: {
      if (m.a < 1 || m.a > k.slots() + 1) throw Error("R1+: location out of range");
      if (m.sign != 1 && m.sign != -1) throw Error("R1+: sign must be +1 or -1");
      signs.push_back(m.sign);
      std::vector<Passage> ins{{n, !m.flag}, {n, m.flag}};
      seq.insert(seq.begin() + (m.a - 1), ins.begin(), ins.end());
      return diagram_from_sequence(seq, signs);
    }
    case MoveKind::R1Remove:
    case MoveKind::R1s: {
      require_slot(k, m.a, 2, move_name(m.kind).c_str());
      if (seq[m.a - 1].arrow != seq[m.a].arrow) throw Error(move_name(m.kind) + ": no isolated arrow at slot " + std::to_string(m.a));
      if (m.kind == MoveKind::R1s) {
        std::swap(seq[m.a - 1], seq[m.a]);
      } else {
        seq.erase(seq.begin() + (m.a - 1), seq.begin() + (m.a + 1));
      }
      return diagram_from_sequence(seq, signs);
    }
    case MoveKind::R2Add: {
      const int total = k.slots() + 4;
      std::set<int> spots{m.a, m.a + 1, m.b, m.b + 1};
      if (spots.size() != 4 || *spots.begin() < 1 || *spots.rbegin() > total) throw Error("R2+: tail and head sites overlap or leave the strand");
      if (m.sign != 1 && m.sign != -1) throw Error("R2+: sign must be +1 or -1");
      signs.push_back(m.sign);
      signs.push_back(-m.sign);
      std::vector<Passage> out;
      out.reserve(total);
      std::size_t next = 0;
      for (int s = 1; s <= total; ++s) {
        if (s == m.a) out.push_back({n, false});
        else if (s == m.a + 1) out.push_back({n + 1, false});
        else if (s == m.b) out.push_back({m.flag ? n + 1 : n, true});
        else if (s == m.b + 1) out.push_back({m.flag ? n : n + 1, true});
        else out.push_back(seq[next++]);
      }
      return diagram_from_sequence(out, signs);
    }
    case MoveKind::R2Remove: {
      require_slot(k, m.a, 2, "R2-");
      const auto p = seq[m.a - 1], q = seq[m.a];
      if (p.head || q.head) throw Error("R2-: slots are not two tails");
      const auto& x = k.arrow(p.arrow);
      const auto& y = k.arrow(q.arrow);
      if (std::abs(x.head - y.head) != 1 || x.sign != -y.sign) throw Error("R2-: arrows do not form an R2 pair");
      std::vector<Passage> out;
      for (const auto& e : seq)
        if (e.arrow != p.arrow && e.arrow != q.arrow) out.push_back(e);
      return diagram_from_sequence(out, signs);
    }
    case MoveKind::R3: {
      if (!r3_applicable(k, m.a, m.b, m.c)) throw Error("R3: pattern does not match at the given sites");
      for (int s : {m.a, m.b, m.c}) std::swap(seq[s - 1], seq[s]);
      return diagram_from_sequence(seq, signs);
    }
    case MoveKind::OC: {
      require_slot(k, m.a, 2, "OC");
      if (seq[m.a - 1].head || seq[m.a].head) throw Error("OC: slots are not two adjacent tails");
      std::swap(seq[m.a - 1], seq[m.a]);
      return diagram_from_sequence(seq, signs);
    }
    case MoveKind::VR1:
    case MoveKind::VR2:
    case MoveKind::VR3:
    case MoveKind::M:
      return k;
  }
  throw Error("unknown move");
}

Move inverse_move(const GaussDiagram& k, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Add: return {MoveKind::R1Remove, m.a};
    case MoveKind::R1Remove: {
      require_slot(k, m.a, 2, "R1-");
      auto seq = passage_sequence(k);
      const auto& arrow = k.arrow(seq[m.a - 1].arrow);
      return {MoveKind::R1Add, m.a, 0, 0, arrow.sign, !seq[m.a - 1].head};
    }
    case MoveKind::R2Add: return {MoveKind::R2Remove, m.a};
    case MoveKind::R2Remove: {
      require_slot(k, m.a, 2, "R2-");
      auto seq = passage_sequence(k);
      const auto& x = k.arrow(seq[m.a - 1].arrow);
      const auto& y = k.arrow(seq[m.a].arrow);
      // R2+ locations refer to the enlarged diagram, which is k itself.
      return {MoveKind::R2Add, m.a, std::min(x.head, y.head), 0, x.sign, x.head > y.head};
    }
    default: return m;
  }
}

std::vector<Move> legal_local_moves(const GaussDiagram& k, bool with_r1) {
  std::vector<Move> out;
  auto seq = passage_sequence(k);
  const int slots = k.slots();
  for (int s = 1; s < slots; ++s) {
    const auto p = seq[s - 1], q = seq[s];
    if (p.arrow == q.arrow) {
      out.push_back({MoveKind::R1s, s});
      if (with_r1) out.push_back({MoveKind::R1Remove, s});
      continue;
    }
    if (!p.head && !q.head) {
      out.push_back({MoveKind::OC, s});
      const auto& x = k.arrow(p.arrow);
      const auto& y = k.arrow(q.arrow);
      if (std::abs(x.head - y.head) == 1 && x.sign == -y.sign) out.push_back({MoveKind::R2Remove, s});
    }
  }
  // R3: a site is an adjacent pair of passages of distinct arrows.
  std::vector<int> sites;
  for (int s = 1; s < slots; ++s)
    if (seq[s - 1].arrow != seq[s].arrow) sites.push_back(s);
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (sites[j] - sites[i] < 2) continue;
      for (std::size_t l = j + 1; l < sites.size(); ++l) {
        if (sites[l] - sites[j] < 2) continue;
        if (r3_applicable(k, sites[i], sites[j], sites[l])) out.push_back({MoveKind::R3, sites[i], sites[j], sites[l]});
      }
    }
  return out;
}

GaussDiagram random_gauss_diagram(std::mt19937_64& rng, int n) {
  std::vector<int> slots(2 * n);
  for (int s = 0; s < 2 * n; ++s) slots[s] = s + 1;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<GaussArrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({slots[2 * i], slots[2 * i + 1], coin(rng) ? 1 : -1});
  return GaussDiagram(std::move(arrows));
}

Move random_legal_move(std::mt19937_64& rng, const GaussDiagram& k, bool with_r1) {
  auto local = legal_local_moves(k, with_r1);
  std::uniform_int_distribution<int> kind(0, with_r1 ? 3 : 2);
  const int choice = kind(rng);
  std::bernoulli_distribution coin(0.5);
  const int sign = coin(rng) ? 1 : -1;
  if (choice == 0 && !local.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, local.size() - 1);
    return local[pick(rng)];
  }
  if (choice == 1) {
    std::uniform_int_distribution<int> v(0, 3);
    static constexpr MoveKind virt[] = {MoveKind::VR1, MoveKind::VR2, MoveKind::VR3, MoveKind::M};
    return {virt[v(rng)]};
  }
  if (choice == 3) {
    std::uniform_int_distribution<int> at(1, k.slots() + 1);
    return {MoveKind::R1Add, at(rng), 0, 0, sign, coin(rng)};
  }
  // R2 insertion: pick two disjoint adjacent pairs in the enlarged strand.
  const int total = k.slots() + 4;
  std::uniform_int_distribution<int> at(1, total - 1);
  while (true) {
    int a = at(rng), b = at(rng);
    if (std::abs(a - b) >= 2) return {MoveKind::R2Add, a, b, 0, sign, coin(rng)};
  }
}

GaussDiagram insert_random_r3(std::mt19937_64& rng, const GaussDiagram& k, Move* where) {
  const auto& templates = r3_templates();
  std::uniform_int_distribution<std::size_t> pick(0, templates.size() - 1);
  const auto& t = templates[pick(rng)];
  auto seq = passage_sequence(k);
  auto signs = signs_of(k);
  const int n = k.crossings();
  for (int pi = 0; pi < 3; ++pi) signs.push_back(t.sign[pi]);
  std::uniform_int_distribution<int> gap(0, static_cast<int>(seq.size()));
  std::array<std::pair<int, int>, 3> place;  // (gap, tiebreak)
  for (int s = 0; s < 3; ++s) place[s] = {gap(rng), s};
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int x, int y) { return place[x] < place[y]; });
  std::vector<Passage> out;
  std::array<int, 3> start{};
  std::size_t next_block = 0;
  for (int pos = 0; pos <= static_cast<int>(seq.size()); ++pos) {
    while (next_block < 3 && place[order[next_block]].first == pos) {
      const int s = order[next_block++];
      start[s] = static_cast<int>(out.size()) + 1;
      for (const auto& [other, head] : t.order[s]) out.push_back({n + pair_index(s, other), head});
    }
    if (pos < static_cast<int>(seq.size())) out.push_back(seq[pos]);
  }
  if (where) *where = {MoveKind::R3, start[0], start[1], start[2]};
  return diagram_from_sequence(out, signs);
}

}  // namespace wk
