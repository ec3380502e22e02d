#include "wknots/wbraid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wknots/embedded.hpp"

namespace wk {

BraidLetter BraidLetter::inverse() const {
  switch (gen) {
    case BraidGen::Sigma: return {BraidGen::SigmaInv, index};
    case BraidGen::SigmaInv: return {BraidGen::Sigma, index};
    default: return *this;
  }
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> ls, bool ext)
    : n(strands), extended(ext), letters(std::move(ls)) {
  validate();
}

void BraidWord::validate() const {
  if (n < 1) throw Error("a braid needs at least one strand");
  for (const auto& l : letters) {
    if (l.gen == BraidGen::Flip) {
      if (!extended) throw Error("flip generators require the extended group");
      if (l.index < 1 || l.index > n) throw Error("flip index " + std::to_string(l.index) + " out of range");
    } else if (l.index < 1 || l.index > n - 1) {
      throw Error("generator index " + std::to_string(l.index) + " out of range for " + std::to_string(n) + " strands");
    }
  }
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (n != o.n) throw Error("strand-count mismatch");
  BraidWord r = *this;
  r.extended = extended || o.extended;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

namespace {

char gen_char(BraidGen g) {
  switch (g) {
    case BraidGen::Sigma: return 's';
    case BraidGen::SigmaInv: return 'S';
    case BraidGen::Virtual: return 'v';
    case BraidGen::Flip: return 'f';
  }
  return '?';
}

bool gen_from_char(char c, BraidGen& g) {
  switch (c) {
    case 's': g = BraidGen::Sigma; return true;
    case 'S': g = BraidGen::SigmaInv; return true;
    case 'v': g = BraidGen::Virtual; return true;
    case 'f': g = BraidGen::Flip; return true;
    default: return false;
  }
}

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = text.substr(pos, end - pos);
    if (auto hash = ln.find('#'); hash != std::string_view::npos) ln = ln.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < ln.size()) {
      if (std::isspace(static_cast<unsigned char>(ln[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < ln.size() && !std::isspace(static_cast<unsigned char>(ln[j]))) ++j;
      toks.push_back({std::string(ln.substr(i, j - i)), line, static_cast<int>(i) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return lines;
}

int parse_positive(const std::string& s, const Token& where) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a positive integer in '" + where.text + "'", where.line, where.column);
  int v = std::stoi(s);
  if (v < 1) throw ParseError("expected a positive integer in '" + where.text + "'", where.line, where.column);
  return v;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing header 'n=<k>'", 1, 1);
  const auto& header = lines.front();
  const Token& first = header.front();
  if (first.text.rfind("n=", 0) != 0) throw ParseError("header must start with 'n=<k>'", first.line, first.column);
  BraidWord b;
  b.n = parse_positive(first.text.substr(2), first);
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k].text != "extended") throw ParseError("unexpected header token '" + header[k].text + "'", header[k].line, header[k].column);
    b.extended = true;
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (const auto& tok : lines[li]) {
      BraidLetter l;
      if (tok.text.size() < 2 || !gen_from_char(tok.text[0], l.gen))
        throw ParseError("unknown braid token '" + tok.text + "'", tok.line, tok.column);
      l.index = parse_positive(tok.text.substr(1), tok);
      if (l.gen == BraidGen::Flip && !b.extended)
        throw ParseError("flip token '" + tok.text + "' needs the 'extended' header flag", tok.line, tok.column);
      const int bound = l.gen == BraidGen::Flip ? b.n : b.n - 1;
      if (l.index > bound) throw ParseError("index out of range in '" + tok.text + "'", tok.line, tok.column);
      b.letters.push_back(l);
    }
  }
  return b;
}

std::string braid_tokens(const BraidWord& b) {
  if (b.letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    if (k) os << ' ';
    os << gen_char(b.letters[k].gen) << b.letters[k].index;
  }
  return os.str();
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream os;
  os << "n=" << b.n << (b.extended ? " extended" : "") << "\n";
  if (!b.letters.empty()) os << braid_tokens(b) << "\n";
  return os.str();
}

std::vector<int> braid_skeleton(const BraidWord& b) {
  // at[q] = the strand (by starting position) currently at position q.
  std::vector<int> at(b.n);
  for (int q = 0; q < b.n; ++q) at[q] = q + 1;
  for (const auto& l : b.letters)
    if (l.gen != BraidGen::Flip) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(b.n);
  for (int q = 0; q < b.n; ++q) perm[at[q] - 1] = q + 1;
  return perm;
}

FreeAut generator_action(const BraidLetter& l, int n) {
  std::vector<FreeWord> images;
  for (int g = 1; g <= n; ++g) images.push_back(FreeWord::generator(g));
  const int i = l.index;
  auto x = [](int g, int e = 1) { return FreeWord::generator(g, e); };
  switch (l.gen) {
    case BraidGen::Sigma:
      images[i - 1] = x(i + 1);
      images[i] = x(i + 1, -1) * x(i) * x(i + 1);
      break;
    case BraidGen::SigmaInv:
      images[i - 1] = x(i) * x(i + 1) * x(i, -1);
      images[i] = x(i);
      break;
    case BraidGen::Virtual:
      std::swap(images[i - 1], images[i]);
      break;
    case BraidGen::Flip:
      images[i - 1] = x(i, -1);
      break;
  }
  return FreeAut(n, std::move(images));
}

FreeAut braid_action(const BraidWord& b) {
  b.validate();
  FreeAut acc = FreeAut::identity(b.n);
  for (const auto& l : b.letters) acc = aut_compose(acc, generator_action(l, b.n));
  return acc;
}

bool braid_equal(const BraidWord& a, const BraidWord& b, BraidGroup group) {
  if (group == BraidGroup::V)
    throw Error("equality in vB_n is not decided by the free-group action; use braid_distinguished");
  if (a.n != b.n) throw Error("strand-count mismatch");
  if (braid_skeleton(a) != braid_skeleton(b)) return false;
  return braid_action(a) == braid_action(b);
}

bool braid_distinguished(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw Error("strand-count mismatch");
  if (braid_skeleton(a) != braid_skeleton(b)) return true;
  return braid_action(a) != braid_action(b);
}

BraidWord braid_invert(const BraidWord& b) {
  BraidWord r;
  r.n = b.n;
  r.extended = b.extended;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r.letters.push_back(it->inverse());
  return r;
}

BraidWord braid_delete_strand(const BraidWord& b, int k) {
  if (k < 1 || k > b.n) throw Error("strand index out of range");
  if (b.n == 1) throw Error("cannot delete the only strand");
  BraidWord r;
  r.n = b.n - 1;
  r.extended = b.extended;
  int p = k;  // current position of the deleted strand
  for (const auto& l : b.letters) {
    const int i = l.index;
    if (l.gen == BraidGen::Flip) {
      if (i == p) continue;
      r.letters.push_back({l.gen, i > p ? i - 1 : i});
      continue;
    }
    if (i == p) {
      p = i + 1;
    } else if (i + 1 == p) {
      p = i;
    } else {
      r.letters.push_back({l.gen, i > p ? i - 1 : i});
    }
  }
  return r;
}

BraidWord braid_clone_strand(const BraidWord& b, int k) {
  if (k < 1 || k > b.n) throw Error("strand index out of range");
  BraidWord r;
  r.n = b.n + 1;
  r.extended = b.extended;
  int p = k;  // the doubled strand occupies positions p and p + 1
  for (const auto& l : b.letters) {
    const int i = l.index;
    if (l.gen == BraidGen::Flip) {
      if (i == p) {
        r.letters.push_back({BraidGen::Flip, p});
        r.letters.push_back({BraidGen::Flip, p + 1});
        r.letters.push_back({BraidGen::Virtual, p});
      } else {
        r.letters.push_back({l.gen, i > p ? i + 1 : i});
      }
      continue;
    }
    if (i == p) {
      // Block on the left moves right past a single strand.
      r.letters.push_back({l.gen, i + 1});
      r.letters.push_back({l.gen, i});
      p = i + 1;
    } else if (i + 1 == p) {
      r.letters.push_back({l.gen, i});
      r.letters.push_back({l.gen, i + 1});
      p = i;
    } else {
      r.letters.push_back({l.gen, i > p ? i + 1 : i});
    }
  }
  return r;
}

std::string_view relation_template_text() { return embedded::braid_relations(); }

namespace {

struct TemplateLetter {
  BraidGen gen;
  bool uses_j;
  int offset;
};

std::vector<TemplateLetter> parse_template_side(const std::vector<Token>& toks) {
  std::vector<TemplateLetter> out;
  for (const auto& t : toks) {
    TemplateLetter tl{};
    if (t.text.size() < 4 || !gen_from_char(t.text[0], tl.gen) || t.text[1] != '{' || t.text.back() != '}')
      throw ParseError("bad relation token '" + t.text + "'", t.line, t.column);
    std::string inner = t.text.substr(2, t.text.size() - 3);
    if (inner == "j") {
      tl.uses_j = true;
    } else if (inner == "i") {
      tl.offset = 0;
    } else if (inner.rfind("i+", 0) == 0) {
      tl.offset = parse_positive(inner.substr(2), t);
    } else {
      throw ParseError("bad relation index '" + inner + "'", t.line, t.column);
    }
    out.push_back(tl);
  }
  return out;
}

struct RelationTemplate {
  std::string name;
  std::vector<TemplateLetter> lhs, rhs;
  bool extended = false;
  std::string condition;
};

std::vector<RelationTemplate> parse_templates(std::string_view text) {
  std::vector<RelationTemplate> out;
  for (const auto& line : tokenize_lines(text)) {
    RelationTemplate t;
    const Token& head = line.front();
    if (head.text.size() < 2 || head.text.back() != ':') throw ParseError("relation line must start with 'NAME:'", head.line, head.column);
    t.name = head.text.substr(0, head.text.size() - 1);
    std::vector<Token> lhs, rhs, tags;
    int part = 0;
    for (std::size_t k = 1; k < line.size(); ++k) {
      const Token& tok = line[k];
      if (tok.text == "=") {
        if (part != 0) throw ParseError("second '=' in relation", tok.line, tok.column);
        part = 1;
      } else if (tok.text.front() == '[' || part == 2) {
        part = 2;
        std::string s = tok.text;
        std::erase(s, '[');
        std::erase(s, ']');
        if (!s.empty()) tags.push_back({s, tok.line, tok.column});
      } else {
        (part == 0 ? lhs : rhs).push_back(tok);
      }
    }
    if (part == 0) throw ParseError("relation without '='", head.line, head.column);
    for (const auto& tag : tags) {
      if (tag.text == "extended") t.extended = true;
      else if (tag.text == "far" || tag.text == "ne" || tag.text == "off") t.condition = tag.text;
      else throw ParseError("unknown relation tag '" + tag.text + "'", tag.line, tag.column);
    }
    t.lhs = parse_template_side(lhs);
    t.rhs = parse_template_side(rhs);
    out.push_back(std::move(t));
  }
  return out;
}

bool instantiate(const std::vector<TemplateLetter>& side, int i, int j, int n, std::vector<BraidLetter>& out) {
  for (const auto& tl : side) {
    int idx = tl.uses_j ? j : i + tl.offset;
    int bound = tl.gen == BraidGen::Flip ? n : n - 1;
    if (idx < 1 || idx > bound) return false;
    out.push_back({tl.gen, idx});
  }
  return true;
}

}  // namespace

std::vector<BraidRelation> relation_table(int n, bool extended) {
  static const std::vector<RelationTemplate> templates = parse_templates(embedded::braid_relations());
  std::vector<BraidRelation> out;
  for (const auto& t : templates) {
    if (t.extended && !extended) continue;
    auto uses_j = [](const std::vector<TemplateLetter>& s) {
      return std::any_of(s.begin(), s.end(), [](const TemplateLetter& l) { return l.uses_j; });
    };
    const bool has_j = uses_j(t.lhs) || uses_j(t.rhs);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= (has_j ? n : 1); ++j) {
        if (has_j) {
          if (t.condition == "far" && std::abs(i - j) < 2) continue;
          if (t.condition == "ne" && i == j) continue;
          if (t.condition == "off" && (j == i || j == i + 1)) continue;
        }
        std::vector<BraidLetter> l, r;
        if (!instantiate(t.lhs, i, j, n, l) || !instantiate(t.rhs, i, j, n, r)) continue;
        std::string name = t.name + "[i=" + std::to_string(i) + (has_j ? ",j=" + std::to_string(j) : "") + "]";
        out.push_back({std::move(name), BraidWord(n, std::move(l), extended), BraidWord(n, std::move(r), extended)});
      }
    }
  }
  return out;
}

BraidWord random_braid(std::mt19937_64& rng, int n, int length, bool with_virtual, bool extended) {
  BraidWord b;
  b.n = n;
  b.extended = extended;
  std::vector<BraidGen> kinds;
  if (n >= 2) {
    kinds = {BraidGen::Sigma, BraidGen::SigmaInv};
    if (with_virtual) kinds.push_back(BraidGen::Virtual);
  }
  if (extended) kinds.push_back(BraidGen::Flip);
  if (kinds.empty()) return b;
  std::uniform_int_distribution<std::size_t> kind(0, kinds.size() - 1);
  for (int k = 0; k < length; ++k) {
    BraidGen g = kinds[kind(rng)];
    int bound = g == BraidGen::Flip ? n : n - 1;
    std::uniform_int_distribution<int> idx(1, bound);
    b.letters.push_back({g, idx(rng)});
  }
  return b;
}

}  // namespace wk
