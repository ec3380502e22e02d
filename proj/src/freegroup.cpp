#include "wknots/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wk {

int FreeWord::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> out = letters_;
  for (const auto& l : o.letters_) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << letters_[i].gen;
    if (letters_[i].exp < 0) os << "^-1";
  }
  return os.str();
}

FreeWord word_reduce(std::span<const Letter> raw, int rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.gen < 1 || l.gen > rank) throw Error("generator index " + std::to_string(l.gen) + " out of range 1.." + std::to_string(rank));
    if (l.exp != 1 && l.exp != -1) throw Error("letter exponent must be +1 or -1");
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord parse_word(const std::string& text, int rank) {
  std::vector<Letter> raw;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw Error("bad word token '" + tok + "'");
    std::size_t pos = 1;
    std::size_t end = pos;
    while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
    if (end == pos) throw Error("bad word token '" + tok + "'");
    int gen = std::stoi(tok.substr(pos, end - pos));
    int power = 1;
    if (end < tok.size()) {
      if (tok[end] != '^' || end + 1 == tok.size()) throw Error("bad word token '" + tok + "'");
      try {
        std::size_t used = 0;
        power = std::stoi(tok.substr(end + 1), &used);
        if (used != tok.size() - end - 1) throw Error("bad exponent");
      } catch (const std::exception&) {
        throw Error("bad word token '" + tok + "'");
      }
    }
    int sign = power < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(power); ++k) raw.push_back({gen, sign});
  }
  return word_reduce(raw, rank);
}

FreeAut::FreeAut(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank_) throw Error("automorphism needs one image per generator");
  for (const auto& w : images_)
    if (w.max_generator() > rank_) throw Error("automorphism image uses a generator outside the rank");
}

FreeAut FreeAut::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
  return FreeAut(rank, std::move(images));
}

std::string FreeAut::str() const {
  std::ostringstream os;
  for (int i = 1; i <= rank_; ++i) os << "x" << i << " -> " << image(i).str() << "\n";
  return os.str();
}

FreeWord aut_apply(const FreeAut& a, const FreeWord& w) {
  if (w.max_generator() > a.rank()) throw Error("rank mismatch in aut_apply");
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord& img = a.image(l.gen);
    out = out * (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

FreeAut aut_compose(const FreeAut& a, const FreeAut& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in aut_compose");
  std::vector<FreeWord> images;
  images.reserve(a.rank());
  for (const auto& img : a.images()) images.push_back(aut_apply(b, img));
  return FreeAut(a.rank(), std::move(images));
}

FreeWord kill_generator(const FreeWord& w, int k) {
  std::vector<Letter> raw;
  int rank = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == k) continue;
    Letter m = l;
    if (m.gen > k) --m.gen;
    rank = std::max(rank, m.gen);
    raw.push_back(m);
  }
  return word_reduce(raw, std::max(rank, 1));
}

BasisConjugatingResult aut_is_basis_conjugating(const FreeAut& a) {
  BasisConjugatingResult result;
  std::vector<bool> seen(a.rank() + 1, false);
  for (const auto& w : a.images()) {
    const auto& ls = w.letters();
    if (ls.size() % 2 == 0) return {};
    const std::size_t half = ls.size() / 2;
    const Letter core = ls[half];
    if (core.exp != 1 || seen[core.gen]) return {};
    for (std::size_t i = 0; i < half; ++i)
      if (ls[i] != ls[ls.size() - 1 - i].inverse()) return {};
    seen[core.gen] = true;
    result.permutation.push_back(core.gen);
    result.conjugators.push_back(word_reduce(std::span<const Letter>(ls.data(), half), a.rank()));
  }
  result.conjugating = true;
  return result;
}

}  // namespace wk
