#include <doctest.h>

#include <random>

#include "wknots/wbraid.hpp"

using namespace wk;

namespace {

BraidWord word(int n, const std::string& tokens, bool extended = false) {
  return parse_braid("n=" + std::to_string(n) + (extended ? " extended" : "") + "\n" + tokens);
}

// Substitutes generator images into w (a homomorphism F_n -> F_m given by images).
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord& img = images.at(l.gen - 1);
    out = out * (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

// Strand doubling on the free group: x_k -> x_k x_{k+1}, later generators shift up.
std::vector<FreeWord> doubling_map(int n, int k) {
  std::vector<FreeWord> images;
  for (int g = 1; g <= n; ++g) {
    if (g < k) images.push_back(FreeWord::generator(g));
    else if (g == k) images.push_back(FreeWord::generator(k) * FreeWord::generator(k + 1));
    else images.push_back(FreeWord::generator(g + 1));
  }
  return images;
}

}  // namespace

TEST_CASE("braid text format") {
  auto b = word(3, "s1 S2 v1");
  CHECK(b.letters.size() == 3);
  CHECK(parse_braid(format_braid(b)) == b);
  CHECK(braid_tokens(BraidWord(2, {})) == "e");
  auto e = word(3, "f3 s1", true);
  CHECK(e.extended);
  CHECK(parse_braid(format_braid(e)) == e);

  try {
    parse_braid("n=3\ns1 x2");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 4);
  }
  CHECK_THROWS_AS(parse_braid("n=2\ns2"), ParseError);
  CHECK_THROWS_AS(parse_braid("n=2\nf1"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1"), ParseError);
  CHECK_THROWS_AS(parse_braid("n=2 bogus"), ParseError);
}

TEST_CASE("braid_skeleton") {
  CHECK(braid_skeleton(BraidWord(3, {})) == std::vector<int>{1, 2, 3});
  CHECK(braid_skeleton(word(2, "s1")) == std::vector<int>{2, 1});
  // (1 2)(2 3)(1 2) = (1 3)
  CHECK(braid_skeleton(word(3, "v1 s2 v1")) == std::vector<int>{3, 2, 1});
  CHECK(braid_skeleton(word(3, "f1 f2", true)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("skeleton is a homomorphism") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto a = random_braid(rng, 4, 6), b = random_braid(rng, 4, 6);
    auto pa = braid_skeleton(a), pb = braid_skeleton(b), pab = braid_skeleton(a * b);
    for (int p = 1; p <= 4; ++p) CHECK(pab[p - 1] == pb[pa[p - 1] - 1]);
  }
}

TEST_CASE("braid_action basics") {
  CHECK(braid_action(BraidWord(3, {})) == FreeAut::identity(3));
  auto v = braid_action(word(3, "v2"));
  CHECK(v.image(1) == FreeWord::generator(1));
  CHECK(v.image(2) == FreeWord::generator(3));
  CHECK(v.image(3) == FreeWord::generator(2));
  CHECK(braid_action(word(2, "f1 f1", true)) == FreeAut::identity(2));
  auto s = braid_action(word(2, "s1"));
  CHECK(s.image(1) == FreeWord::generator(2));
  CHECK(s.image(2) == parse_word("x2^-1 x1 x2", 2));
}

TEST_CASE("relation table: every entry is respected by the action") {
  for (int n = 2; n <= 6; ++n) {
    for (bool ext : {false, true}) {
      auto table = relation_table(n, ext);
      CHECK(!table.empty());
      for (const auto& rel : table) {
        INFO(rel.name);
        CHECK(braid_action(rel.lhs) == braid_action(rel.rhs));
        CHECK(braid_skeleton(rel.lhs) == braid_skeleton(rel.rhs));
      }
    }
  }
}

TEST_CASE("relation table covers each named family") {
  auto table = relation_table(4, true);
  for (std::string family : {"R2a", "R2b", "R3", "FC1", "FC2", "FC3", "VR2", "VR3", "M", "OC", "F1", "F2", "F3", "F4", "F5", "F6", "F7"}) {
    INFO(family);
    CHECK(std::any_of(table.begin(), table.end(), [&](const BraidRelation& r) { return r.name.rfind(family + "[", 0) == 0; }));
  }
  auto plain = relation_table(4, false);
  CHECK(std::none_of(plain.begin(), plain.end(), [](const BraidRelation& r) { return r.name[0] == 'F' && r.name[1] != 'C'; }));
}

TEST_CASE("forbidden relations are distinguished") {
  // Undercrossings do not commute in wB_n.
  CHECK_FALSE(braid_equal(word(3, "v1 s2 s1"), word(3, "s2 s1 v2")));
  CHECK_FALSE(braid_equal(word(2, "s1"), word(2, "v1")));
  // The word pair sigma1 s1 sigma1 / s1 sigma1 s1 does not even share a skeleton.
  CHECK_FALSE(braid_equal(word(3, "s1 v1 s1"), word(3, "v1 s1 v1")));
  CHECK(braid_equal(word(3, "v1 s2 v1"), word(3, "v2 s1 v2")));
}

TEST_CASE("braid_equal refuses vB_n") {
  CHECK_THROWS_AS(braid_equal(word(2, "s1"), word(2, "s1"), BraidGroup::V), Error);
  CHECK(braid_distinguished(word(2, "s1"), word(2, "v1")));
  CHECK_FALSE(braid_distinguished(word(3, "s1 s2 v1"), word(3, "v2 s1 s2")));
  CHECK_THROWS_AS(braid_equal(word(2, "s1"), word(3, "s1")), Error);
}

TEST_CASE("braid_invert") {
  CHECK(braid_invert(BraidWord(2, {})).letters.empty());
  CHECK(braid_invert(word(3, "s1 v2")) == word(3, "v2 S1"));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto b = random_braid(rng, 4, 8, true, t % 2 == 1);
    CHECK(braid_equal(b * braid_invert(b), BraidWord(4, {}, b.extended)));
  }
}

TEST_CASE("basis-conjugating structure of braid images") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto b = random_braid(rng, 2 + t % 4, 8);
    auto r = aut_is_basis_conjugating(braid_action(b));
    CHECK(r.conjugating);
    CHECK(r.permutation == braid_skeleton(b));
  }
}

TEST_CASE("braid_delete_strand") {
  CHECK(braid_delete_strand(BraidWord(3, {}), 2) == BraidWord(2, {}));
  CHECK(braid_delete_strand(word(2, "s1"), 2) == BraidWord(1, {}));
  CHECK(braid_delete_strand(word(3, "s1 s2"), 3) == word(2, "s1"));
  CHECK_THROWS_AS(braid_delete_strand(word(2, "s1"), 3), Error);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 4;
    auto b = random_braid(rng, n, 9, true, t % 3 == 0);
    std::uniform_int_distribution<int> pick(1, n);
    const int k = pick(rng);
    auto d = braid_delete_strand(b, k);
    auto psi = braid_action(b);
    auto psi_d = braid_action(d);
    const int top = braid_skeleton(b)[k - 1];
    for (int p = 1, q = 1; p <= n; ++p) {
      if (p == k) continue;
      CHECK(psi_d.image(q) == kill_generator(psi.image(p), top));
      ++q;
    }
  }
}

TEST_CASE("braid_clone_strand") {
  CHECK(braid_clone_strand(BraidWord(2, {}), 1) == BraidWord(3, {}));
  // Strands 1,2 (the clone) cross strand 3 in sequence.
  auto c = braid_clone_strand(word(2, "s1"), 1);
  CHECK(c == word(3, "s2 s1"));
  CHECK(braid_skeleton(c) == std::vector<int>{2, 3, 1});

  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    auto b = random_braid(rng, n, 7, true, t % 3 == 0);
    std::uniform_int_distribution<int> pick(1, n);
    const int k = pick(rng);
    auto cl = braid_clone_strand(b, k);
    const int top = braid_skeleton(b)[k - 1];
    // Skeleton: the two copies end adjacent; a flip of the doubled ring swaps their order.
    auto sk = braid_skeleton(cl);
    if (b.extended)
      CHECK(std::abs(sk[k] - sk[k - 1]) == 1);
    else
      CHECK(sk[k] == sk[k - 1] + 1);
    // Psi(clone)(c_k(x_p)) = c_top(Psi(b)(x_p)).
    auto psi = braid_action(b), psi_c = braid_action(cl);
    auto ck = doubling_map(n, k), ct = doubling_map(n, top);
    for (int p = 1; p <= n; ++p)
      CHECK(aut_apply(psi_c, substitute(FreeWord::generator(p), ck)) == substitute(psi.image(p), ct));
    // Deleting either copy recovers b.
    CHECK(braid_equal(braid_delete_strand(cl, k + 1), b));
    CHECK(braid_equal(braid_delete_strand(cl, k), b));
  }
}

TEST_CASE("word problem on random relator insertions") {
  std::mt19937_64 rng(77);
  auto table = relation_table(4, false);
  std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
  for (int t = 0; t < 200; ++t) {
    auto b = random_braid(rng, 4, 7);
    const auto& rel = table[pick(rng)];
    std::uniform_int_distribution<std::size_t> at(0, b.letters.size());
    auto mod = b;
    std::size_t pos = at(rng);
    mod.letters.insert(mod.letters.begin() + pos, rel.lhs.letters.begin(), rel.lhs.letters.end());
    auto inv = braid_invert(rel.rhs);
    mod.letters.insert(mod.letters.begin() + pos + rel.lhs.letters.size(), inv.letters.begin(), inv.letters.end());
    CHECK(braid_equal(b, mod));
  }
}
