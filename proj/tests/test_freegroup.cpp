#include <doctest.h>

#include <random>

#include "wknots/freegroup.hpp"

using namespace wk;

namespace {

FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> g(1, rank), s(0, 1);
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i) raw.push_back({g(rng), s(rng) ? 1 : -1});
  return word_reduce(raw, rank);
}

FreeAut random_aut(std::mt19937& rng, int rank) {
  std::vector<FreeWord> images;
  for (int i = 0; i < rank; ++i) images.push_back(random_word(rng, rank, 4));
  return FreeAut(rank, images);
}

}  // namespace

TEST_CASE("word_reduce examples") {
  std::vector<Letter> w{{1, 1}, {2, 1}, {2, -1}};
  CHECK(word_reduce(w, 2) == FreeWord::generator(1));
  CHECK(word_reduce(std::vector<Letter>{}, 2).is_identity());
  std::vector<Letter> cascade{{1, 1}, {1, -1}, {1, 1}};
  CHECK(word_reduce(cascade, 1) == FreeWord::generator(1));
  std::vector<Letter> bad{{3, 1}};
  CHECK_THROWS_AS(word_reduce(bad, 2), Error);
}

TEST_CASE("word text round trip") {
  auto w = parse_word("x1 x2^-1 x3^2", 3);
  CHECK(w.str() == "x1 x2^-1 x3 x3");
  CHECK(parse_word(w.str(), 3) == w);
  CHECK(parse_word("1", 2).is_identity());
  CHECK_THROWS_AS(parse_word("y1", 2), Error);
  CHECK_THROWS_AS(parse_word("x1^a", 2), Error);
}

TEST_CASE("reduction is a homomorphism fixed point") {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> g(1, 3), s(0, 1);
    std::vector<Letter> u, v;
    for (int i = 0; i < 8; ++i) u.push_back({g(rng), s(rng) ? 1 : -1});
    for (int i = 0; i < 8; ++i) v.push_back({g(rng), s(rng) ? 1 : -1});
    std::vector<Letter> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    auto ru = word_reduce(u, 3), rv = word_reduce(v, 3);
    CHECK(word_reduce(uv, 3) == ru * rv);
    CHECK(word_reduce(ru.letters(), 3) == ru);
    CHECK((ru * ru.inverse()).is_identity());
  }
}

TEST_CASE("aut_apply examples") {
  auto w = parse_word("x1 x2", 2);
  CHECK(aut_apply(FreeAut::identity(2), w) == w);
  FreeAut swap(2, {FreeWord::generator(2), FreeWord::generator(1)});
  CHECK(aut_apply(swap, w) == parse_word("x2 x1", 2));
  FreeAut conj(2, {parse_word("x2 x1 x2^-1", 2), FreeWord::generator(2)});
  CHECK(aut_apply(conj, parse_word("x1 x1", 2)) == parse_word("x2 x1 x1 x2^-1", 2));
  CHECK_THROWS_AS(aut_apply(FreeAut::identity(1), w), Error);
}

TEST_CASE("aut_compose order and associativity") {
  FreeAut swap(2, {FreeWord::generator(2), FreeWord::generator(1)});
  CHECK(aut_compose(swap, swap) == FreeAut::identity(2));
  std::mt19937 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto a = random_aut(rng, 3), b = random_aut(rng, 3), c = random_aut(rng, 3);
    CHECK(aut_compose(a, FreeAut::identity(3)) == a);
    CHECK(aut_compose(aut_compose(a, b), c) == aut_compose(a, aut_compose(b, c)));
    auto w = random_word(rng, 3, 6);
    CHECK(aut_apply(aut_compose(a, b), w) == aut_apply(b, aut_apply(a, w)));
  }
  CHECK_THROWS_AS(aut_compose(FreeAut::identity(2), FreeAut::identity(3)), Error);
}

TEST_CASE("basis conjugating detection") {
  auto id = aut_is_basis_conjugating(FreeAut::identity(3));
  CHECK(id.conjugating);
  CHECK(id.permutation == std::vector<int>{1, 2, 3});
  for (auto& c : id.conjugators) CHECK(c.is_identity());

  FreeAut nielsen(2, {parse_word("x1 x2", 2), FreeWord::generator(2)});
  CHECK_FALSE(aut_is_basis_conjugating(nielsen).conjugating);

  FreeAut conj(2, {parse_word("x1 x2 x1^-1", 2), FreeWord::generator(1)});
  auto r = aut_is_basis_conjugating(conj);
  CHECK(r.conjugating);
  CHECK(r.permutation == std::vector<int>{2, 1});
  CHECK(r.conjugators[0] == FreeWord::generator(1));

  // Not a permutation: both images conjugate x1.
  FreeAut twice(2, {FreeWord::generator(1), parse_word("x2 x1 x2^-1", 2)});
  CHECK_FALSE(aut_is_basis_conjugating(twice).conjugating);
}

TEST_CASE("kill_generator renumbers") {
  CHECK(kill_generator(parse_word("x1 x2 x3 x2^-1", 3), 2) == parse_word("x1 x2", 2));
  CHECK(kill_generator(parse_word("x2 x1 x2^-1", 2), 2) == FreeWord::generator(1));
}
