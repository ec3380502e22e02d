#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wknots/expansion.hpp"

using namespace wk;

namespace {

const RelationSet kTC4T{Relation::TC, Relation::FourT};

GaussDiagram knot(const std::string& name) {
  std::ifstream in(std::string(WK_DATA_DIR) + "/knots/" + name + ".pd");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return pd_to_gauss(parse_pd(ss.str()));
}

ArrowVector word(Skeleton s, std::vector<Arrow> arrows, const Rational& c) {
  return ArrowVector::single(ArrowDiagram(s, std::move(arrows)), c);
}

}  // namespace

TEST_CASE("expansion of the empty braid and of single crossings") {
  auto e = zed_braid(BraidWord(3, {}), 3);
  REQUIRE(e.components.size() == 4);
  CHECK(e.components[0] == word(Skeleton::braid(3), {}, 1));
  for (int m = 1; m <= 3; ++m) CHECK(e.components[m].is_zero());
  CHECK(e.permutation == std::vector<int>{1, 2, 3});

  const Skeleton s2 = Skeleton::braid(2);
  auto z = zed_braid(parse_braid("n=2\ns1"), 2);
  CHECK(z.components[1] == word(s2, {{1, 2}}, 1));
  CHECK(z.components[2] == word(s2, {{1, 2}, {1, 2}}, Rational(1, 2)));
  CHECK(z.permutation == std::vector<int>{2, 1});

  auto zi = zed_braid(parse_braid("n=2\nS1"), 3);
  CHECK(zi.components[1] == word(s2, {{2, 1}}, -1));
  CHECK(zi.components[3] == word(s2, {{2, 1}, {2, 1}, {2, 1}}, Rational(-1, 6)));

  // A virtual crossing only renames: s1 after v1 acts on the swapped strands.
  auto zv = zed_braid(parse_braid("n=2\nv1 s1"), 1);
  CHECK(zv.components[1] == word(s2, {{2, 1}}, 1));
  CHECK(zv.permutation == std::vector<int>{1, 2});

  CHECK_THROWS_AS(zed_braid(parse_braid("n=2 extended\nf1"), 2), Error);
  CHECK_THROWS_AS(zed_braid(BraidWord(2, {}), -1), Error);
}

TEST_CASE("zed_braid is multiplicative") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + t % 3;
    auto b1 = random_braid(rng, n, 3 + t % 4);
    auto b2 = random_braid(rng, n, 2 + t % 3);
    auto lhs = zed_braid(b1 * b2, 3);
    auto rhs = expansion_product(zed_braid(b1, 3), zed_braid(b2, 3));
    CHECK(lhs.permutation == rhs.permutation);
    CHECK(lhs.components == rhs.components);
  }
}

TEST_CASE("zed_braid respects the braid relations on three strands") {
  for (const auto& r : relation_table(3)) {
    CAPTURE(r.name);
    auto a = zed_braid(r.lhs, 3);
    auto b = zed_braid(r.rhs, 3);
    CHECK(a.permutation == b.permutation);
    CHECK(project_expansion(a, kTC4T) == project_expansion(b, kTC4T));
  }
}

TEST_CASE("the braid relations need the arrow relations") {
  // Without TC and 4T at least one relation fails in degree 2.
  int failures = 0;
  for (const auto& r : relation_table(3))
    failures += project_expansion(zed_braid(r.lhs, 2), RelationSet{}) != project_expansion(zed_braid(r.rhs, 2), RelationSet{});
  CHECK(failures > 0);
}

TEST_CASE("strand deletion commutes with the expansion") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    auto b = random_braid(rng, n, 6);
    auto z = zed_braid(b, 3);
    for (int k = 1; k <= n; ++k) {
      auto zd = zed_braid(braid_delete_strand(b, k), 3);
      for (int m = 0; m <= 3; ++m) CHECK(zd.components[m] == delete_strand(z.components[m], k));
    }
  }
}

TEST_CASE("expansion of long knots") {
  auto unit = zed_knot(GaussDiagram(), 3);
  CHECK(unit.components[0] == word(Skeleton::long_strand(), {}, 1));
  for (int m = 1; m <= 3; ++m) CHECK(unit.components[m].is_zero());

  // One negative kink: exp(-[1>2]) with copies clustered at each end.
  auto kink = zed_knot(GaussDiagram({{1, 2, -1}}), 2);
  CHECK(kink.components[1] == word(Skeleton::long_strand(), {{1, 2}}, -1));
  CHECK(kink.components[2] == word(Skeleton::long_strand(), {{1, 3}, {2, 4}}, Rational(1, 2)));

  // Under FI any kink equals the unknot; under RI the two orientations agree.
  const RelationSet fi = knot_relations(RelationSet{Relation::FI});
  const RelationSet ri = knot_relations(RelationSet{Relation::RI});
  auto plain = project_expansion(unit, fi);
  CHECK(project_expansion(zed_knot(GaussDiagram({{1, 2, 1}}), 3), fi) == plain);
  CHECK(project_expansion(zed_knot(GaussDiagram({{2, 1, 1}}), 3), ri) ==
        project_expansion(zed_knot(GaussDiagram({{1, 2, 1}}), 3), ri));
  CHECK(project_expansion(zed_knot(GaussDiagram({{2, 1, 1}}), 3), kTC4T) !=
        project_expansion(zed_knot(GaussDiagram({{1, 2, 1}}), 3), kTC4T));
}

TEST_CASE("projected Z is invariant under legal moves") {
  std::mt19937_64 rng(77);
  const RelationSet ri = knot_relations(RelationSet{Relation::RI});
  const RelationSet fi = knot_relations(RelationSet{Relation::FI});
  for (int t = 0; t < 40; ++t) {
    auto k = random_gauss_diagram(rng, t % 3);
    if (t % 3 == 0) k = insert_random_r3(rng, k);
    const bool with_r1 = t % 5 == 0;
    const Move mv = random_legal_move(rng, k, with_r1);
    CAPTURE(move_name(mv.kind));
    auto k2 = apply_move(k, mv);
    const RelationSet rels = with_r1 ? fi : ri;
    CHECK(project_expansion(zed_knot(k, 3), rels) == project_expansion(zed_knot(k2, 3), rels));
  }
}

TEST_CASE("wheels_reduce reads off exponentials") {
  auto unit = zed_knot(GaussDiagram(), 4);
  auto coords = wheels_reduce(unit, {});
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first == WheelMonomial{});

  // exp(c w_2) up to degree 4.
  const Rational c(-3, 2);
  TruncatedExpansion z = unit;
  z.components[2] = wheel_to_arrows(2) * c;
  z.components[4] = wheel_to_arrows(2) * wheel_to_arrows(2) * (c * c / 2);
  auto w = wheels_reduce(z, RelationSet{Relation::FI});
  CHECK(w.size() == 3);
  CHECK(w[WheelMonomial{0, {2}}] == c);
  CHECK(w[WheelMonomial{0, {2, 2}}] == c * c / 2);

  CHECK_THROWS_AS(wheels_reduce(zed_braid(BraidWord(2, {}), 2), {}), Error);
}

TEST_CASE("predicted log for the trefoil and the figure-eight") {
  // A(X) = X - 1 + X^-1, so log A(e^x) = x^2 - 5/12 x^4 + ...
  auto p = predicted_log(knot("3_1"), 5, RelationSet{Relation::FI});
  CHECK(p.a == 0);
  CHECK(p.wheels.size() == 2);
  CHECK(p.wheels[2] == -1);
  CHECK(p.wheels[4] == Rational(5, 12));
  // A(X) = -X + 3 - X^-1, so log A(e^x) = -x^2 - 7/12 x^4 + ...
  auto q = predicted_log(knot("4_1"), 5, RelationSet{Relation::RI});
  CHECK(q.a == 0);
  CHECK(q.wheels[2] == 1);
  CHECK(q.wheels[4] == Rational(7, 12));
  CHECK(predicted_log(knot("3_1"), 5, {}).a == 3);
}

TEST_CASE("wheel reduction of Z matches the Alexander prediction in degree 4") {
  for (const std::string name : {"0_1", "3_1", "4_1"})
    for (auto flags : {RelationSet{}, RelationSet{Relation::RI}, RelationSet{Relation::FI}}) {
      CAPTURE(name);
      CAPTURE(flags.str());
      auto k = knot(name);
      CHECK(wheels_reduce(zed_knot(k, 4), flags) == predicted_from_alexander(k, 4, flags));
    }
}
