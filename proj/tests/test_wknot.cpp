#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wknots/alexander.hpp"
#include "wknots/wknot.hpp"

using namespace wk;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PDCode knot(const std::string& name) { return parse_pd(read_file(std::string(WK_DATA_DIR) + "/knots/" + name + ".pd")); }

BraidWord braid(int n, const std::string& tokens) { return parse_braid("n=" + std::to_string(n) + "\n" + tokens); }

GaussDiagram diagram(std::vector<GaussArrow> arrows) { return GaussDiagram(std::move(arrows)); }

}  // namespace

TEST_CASE("Gauss diagram invariants and text format") {
  CHECK_THROWS_AS(diagram({{1, 1, 1}}), Error);
  CHECK_THROWS_AS(diagram({{1, 3, 1}}), Error);
  CHECK_THROWS_AS(diagram({{1, 2, 1}, {2, 3, 1}}), Error);
  CHECK_THROWS_AS(diagram({{1, 2, 0}}), Error);
  auto k = diagram({{3, 1, -1}, {2, 4, 1}});
  CHECK(k.arrow(0).tail == 2);
  CHECK(k.arrow(1).direction() == -1);
  CHECK(parse_gauss(format_gauss(k)) == k);
  CHECK(format_gauss(GaussDiagram()) == "n=0\n");
  CHECK(parse_gauss("n=0\n") == GaussDiagram());
  try {
    parse_gauss("n=1\nt=1 h=2 s=*\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_gauss("n=2\nt=1 h=2 s=+\n"), ParseError);
}

TEST_CASE("PD parsing and validation") {
  auto pd = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]");
  CHECK(pd.crossings.size() == 3);
  CHECK(parse_pd(format_pd(pd)) == pd);
  CHECK(parse_pd("").crossings.empty());
  CHECK_THROWS_AS(parse_pd("X[1,4,3,5],X[2,6,4,1],X[5,2,6,3]"), Error);
  CHECK_THROWS_AS(parse_pd("X[1,4,2"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
}

TEST_CASE("pd_to_gauss on hand-traversed codes") {
  CHECK(pd_to_gauss(PDCode{}) == GaussDiagram());
  // Closure of sigma1^3: over passages precede the unders by three slots.
  auto trefoil = pd_to_gauss(knot("3_1"));
  CHECK(trefoil == diagram({{1, 4, 1}, {3, 6, 1}, {5, 2, 1}}));
  CHECK(self_linking(trefoil) == 3);
  // A mirror trefoil written independently: all crossings negative.
  auto mirror = pd_to_gauss(parse_pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"));
  CHECK(mirror == diagram({{2, 5, -1}, {4, 1, -1}, {6, 3, -1}}));
  // Figure-eight written independently: signs (+,+,-,-).
  auto fig8 = pd_to_gauss(parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"));
  int pos = 0, neg = 0;
  for (const auto& a : fig8.arrows()) (a.sign > 0 ? pos : neg)++;
  CHECK(pos == 2);
  CHECK(neg == 2);
  CHECK(self_linking(fig8) == 0);
}

TEST_CASE("basepoint choice gives the same long knot invariants for classical knots") {
  auto pd = knot("5_2");
  auto base = alexander_matrix(pd_to_gauss(pd)).normalized;
  for (int e = 1; e <= 12; ++e) {
    auto k = pd_to_gauss(pd, e);
    CHECK(self_linking(k) == 4);
    CHECK(alexander_matrix(k).normalized == base);
  }
}

TEST_CASE("braid closure") {
  CHECK(braid_closure(BraidWord(1, {})) == GaussDiagram());
  CHECK(braid_closure(braid(2, "s1 s1 s1")) == pd_to_gauss(knot("3_1")));
  // sigma1 alone closes to a single kink.
  auto kink = braid_closure(braid(2, "s1"));
  CHECK(kink.crossings() == 1);
  CHECK(self_linking(kink) == 1);
  // sigma1 s1 has trivial skeleton, so its closure has two components.
  CHECK_THROWS_AS(braid_closure(braid(2, "s1 v1")), Error);
  CHECK_THROWS_AS(braid_closure(BraidWord(2, {})), Error);
  // Virtual letters leave no arrows.
  auto v = braid_closure(braid(3, "s1 s1 v2 s1"));
  CHECK(v.crossings() == 3);
  CHECK_THROWS_AS(braid_to_pd(braid(3, "s1 s1 v2 s1")), Error);
  CHECK_THROWS_AS(braid_closure(braid(3, "s1 v2 s1")), Error);
}

TEST_CASE("braid_to_pd agrees with braid_closure on random classical braids") {
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int attempt = 0; tested < 100; ++attempt) {
    auto b = random_braid(rng, 2 + attempt % 3, 5 + attempt % 4, false);
    try {
      auto pd = braid_to_pd(b);
      CHECK(pd_to_gauss(pd) == braid_closure(b));
      ++tested;
    } catch (const Error&) {
      // not a knot closure
    }
  }
}

TEST_CASE("connected sum of PD codes") {
  auto t = knot("3_1");
  auto sum = pd_connected_sum(t, t);
  CHECK(sum.crossings.size() == 6);
  auto k = pd_to_gauss(sum);
  CHECK(self_linking(k) == 6);
}

TEST_CASE("basic moves") {
  // R2 insertion on the empty diagram.
  auto r2 = apply_move(GaussDiagram(), {MoveKind::R2Add, 1, 3, 0, 1, false});
  CHECK(r2 == diagram({{1, 3, 1}, {2, 4, -1}}));
  CHECK(self_linking(r2) == 0);
  CHECK(apply_move(r2, {MoveKind::R2Remove, 1}) == GaussDiagram());
  auto anti = apply_move(GaussDiagram(), {MoveKind::R2Add, 3, 1, 0, -1, true});
  CHECK(anti == diagram({{3, 2, -1}, {4, 1, 1}}));

  // OC: exchange adjacent tails.
  auto k = diagram({{1, 3, 1}, {2, 4, -1}});
  CHECK(apply_move(k, {MoveKind::OC, 1}) == diagram({{2, 3, 1}, {1, 4, -1}}));
  CHECK_THROWS_AS(apply_move(k, {MoveKind::OC, 3}), Error);  // adjacent heads do not commute

  // R1s reverses an isolated arrow and keeps its sign.
  auto kink = diagram({{1, 2, -1}});
  CHECK(apply_move(kink, {MoveKind::R1s, 1}) == diagram({{2, 1, -1}}));
  CHECK(apply_move(kink, {MoveKind::R1Remove, 1}) == GaussDiagram());
  CHECK(apply_move(GaussDiagram(), {MoveKind::R1Add, 1, 0, 0, -1, true}) == kink);
  CHECK_THROWS_AS(apply_move(diagram({{1, 3, 1}, {2, 4, 1}}), {MoveKind::R1s, 1}), Error);

  for (auto kind : {MoveKind::VR1, MoveKind::VR2, MoveKind::VR3, MoveKind::M}) CHECK(apply_move(k, {kind}) == k);
}

TEST_CASE("R3 templates") {
  const auto& ts = r3_templates();
  // Braid-like moves for the 8 orientation choices, modulo relabeling.
  CHECK(ts.size() >= 8);
  // Each template's reversal is again a template (the move is symmetric).
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Move where;
    auto k = insert_random_r3(rng, random_gauss_diagram(rng, t % 4), &where);
    REQUIRE(r3_applicable(k, where.a, where.b, where.c));
    auto moved = apply_move(k, where);
    CHECK(r3_applicable(moved, where.a, where.b, where.c));
    CHECK(apply_move(moved, where) == k);
    CHECK(self_linking(moved) == self_linking(k));
  }
}

TEST_CASE("classical R3 from the braid relation is a legal R3 move") {
  // Closures of u s1 s2 s1 v and u s2 s1 s2 v differ by one R3 move.
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 40; ++t) {
    auto u = random_braid(rng, 3, 2, false), v = random_braid(rng, 3, 3, false);
    for (const auto& [lhs, rhs] : std::vector<std::pair<std::string, std::string>>{{"s1 s2 s1", "s2 s1 s2"}, {"s1 s2 S1", "S2 s1 s2"}}) {
      auto left = u * braid(3, lhs) * v, right = u * braid(3, rhs) * v;
      GaussDiagram kl, kr;
      try {
        kl = braid_closure(left);
        kr = braid_closure(right);
      } catch (const Error&) {
        continue;
      }
      bool found = false;
      for (const auto& m : legal_local_moves(kl))
        if (m.kind == MoveKind::R3 && apply_move(kl, m) == kr) found = true;
      CHECK(found);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("random legal moves invert and preserve self-linking") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    auto k = random_gauss_diagram(rng, t % 5);
    if (t % 3 == 0) k = insert_random_r3(rng, k);
    const bool with_r1 = t % 4 == 0;
    auto m = random_legal_move(rng, k, with_r1);
    auto moved = apply_move(k, m);
    CHECK(apply_move(moved, inverse_move(k, m)) == k);
    const int dn = moved.crossings() - k.crossings();
    switch (m.kind) {
      case MoveKind::R1Add: CHECK(dn == 1); break;
      case MoveKind::R1Remove: CHECK(dn == -1); break;
      case MoveKind::R2Add: CHECK(dn == 2); break;
      case MoveKind::R2Remove: CHECK(dn == -2); break;
      default: CHECK(dn == 0);
    }
    if (m.kind != MoveKind::R1Add && m.kind != MoveKind::R1Remove) CHECK(self_linking(moved) == self_linking(k));
  }
}
