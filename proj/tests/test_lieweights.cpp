#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wknots/lieweights.hpp"

using namespace wk;

namespace {

const Skeleton kLong = Skeleton::long_strand();

std::string read_data(const std::string& rel) {
  std::ifstream in(std::string(WK_DATA_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, LieData>> fixtures() {
  return {{"abelian", lie_abelian(2)}, {"two-dim", lie_two_dim()}, {"sl2", lie_sl2()}};
}

}  // namespace

TEST_CASE("Lie data validation") {
  CHECK(lie_validate(lie_abelian(3)));
  CHECK(lie_validate(lie_two_dim()));
  CHECK(lie_validate(lie_sl2()));
  // [h,e] = -2e with [h,f] = -2f keeps antisymmetry but breaks Jacobi on (e,f,h).
  LieData bad = lie_sl2();
  bad.set(3, 1, 1, -2);
  bad.set(1, 3, 1, 2);
  CHECK(!lie_validate(bad));
  LieData skew = lie_two_dim();
  skew.set(2, 1, 2, 1);
  CHECK(!lie_validate(skew));
  CHECK_THROWS_AS(weight_system(ArrowDiagram(kLong, {{1, 2}}), bad), Error);
  CHECK(bad.b(3, 1, 1) == -bad.c(3, 1, 1));
}

TEST_CASE("Lie data text format") {
  LieData sl2 = parse_lie_data(read_data("lie/sl2.lie"));
  CHECK(format_lie_data(sl2) == format_lie_data(lie_sl2()));
  CHECK(format_lie_data(parse_lie_data(read_data("lie/two_dim.lie"))) == format_lie_data(lie_two_dim()));
  CHECK(parse_lie_data(read_data("lie/abelian2.lie")).dimension() == 2);
  CHECK(format_lie_data(parse_lie_data(format_lie_data(sl2))) == format_lie_data(sl2));
  CHECK(parse_lie_data("dimension=2\nc[1,2,2]=1/2 # half\nc[2,1,2]=-1/2\n").c(1, 2, 2) == Rational(1, 2));
  CHECK_THROWS_AS(parse_lie_data("c[1,2,2]=1\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_data("dimension=2\nc[1,3,2]=1\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_data("dimension=2\nc[1,2]=1\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_data("dimension=2\nc[1,2,2]=x\n"), ParseError);
  try {
    parse_lie_data("dimension=2\n\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("PBW straightening") {
  const LieData L = lie_two_dim();  // phi1 = 0, phi2 = 1, x1 = 2, x2 = 3
  CHECK(pbw_normalize({2, 3}, L).str() == "x1 x2");
  // x2 x1 = x1 x2 - [x1, x2] = x1 x2 - x2.
  CHECK(pbw_normalize({3, 2}, L).str() == "x1 x2 - x2");
  // x2 phi1 = phi1 x2 + [x2, phi1], and [x2, phi1] = -c(2,1,1) phi1 - c(2,2,1) phi2 = 0.
  CHECK(pbw_normalize({3, 0}, L).str() == "phi1 x2");
  // [x1, phi2] = -c(1,2,2) phi2 = -phi2.
  CHECK(pbw_normalize({2, 1}, L).str() == "-phi2 + phi2 x1");
  CHECK(pbw_normalize({1, 0}, L).str() == "phi1 phi2");
  CHECK(pbw_normalize({}, L).str() == "1");
  CHECK_THROWS_AS(pbw_normalize({4}, L), Error);
}

TEST_CASE("weight system on small diagrams") {
  CHECK(weight_system(ArrowDiagram(), lie_sl2()) == PBWElement::unit(3, 1));
  CHECK(weight_system(ArrowDiagram(kLong, {{1, 2}}), lie_abelian(2)).str() == "phi1 x1 + phi2 x2");
  // The backward arrow differs from the forward one by the trace of ad on phi.
  CHECK(weight_system(ArrowDiagram(kLong, {{2, 1}}), lie_two_dim()).str() == "phi1 + phi1 x1 + phi2 x2");
  auto two = weight_system(ArrowDiagram(Skeleton::braid(2), {{1, 2}}), lie_abelian(1));
  CHECK(two.factors() == 2);
  CHECK(two.str() == "phi1 | x1");
}

TEST_CASE("weight systems kill TC and 4T relators through degree 3") {
  for (const auto& [name, L] : fixtures()) {
    CAPTURE(name);
    for (auto s : {kLong, Skeleton::braid(3)})
      for (int m = 2; m <= 3; ++m)
        for (const auto& r : generate_relations(s, m, RelationSet{Relation::TC, Relation::FourT}))
          CHECK(weight_system(r, L).is_zero());
  }
}

TEST_CASE("weight systems see what the relations do not kill") {
  // RI survives for the non-unimodular two-dimensional algebra and dies for sl2.
  bool ri_survives = false;
  for (const auto& r : generate_relations(kLong, 2, RelationSet{Relation::RI}))
    ri_survives = ri_survives || !weight_system(r, lie_two_dim()).is_zero();
  CHECK(ri_survives);
  for (const auto& r : generate_relations(kLong, 2, RelationSet{Relation::RI}))
    CHECK(weight_system(r, lie_sl2()).is_zero());
  CHECK(!weight_system(ArrowDiagram(kLong, {{1, 2}}), lie_sl2()).is_zero());
}

TEST_CASE("weight system is multiplicative") {
  std::mt19937_64 rng(13);
  for (auto s : {kLong, Skeleton::braid(3)}) {
    for (int t = 0; t < 8; ++t) {
      auto da = enumerate_diagrams(s, 1 + t % 2);
      auto db = enumerate_diagrams(s, 1);
      const auto& a = da[rng() % da.size()];
      const auto& b = db[rng() % db.size()];
      for (const auto& [name, L] : fixtures()) {
        CAPTURE(name);
        CHECK(weight_system(concatenate(a, b), L) == pbw_product(weight_system(a, L), weight_system(b, L), L));
      }
    }
  }
}
