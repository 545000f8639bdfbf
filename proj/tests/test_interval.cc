#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cc4/interval.hpp"

using namespace cc4;

static const std::vector<std::string> XY{"x", "y"};

TEST_CASE("interval arithmetic basics") {
  RatInterval a{rat(-1), rat(2)}, b{rat(3), rat(4)};
  auto s = iadd(a, b);
  CHECK(s.lo == rat(2));
  CHECK(s.hi == rat(6));
  auto m = imul(a, b);
  CHECK(m.lo == rat(-4));
  CHECK(m.hi == rat(8));
  auto sq = ipow(a, 2);
  CHECK(sq.lo == rat(0));  // straddles zero, even power clamps at 0
  CHECK(sq.hi == rat(4));
  auto cu = ipow(a, 3);
  CHECK(cu.lo == rat(-1));
  CHECK(cu.hi == rat(8));
}

TEST_CASE("definite sign") {
  CHECK(RatInterval(rat(1, 10), rat(2)).definite_sign() == 1);
  CHECK(RatInterval(rat(-2), rat(-1)).definite_sign() == -1);
  CHECK(RatInterval(rat(-1), rat(1)).definite_sign() == 0);
}

TEST_CASE("polynomial enclosure") {
  Poly p = poly_expr(XY, "x + y");
  std::map<std::string, RatInterval> box{{"x", {rat(0), rat(1)}}, {"y", {rat(0), rat(1)}}};
  auto e = eval_interval(p, box);
  CHECK(e.lo == rat(0));
  CHECK(e.hi == rat(2));

  Poly q = poly_expr(XY, "x^2 - 2");
  std::map<std::string, RatInterval> nearroot{
      {"x", {rat_parse("1.414213"), rat_parse("1.414214")}},
      {"y", RatInterval::point(rat(0))}};
  auto r = eval_interval(q, nearroot);
  CHECK(r.contains_zero());
  CHECK(r.width() < rat(1, 100000));
}

TEST_CASE("unassigned variable is an error") {
  Poly p = poly_expr(XY, "x*y");
  std::map<std::string, RatInterval> box{{"x", {rat(0), rat(1)}}};
  CHECK_THROWS(eval_interval(p, box));
}
