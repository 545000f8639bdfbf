#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cc4/sturm.hpp"

using namespace cc4;

static const std::vector<std::string> X{"x"};

static UPoly up(const std::string& e) { return upoly_from(poly_expr(X, e), "x"); }

TEST_CASE("counts on pinned examples") {
  CHECK(sturm_count(up("x^2 - 2"), rat(0), rat(2)) == 1);
  CHECK(sturm_count(up("(x-1)*(x-2)*(x-3)"), rat(0), rat(5, 2)) == 2);
  CHECK(sturm_count(up("x^2 + 1"), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_count(up("x^3 - x"), std::nullopt, std::nullopt) == 3);
}

TEST_CASE("endpoint roots are not counted") {
  // Roots at the endpoints belong to the closed boundary, not the open interval.
  CHECK(sturm_count(up("x*(x-1)"), rat(0), rat(1)) == 0);
  CHECK(sturm_count(up("x*(x-1)*(x-1/2)"), rat(0), rat(1)) == 1);
}

TEST_CASE("cauchy bound encloses all roots") {
  UPoly p = up("x^3 - 7*x + 3");
  Rat b = cauchy_bound(p);
  CHECK(sturm_count(p, -b, b) == sturm_count(p, std::nullopt, std::nullopt));
}

TEST_CASE("isolation") {
  auto ivs = isolate_real_roots(up("x^2 - 2"), rat(0), rat(2));
  REQUIRE(ivs.size() == 1);
  CHECK(ivs[0].lo < ivs[0].hi);
  CHECK(sturm_count(ivs[0].target, ivs[0].lo, ivs[0].hi) == 1);

  auto three = isolate_real_roots(up("x^3 - x"), rat(-2), rat(2));
  REQUIRE(three.size() == 3);
  // Sorted and pairwise disjoint.
  CHECK(three[0].hi <= three[1].lo);
  CHECK(three[1].hi <= three[2].lo);
  // The middle interval contains 0.
  CHECK(three[1].lo <= rat(0));
  CHECK(three[1].hi >= rat(0));
}

TEST_CASE("isolation on non squarefree input works via squarefree part") {
  auto ivs = isolate_real_roots(up("(x-1)^2*(x+3)"), std::nullopt, std::nullopt);
  CHECK(ivs.size() == 2);
}

TEST_CASE("refinement keeps the bracket") {
  auto ivs = isolate_real_roots(up("x^2 - 2"), rat(0), rat(2));
  REQUIRE(ivs.size() == 1);
  auto r = refine_root(ivs[0], rat(1, 1000000));
  CHECK(r.hi - r.lo <= rat(1, 1000000));
  CHECK(sign(upeval(r.target, r.lo)) * sign(upeval(r.target, r.hi)) == -1);
  double v = to_double(r.mid());
  CHECK(v == doctest::Approx(1.41421356).epsilon(1e-5));
  // Idempotence: refining to the current width never widens.
  auto r2 = refine_root(r, r.hi - r.lo);
  CHECK(r2.hi - r2.lo <= r.hi - r.lo);
}

TEST_CASE("rational root hit during refinement") {
  auto ivs = isolate_real_roots(up("x^2 - 1/4"), rat(0), rat(2));
  REQUIRE(ivs.size() == 1);
  auto r = refine_root(ivs[0], rat(1, 1 << 20));
  CHECK(r.contains(rat(1, 2)));
  CHECK(r.hi - r.lo <= rat(1, 1 << 20));
}
