#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cc4/mass.hpp"

using namespace cc4;

static ExactReal sqrt_value(long n) {
  // Positive root of x^2 - n.
  UPoly t{rat(-n), rat(0), rat(1)};
  return ExactReal(IsolatingInterval{rat(0), rat(n + 1), t, "x"});
}

TEST_CASE("root enclosures") {
  auto e = root_enclosure(rat(2), 2, 40);
  CHECK(e.width() == pow2(-40));
  CHECK(e.lo * e.lo <= rat(2));
  CHECK(e.hi * e.hi >= rat(2));

  auto c = root_enclosure(rat(-27), 3, 20);
  CHECK(c.contains(rat(-3)));

  auto q = root_enclosure(rat(81, 16), 4, 20);
  CHECK(q.contains(rat(3, 2)));

  CHECK_THROWS(root_enclosure(rat(-2), 2, 20));
}

TEST_CASE("exact reals: rational and algebraic") {
  ExactReal half(rat(1, 2));
  CHECK(half.is_rational());
  CHECK(half.sgn() == 1);
  CHECK(ExactReal(rat(0)).sgn() == 0);

  ExactReal r2 = sqrt_value(2);
  CHECK_FALSE(r2.is_rational());
  CHECK(r2.sgn() == 1);
  auto e = r2.enclosure(pow2(-50));
  CHECK(e.width() <= pow2(-50));
  CHECK(r2.approx() == doctest::Approx(1.41421356).epsilon(1e-8));
}

TEST_CASE("comparison decides equality across representations") {
  ExactReal a = sqrt_value(2);
  // Same value as a root of (x^2-2)(x^2+2) = x^4 - 4.
  UPoly t{rat(-4), rat(0), rat(0), rat(0), rat(1)};
  ExactReal b(IsolatingInterval{rat(1), rat(2), t, "x"});
  CHECK(compare(a, b) == 0);
  CHECK(compare(a, ExactReal(rat(3, 2))) < 0);
  CHECK(compare(a, ExactReal(rat(7, 5))) > 0);
  CHECK(compare(ExactReal(rat(1)), sqrt_value(2)) < 0);
  CHECK(compare(sqrt_value(3), sqrt_value(2)) > 0);
}

TEST_CASE("mu sigma round trip on rational masses") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  int done = 0;
  while (done < 200) {
    std::array<Rat, 4> m;
    bool ok = true;
    for (auto& v : m) {
      v = rat(num(rng), den(rng));
      if (sign(v) == 0) ok = false;
    }
    if (!ok) continue;
    ++done;
    auto q = MassQuadruple::of(m[0], m[1], m[2], m[3]);
    MuSigma ms = to_mu_sigma(q);
    CHECK(compare(ms.mu[0], ExactReal(rat(1))) == 0);
    for (int i = 0; i < 4; ++i) {
      CHECK(ms.sig[i] == sign(m[i]));
      // mu^2 agrees with the stored exact square.
      auto mu2 = ms.mu[i].enclosure(pow2(-80));
      auto sq = imul(mu2, mu2);
      CHECK(sq.contains(ms.musq[i].rational()));
    }
    MassQuadruple back = from_mu_sigma(ms, rat_abs(m[0]));
    for (int i = 0; i < 4; ++i) CHECK(back.m[i].rational() == m[i]);
  }
}

TEST_CASE("mu sigma with an algebraic mass") {
  // m3 = -sqrt(3): mu3 = 3^(1/4).
  UPoly t{rat(-3), rat(0), rat(1)};
  ExactReal m3(IsolatingInterval{rat(-2), rat(-1), t, "x"});
  MassQuadruple q;
  q.m = {ExactReal(rat(1)), ExactReal(rat(4)), m3, ExactReal(rat(-1))};
  MuSigma ms = to_mu_sigma(q);
  CHECK(ms.sig[2] == -1);
  CHECK(compare(ms.mu[1], ExactReal(rat(2))) == 0);
  auto e = ms.mu[2].enclosure(pow2(-60));
  auto fourth = ipow(e, 4);
  CHECK(fourth.contains(rat(3)));
  CHECK(fourth.width() < pow2(-40));
  CHECK_THROWS(from_mu_sigma(ms, rat(1)));
}

TEST_CASE("quadruple helpers") {
  auto q = MassQuadruple::of(rat(1), rat(-2), rat(3), rat(-4));
  CHECK(q.all_nonzero());
  CHECK(q.all_rational());
  auto box = q.box(pow2(-10));
  CHECK(box.at("m2").contains(rat(-2)));
  CHECK_FALSE(MassQuadruple::of(rat(1), rat(0), rat(3), rat(4)).all_nonzero());
}
