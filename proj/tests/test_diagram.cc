#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cc4/diagram.hpp"

using namespace cc4;

namespace {

Diagram parallel_pair() {
  // zw(12), zw(34); every vertex circled in both colors.
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(3, 4);
  d.set_w_stroke(3, 4);
  d.z_circles = d.w_circles = 0b1111;
  return d;
}

Diagram disjoint_single() {
  // z(12), w(34); all circled as closure demands.
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(3, 4);
  d.z_circles = 0b0011;
  d.w_circles = 0b1100;
  return d;
}

Diagram alternating_cycle() {
  // z(12), w(23), z(34), w(14); every vertex circled in both colors.
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(2, 3);
  d.set_z_stroke(3, 4);
  d.set_w_stroke(1, 4);
  d.z_circles = d.w_circles = 0b1111;
  return d;
}

Diagram chain() {
  // zw(12), z(23), zw(34); closure circles everything.
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(2, 3);
  d.set_z_stroke(3, 4);
  d.set_w_stroke(3, 4);
  d.z_circles = d.w_circles = 0b1111;
  return d;
}

Diagram quad(bool pair_circled, bool all_circled) {
  // zw(12), z(23), zw(34), z(14); w-circles everywhere, z-circles vary.
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(2, 3);
  d.set_z_stroke(3, 4);
  d.set_w_stroke(3, 4);
  d.set_z_stroke(1, 4);
  d.w_circles = 0b1111;
  if (all_circled)
    d.z_circles = 0b1111;
  else if (pair_circled)
    d.z_circles = 0b0011;
  return d;
}

Diagram triangle(int z_mask, int w_mask) {
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(1, 3);
  d.set_w_stroke(1, 3);
  d.set_z_stroke(2, 3);
  d.set_w_stroke(2, 3);
  d.z_circles = z_mask;
  d.w_circles = w_mask;
  return d;
}

Diagram pointed_triangle() {
  Diagram d = triangle(0, 0b1111);
  d.set_w_stroke(1, 4);
  return d;
}

Diagram full_edges(bool z_circ, bool w_circ) {
  Diagram d;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      d.set_z_stroke(a, b);
      d.set_w_stroke(a, b);
    }
  if (z_circ) d.z_circles = 0b1111;
  if (w_circ) d.w_circles = 0b1111;
  return d;
}

std::map<int, int> count_by_stratum(const std::vector<Candidate>& cs) {
  std::map<int, int> n;
  for (const auto& c : cs) ++n[c.c];
  return n;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling and color swap") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    Diagram d{uint8_t(rng() & 63), uint8_t(rng() & 63), uint8_t(rng() & 15),
              uint8_t(rng() & 15)};
    Diagram cd = canonical(d);
    std::array<int, 4> perm = {1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical(relabel(d, perm)) == cd);
    CHECK(canonical(color_swap(d)) == cd);
    CHECK(canonical(cd) == cd);
  }
}

TEST_CASE("c-number picks the busiest bicolored vertex") {
  CHECK(c_number(disjoint_single()) == 0);
  CHECK(c_number(parallel_pair()) == 2);
  CHECK(c_number(alternating_cycle()) == 2);
  CHECK(c_number(chain()) == 3);
  CHECK(c_number(quad(false, false)) == 3);
  CHECK(c_number(triangle(0, 0)) == 4);
  CHECK(c_number(pointed_triangle()) == 5);
  CHECK(c_number(full_edges(false, false)) == 6);
}

TEST_CASE("structural rule verdicts") {
  SUBCASE("mixed triangle fails Rule IX") {
    Diagram d;
    d.set_z_stroke(1, 2);
    d.set_z_stroke(2, 3);
    d.set_w_stroke(1, 3);
    auto v = check_rule(d, "IX");
    CHECK_FALSE(v.pass);
    CHECK(v.witness == std::vector<int>{1, 2, 3});
  }
  SUBCASE("two consecutive zw-edges need the closing third") {
    Diagram d;
    d.set_z_stroke(1, 2);
    d.set_w_stroke(1, 2);
    d.set_z_stroke(1, 3);
    d.set_w_stroke(1, 3);
    CHECK_FALSE(check_rule(d, "VI").pass);
    d.set_z_stroke(2, 3);
    d.set_w_stroke(2, 3);
    CHECK(check_rule(d, "VI").pass);
  }
  SUBCASE("quadrilateral opposite edges must share a type") {
    CHECK(check_rule(alternating_cycle(), "XI").pass);
    CHECK(check_rule(full_edges(false, false), "XI").pass);
    Diagram d;
    d.set_z_stroke(1, 2);
    d.set_w_stroke(2, 3);
    d.set_w_stroke(3, 4);
    d.set_w_stroke(1, 4);
    CHECK_FALSE(check_rule(d, "XI").pass);
  }
  SUBCASE("a single zw-edge is impossible") {
    Diagram d;
    d.set_z_stroke(1, 2);
    d.set_w_stroke(1, 2);
    d.set_z_stroke(3, 4);
    CHECK_FALSE(check_rule(d, "XII-corollary").pass);
    CHECK(check_rule(parallel_pair(), "XII-corollary").pass);
  }
  SUBCASE("lone circles and bare stroke ends fail Rule I") {
    Diagram d = disjoint_single();
    CHECK(check_rule(d, "I").pass);
    d.z_circles = 0b0001;
    CHECK_FALSE(check_rule(d, "I").pass);
  }
  SUBCASE("circling is uniform on provably close vertices") {
    Diagram d = parallel_pair();
    CHECK(check_rule(d, "II").pass);
    d.z_circles = 0b0111;
    CHECK_FALSE(check_rule(d, "II").pass);
  }
  SUBCASE("no component holds exactly one circle") {
    Diagram d = alternating_cycle();
    CHECK(check_rule(d, "IV").pass);
    d.w_circles = 0;
    d.z_circles = 0b0001;
    CHECK_FALSE(check_rule(d, "IV").pass);
  }
  SUBCASE("analytic rules are rejected") {
    for (const char* r : {"III", "V", "VII", "VIII", "XII"})
      CHECK_THROWS_AS(check_rule(parallel_pair(), r), std::invalid_argument);
  }
}

TEST_CASE("closeness propagates through strokes of the other color") {
  Closeness c = closeness(chain());
  CHECK(c.z_close(1, 2));
  CHECK(c.z_close(3, 4));
  CHECK_FALSE(c.z_close(2, 3));
  CHECK(c.w_close(1, 2));
  CHECK(c.w_close(2, 3));
  CHECK(c.w_close(1, 4));
}

TEST_CASE("forced zero sums") {
  auto sums = [](const Diagram& d) { return forced_zero_sums(d); };
  CHECK(sums(disjoint_single()).empty());
  CHECK(sums(alternating_cycle()).empty());
  CHECK(sums(parallel_pair()) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(sums(chain()) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(sums(quad(false, false)).empty() == false);
  CHECK(sums(triangle(0b0111, 0b0111)) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(sums(triangle(0, 0)).empty());
  CHECK(sums(full_edges(true, true)) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(sums(pointed_triangle()).empty());
}

TEST_CASE("classification of individual diagrams") {
  auto st = [](const Classification& c) { return c.status; };
  using S = Classification::Status;

  CHECK(st(classify(disjoint_single(), false)) == S::Survivor);
  CHECK(classify(disjoint_single(), false).cls == DiagramClass::I);
  CHECK(classify(disjoint_single(), false).labeling == std::vector<int>{1, 2, 3, 4});
  CHECK(classify(disjoint_single(), true).cls == DiagramClass::I0);

  CHECK(classify(alternating_cycle(), false).cls == DiagramClass::II);
  CHECK(classify(alternating_cycle(), false).labeling == std::vector<int>{1, 3, 2, 4});
  CHECK(classify(alternating_cycle(), true).cls == DiagramClass::II0);

  // Pair sums forced to zero contradict nonzero total mass; the shape only
  // matters when the total mass vanishes.
  CHECK(st(classify(parallel_pair(), false)) == S::MassExcluded);
  CHECK(classify(parallel_pair(), true).cls == DiagramClass::ZW2_PAR);

  CHECK(st(classify(chain(), false)) == S::MassExcluded);
  CHECK(st(classify(chain(), true)) == S::LemmaExcluded);

  CHECK(st(classify(quad(false, false), false)) == S::MassExcluded);
  CHECK(classify(quad(false, false), true).cls == DiagramClass::ZW2_QUAD);
  CHECK(st(classify(quad(true, false), true)) == S::LemmaExcluded);
  CHECK(classify(quad(false, true), true).cls == DiagramClass::ZW2_QUAD_CIRC);

  CHECK(classify(triangle(0, 0), false).cls == DiagramClass::III);
  CHECK(classify(triangle(0, 0), false).labeling == std::vector<int>{1, 2, 3});
  CHECK(st(classify(triangle(0, 0), true)) == S::LemmaExcluded);
  CHECK(st(classify(triangle(0b0111, 0), false)) == S::LemmaExcluded);
  CHECK(st(classify(triangle(0b0111, 0), true)) == S::MassExcluded);
  CHECK(classify(triangle(0b0111, 0b0111), false).cls == DiagramClass::IV);
  CHECK(st(classify(triangle(0b0111, 0b0111), true)) == S::MassExcluded);

  CHECK(classify(pointed_triangle(), false).cls == DiagramClass::V);
  CHECK(classify(pointed_triangle(), false).labeling == std::vector<int>{1, 2, 3});
  CHECK(st(classify(pointed_triangle(), true)) == S::LemmaExcluded);

  CHECK(classify(full_edges(false, false), false).cls == DiagramClass::VI);
  CHECK(classify(full_edges(false, false), true).cls == DiagramClass::FE);
  CHECK(st(classify(full_edges(true, true), false)) == S::MassExcluded);
  CHECK(classify(full_edges(true, true), true).cls == DiagramClass::FE_FULL);
  CHECK(classify(full_edges(true, false), true).cls == DiagramClass::FE_HALF);

  // Y shape: three strokes at one hub; closure demands circles the strokeless
  // color cannot host.
  Diagram y;
  y.set_z_stroke(1, 2);
  y.set_z_stroke(1, 3);
  y.set_w_stroke(1, 4);
  auto cy = classify(y, false);
  CHECK(cy.status == S::RuleExcluded);
}

TEST_CASE("enumeration matches the catalog") {
  for (bool flag : {false, true}) {
    CAPTURE(flag);
    auto all = enumerate_candidates(flag);

    std::map<int, int> valid;
    for (const auto& c : all)
      if (c.cls.status != Classification::Status::RuleExcluded) ++valid[c.c];
    CHECK(valid == std::map<int, int>{{0, 1}, {2, 2}, {3, 4}, {4, 3}, {5, 1}, {6, 3}});

    // Every structurally valid C=3 diagram forces both pair sums.
    for (const auto& c : all)
      if (c.c == 3 && c.cls.status != Classification::Status::RuleExcluded)
        CHECK(c.forced_sums.size() == 2);
  }

  auto nz = survivors(false);
  CHECK(count_by_stratum(nz) ==
        std::map<int, int>{{0, 1}, {2, 1}, {4, 2}, {5, 1}, {6, 1}});
  auto z = survivors(true);
  CHECK(count_by_stratum(z) == std::map<int, int>{{0, 1}, {2, 2}, {3, 2}, {6, 3}});

  std::set<DiagramClass> classes;
  for (const auto& c : nz) classes.insert(c.cls.cls);
  for (const auto& c : z) classes.insert(c.cls.cls);
  CHECK(classes.size() == 14);
}

TEST_CASE("classification is invariant under relabeling and color swap") {
  std::mt19937 rng(7);
  std::vector<Diagram> pool = {disjoint_single(), alternating_cycle(), parallel_pair(),
                               chain(),           quad(false, false),  quad(true, false),
                               triangle(0, 0),    triangle(0b0111, 0b0111),
                               pointed_triangle(), full_edges(false, false),
                               full_edges(true, true)};
  for (const Diagram& d : pool)
    for (int trial = 0; trial < 10; ++trial) {
      std::array<int, 4> perm = {1, 2, 3, 4};
      std::shuffle(perm.begin(), perm.end(), rng);
      Diagram rd = trial % 2 ? relabel(color_swap(d), perm) : relabel(d, perm);
      for (bool flag : {false, true}) {
        auto a = classify(d, flag), b = classify(rd, flag);
        CHECK(a.status == b.status);
        if (a.status == Classification::Status::Survivor) CHECK(a.cls == b.cls);
      }
    }
}
