#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cc4/constraints.hpp"

using namespace cc4;

static MassQuadruple masses(long a, long b, long c, long d) {
  return MassQuadruple::of(rat(a), rat(b), rat(c), rat(d));
}

TEST_CASE("canonical labelings") {
  CHECK(ConstraintSetId::pair_sets(Family::V_IB, 3, 4, 2, 1).str() == "V_IB[12,34]");
  CHECK(ConstraintSetId::pair_sets(Family::V_II, 4, 2, 3, 1).str() == "V_II[13,24]");
  CHECK(ConstraintSetId::triangle(Family::V_III, 3, 1, 2).str() == "V_III[123]");
  CHECK(ConstraintSetId::pointed(Family::V_V, 3, 4, 1).str() == "V_V[3,14]");
  CHECK(ConstraintSetId::plain(Family::V_m0).str() == "V_m0");
  CHECK(ConstraintSetId::pair_sets(Family::V_IA, 1, 2, 3, 4) ==
        ConstraintSetId::pair_sets(Family::V_IA, 4, 3, 2, 1));
  CHECK_THROWS(ConstraintSetId::pair_sets(Family::V_IA, 1, 1, 3, 4));
  CHECK_THROWS(ConstraintSetId::triangle(Family::V_IA, 1, 2, 3));
}

TEST_CASE("branch inventories") {
  CHECK(constraint_system(ConstraintSetId::pair_sets(Family::V_IB, 1, 2, 3, 4)).size() == 4);
  CHECK(constraint_system(ConstraintSetId::pair_sets(Family::V_I0, 1, 2, 3, 4)).size() == 8);
  CHECK(constraint_system(ConstraintSetId::triangle(Family::V_III, 1, 2, 3)).size() == 4);
  CHECK(constraint_system(ConstraintSetId::triangle(Family::V_IV, 1, 2, 3)).size() == 3);
  auto ii = constraint_system(ConstraintSetId::pair_sets(Family::I_II, 1, 3, 2, 4));
  REQUIRE(ii.size() == 1);
  CHECK(ii[0].vars.size() == 8);
  CHECK(ii[0].equations.size() == 5);
  CHECK(ii[0].strict_negations.size() == 4);
  // The all-plus reciprocal-square-root branch is retained but marked.
  auto v3 = constraint_system(ConstraintSetId::triangle(Family::V_III, 1, 2, 3));
  bool marked = false;
  for (const auto& s : v3)
    if (s.sigma_branch == std::vector<int>{1, 1} && !s.note.empty()) marked = true;
  CHECK(marked);
}

TEST_CASE("radical sign oracle") {
  std::vector<std::string> v{"y1", "y2"};
  Poly e1 = Poly::variable(v, "y1") - Poly::variable(v, "y2") * rat(2);
  CHECK(radical_sign(e1, {{"y1", rat(8), 2}, {"y2", rat(2), 2}}) == 0);
  Poly e2 = Poly::variable(v, "y1") - Poly::variable(v, "y2");
  CHECK(radical_sign(e2, {{"y1", rat(799, 100), 2}, {"y2", rat(8), 2}}) == -1);
  Poly e3 = Poly::variable(v, "y1") + Poly::variable(v, "y2");
  CHECK(radical_sign(e3, {{"y1", rat(2), 3}, {"y2", rat(-2), 3}}) == 0);
  // sqrt(2) + sqrt(3) - sqrt(5 + 1/1000) is a tiny but nonzero gap.
  std::vector<std::string> w{"y1", "y2", "y3"};
  Poly e4 = Poly::variable(w, "y1") + Poly::variable(w, "y2") - Poly::variable(w, "y3");
  CHECK(radical_sign(
            e4, {{"y1", rat(2), 2}, {"y2", rat(3), 2}, {"y3", rat(5) + rat(1, 1000), 2}}) ==
        1);
  // sqrt(2)*sqrt(3) - sqrt(6) = 0 exactly.
  Poly e5 = Poly::variable(w, "y1") * Poly::variable(w, "y2") - Poly::variable(w, "y3");
  CHECK(radical_sign(e5, {{"y1", rat(2), 2}, {"y2", rat(3), 2}, {"y3", rat(6), 2}}) == 0);
}

TEST_CASE("equal-pair and triangle membership") {
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_IA, 1, 2, 3, 4), masses(1, 1, 5, 5)) ==
        Membership::In);
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_IA, 1, 2, 3, 4), masses(1, 2, 5, 5)) ==
        Membership::Out);
  CHECK(membership(ConstraintSetId::triangle(Family::V_IV, 1, 2, 3), masses(1, 2, -3, 7)) ==
        Membership::In);
  CHECK(membership(ConstraintSetId::triangle(Family::V_IV, 1, 2, 3), masses(1, 2, 3, 7)) ==
        Membership::Out);
  CHECK(membership(ConstraintSetId::triangle(Family::V_IV, 2, 3, 4), masses(9, 1, 2, -3)) ==
        Membership::In);
}

TEST_CASE("reciprocal square-root triangle") {
  auto id = ConstraintSetId::triangle(Family::V_III, 1, 2, 3);
  // 1/1 - 1/2 - 1/2 = 0 with |m2| = |m3| = 4.
  CHECK(membership(id, masses(1, 4, 4, 9)) == Membership::In);
  CHECK(membership(id, masses(1, -4, 4, 9)) == Membership::In);  // signs are free
  CHECK(membership(id, masses(1, 4, 9, 1)) == Membership::Out);
  CHECK(membership(id, masses(1, 1, 1, 1)) == Membership::Out);  // all-plus is empty
}

TEST_CASE("apex-base set") {
  auto id = ConstraintSetId::pointed(Family::V_V, 1, 2, 3);
  // 1^2 * (4+4)^4 = 4^3 * 4^3.
  CHECK(membership(id, masses(1, 4, 4, 7)) == Membership::In);
  CHECK(membership(id, masses(1, 4, 5, 7)) == Membership::Out);
  // The squared form forces m2*m3 > 0: mixed signs cannot satisfy it.
  CHECK(membership(id, masses(1, -4, 4, 7)) == Membership::Out);
}

TEST_CASE("two-term cube-root set") {
  auto id = ConstraintSetId::pair_sets(Family::I_I, 1, 2, 3, 4);
  // Antisymmetric masses (a, b, -b, -a) cancel the two terms exactly.
  CHECK(membership(id, masses(2, 3, -3, -2)) == Membership::In);
  CHECK(membership(id, masses(1, 1, 1, 1)) == Membership::Out);
  // Zero pair sum is excluded by the strict negation.
  CHECK(membership(id, masses(2, -2, 3, 4)) == Membership::Out);
}

TEST_CASE("four-term cube-root cycle") {
  auto id = ConstraintSetId::pair_sets(Family::I_II, 1, 3, 2, 4);
  CHECK(membership(id, MassQuadruple::of(rat(1), rat(-1, 2), rat(-1, 2), rat(1))) ==
        Membership::Out);
  CHECK(membership(id, masses(1, 2, 3, 4)) == Membership::Out);
}

TEST_CASE("signed pair split set") {
  auto id = ConstraintSetId::pair_sets(Family::V_IB, 1, 2, 3, 4);
  // All-positive masses fail the sign preconditions outright.
  CHECK(membership(id, masses(1, 1, 1, 1)) == Membership::Out);
  CHECK(membership(id, masses(1, 2, 3, 4)) == Membership::Out);
  CHECK(membership(id, masses(1, 1, -1, -1)) == Membership::Out);  // pair products positive
  // |m2| = 1 violates the strict negation on the first pair sum.
  CHECK(membership(id, masses(1, -1, 4, -1)) == Membership::Out);
  // Known solution: u2^3 = 9/7, u3 = 2, u4 = 1 satisfies the (+,-) branch;
  // m2 is the algebraic -(81/49)^(1/3), so the interval path cannot rule it out.
  UPoly t{rat(81), rat(0), rat(0), rat(49)};  // 49 x^3 + 81
  ExactReal m2(IsolatingInterval{rat(-2), rat(-1), t, "x"});
  MassQuadruple q;
  q.m = {ExactReal(rat(1)), m2, ExactReal(rat(4)), ExactReal(rat(-1))};
  CHECK(membership(id, q) == Membership::Boundary);
  // Perturbing m3 makes every branch fail definitely.
  q.m[2] = ExactReal(rat(5));
  CHECK(membership(id, q) == Membership::Out);
}

TEST_CASE("zero-total-mass families") {
  CHECK(membership(ConstraintSetId::plain(Family::V_m0), masses(1, 2, -2, -1)) ==
        Membership::In);
  CHECK(membership(ConstraintSetId::plain(Family::V_m0), masses(1, 2, 2, 1)) ==
        Membership::Out);
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_IA0, 1, 2, 3, 4),
                   masses(2, 2, -2, -2)) == Membership::In);
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_IA0, 1, 2, 3, 4),
                   masses(2, 2, -3, -3)) == Membership::Out);
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_ZW2, 1, 2, 3, 4),
                   masses(2, -2, -2, 2)) == Membership::In);
  CHECK(membership(ConstraintSetId::pair_sets(Family::V_ZW2, 1, 2, 3, 4),
                   masses(2, -2, 3, -3)) == Membership::Out);
}

TEST_CASE("diagonal product set") {
  auto id = ConstraintSetId::pair_sets(Family::V_II, 1, 3, 2, 4);
  CHECK(membership(id, masses(2, 3, 6, 4)) == Membership::In);  // 2*6 == 3*4
  CHECK(membership(id, masses(2, 3, 5, 4)) == Membership::Out);
  // An adjacent zero pair sum violates the strict negation.
  CHECK(membership(id, masses(2, -2, 2, -2)) == Membership::Out);
}

TEST_CASE("membership soundness against direct evaluation") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> num(-8, 8);
  auto vII = ConstraintSetId::pair_sets(Family::V_II, 1, 3, 2, 4);
  auto vIV = ConstraintSetId::triangle(Family::V_IV, 1, 2, 3);
  int done = 0;
  while (done < 80) {
    long a = num(rng), b = num(rng), c = num(rng), d = num(rng);
    if (!a || !b || !c || !d) continue;
    ++done;
    auto q = masses(a, b, c, d);
    bool sII = a * c == b * d && a + b && b + c && c + d && a + d;
    CHECK((membership(vII, q) == Membership::In) == sII);
    CHECK((membership(vIV, q) == Membership::In) == (a + b + c == 0));
  }
}

TEST_CASE("diagram constraint catalog") {
  auto r = diagram_constraints(DiagramClass::I, {1, 2, 3, 4}, false);
  REQUIRE(r.mass_sets.size() == 2);
  CHECK(r.mass_sets[0].str() == "V_IA[12,34]");
  CHECK(r.mass_sets[1].str() == "V_IB[12,34]");
  CHECK(r.moment_zero_extra.size() == 2);
  CHECK(r.distance_orders.at("r12") == "r^3 ~ pair mass sum, finite");
  CHECK(r.distance_orders.at("r13") == "~eps^-2");

  auto z = diagram_constraints(DiagramClass::ZW2_PAR, {1, 2, 3, 4}, true);
  REQUIRE(z.mass_sets.size() == 1);
  CHECK(z.mass_sets[0].family == Family::V_ZW2);
  CHECK(z.forced_zero_sums == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

  auto ii = diagram_constraints(DiagramClass::II, {1, 3, 2, 4}, false);
  CHECK(ii.distance_orders.at("r13") == "~eps^-2");
  CHECK(ii.distance_orders.at("r12") == "r^3 ~ pair mass sum, finite");

  auto v = diagram_constraints(DiagramClass::V, {1, 2, 3}, false);
  CHECK(v.distance_orders.at("r14") == "~1");
  CHECK(v.distance_orders.at("r24") == "~eps^-1/2");
  CHECK(v.distance_orders.at("r12") == "~eps");

  CHECK_THROWS(diagram_constraints(DiagramClass::I, {1, 2, 3, 4}, true));
  CHECK_THROWS(diagram_constraints(DiagramClass::ZW2_PAR, {1, 2, 3, 4}, false));
  // The fully edged shape is legitimate under both flags.
  CHECK_NOTHROW(diagram_constraints(DiagramClass::VI, {}, true));
  CHECK_NOTHROW(diagram_constraints(DiagramClass::VI, {}, false));
}
