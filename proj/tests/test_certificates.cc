#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "cc4/certificate.hpp"

using namespace cc4;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};

SignedPolySystem simple(const std::vector<std::string>& vars,
                        std::initializer_list<const char*> eqs) {
  SignedPolySystem s;
  s.vars = vars;
  for (const char* e : eqs) s.equations.push_back(poly_expr(vars, e));
  return s;
}

Region positive(const std::vector<std::string>& vars) {
  Region r;
  for (const auto& v : vars) r[v] = VarRange{};
  return r;
}

}  // namespace

TEST_CASE("shift positivity oracle") {
  std::vector<TraceStep> tr;
  Poly p = poly_expr(X, "x^2 + 1");
  CHECK(shift_positive(p, {{"x", rat(0, 1)}}, &tr));

  // x^2 - 3x + 1 has its larger root at (3+sqrt 5)/2, between 2 and 3.
  Poly q = poly_expr(X, "x^2 - 3*x + 1");
  CHECK_FALSE(shift_positive(q, {{"x", rat(0, 1)}}, &tr));
  CHECK_FALSE(shift_positive(q, {{"x", rat(2, 1)}}, &tr));
  CHECK(shift_positive(q, {{"x", rat(3, 1)}}, &tr));

  Poly zero = Poly(X);
  CHECK_FALSE(shift_positive(zero, {{"x", rat(0, 1)}}, &tr));
}

TEST_CASE("resultant elimination oracle") {
  std::vector<TraceStep> tr;
  // x^2 + y^2 = 5, x = y + 1 has solutions y = 1 and y = -2.
  std::vector<Poly> eqs = {poly_expr(XY, "x^2 + y^2 - 5"), poly_expr(XY, "x - y - 1")};
  Poly r = resultant_eliminate(eqs, "x", &tr);
  CHECK(r.degree_in("y") == 2);
  CHECK(sign(r.eval({{"x", rat(0, 1)}, {"y", rat(1, 1)}})) == 0);
  CHECK(sign(r.eval({{"x", rat(0, 1)}, {"y", rat(-2, 1)}})) == 0);
  CHECK(sign(r.eval({{"x", rat(0, 1)}, {"y", rat(3, 1)}})) != 0);
}

TEST_CASE("empty by positivity") {
  auto c = certify_empty("test.positivity", {simple(X, {"x^2 + 1"})}, positive(X));
  CHECK(c.verdict == Verdict::Empty);
  CHECK(c.roots.empty());
  auto v = verify_certificate(c);
  CHECK(v.pass);
  CHECK(v.failure.empty());
}

TEST_CASE("empty by root counting in a bounded region") {
  Region r;
  r["x"] = VarRange{rat(2, 1), rat(3, 1)};
  auto c = certify_empty("test.sturm", {simple(X, {"x^2 - 3"})}, r);
  CHECK(c.verdict == Verdict::Empty);
  CHECK(verify_certificate(c).pass);

  Region r2;
  r2["x"] = VarRange{rat(1, 1), rat(2, 1)};
  auto c2 = certify_empty("test.sturm2", {simple(X, {"x^2 - 3"})}, r2);
  CHECK(c2.verdict == Verdict::Solutions);
  REQUIRE(c2.roots.size() == 1);
  CHECK(std::abs(c2.roots[0].values.at("x").approx() - 1.7320508075688772) < 1e-9);
  CHECK(verify_certificate(c2).pass);
}

TEST_CASE("empty by coprime eliminants") {
  auto c = certify_empty("test.coprime", {simple(X, {"x^2 - 2", "x^2 - x - 1"})},
                         positive(X));
  CHECK(c.verdict == Verdict::Empty);
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("box refutation keeps the true solutions and drops the spurious ones") {
  // x^2 + y^2 = 5, xy = 2: eliminants have roots {1, 2} in each variable, but
  // only (1,2) and (2,1) solve the system.
  auto sys = simple(XY, {"x^2 + y^2 - 5", "x*y - 2"});
  auto c = certify_empty("test.boxes", {sys}, positive(XY));
  CHECK(c.verdict == Verdict::Solutions);
  REQUIRE(c.roots.size() == 2);
  bool refuted = false;
  for (const auto& st : c.trace)
    if (st.op == "refute-box" || st.op == "refute-point") refuted = true;
  CHECK(refuted);
  std::set<std::pair<long, long>> found;
  for (const auto& rec : c.roots) {
    CHECK(rec.branch == 0);
    CHECK(rec.values.at("x").is_rational());
    long x = std::lround(rec.values.at("x").approx());
    long y = std::lround(rec.values.at("y").approx());
    found.insert({x, y});
  }
  CHECK(found == std::set<std::pair<long, long>>{{1, 2}, {2, 1}});
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("exact rational candidates are decided by nonvanishing conditions") {
  // x^2 = 1 on x > 0 leaves only x = 1, which the strict x - 1 != 0 kills.
  auto sys = simple(X, {"x^2 - 1"});
  sys.strict_negations.push_back(poly_expr(X, "x - 1"));
  auto c = certify_empty("test.exact", {sys}, positive(X));
  CHECK(c.verdict == Verdict::Empty);
  bool refuted_point = false;
  for (const auto& st : c.trace)
    if (st.op == "refute-point") refuted_point = true;
  CHECK(refuted_point);
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("strict linear bounds tighten the branch region") {
  // x^2 = 3 with x > 2 is empty; the bound turns into a Sturm range.
  auto sys = simple(X, {"x^2 - 3"});
  sys.strict_inequalities.push_back({poly_expr(X, "x - 2"), 1});
  auto c = certify_empty("test.bounds", {sys}, positive(X));
  CHECK(c.verdict == Verdict::Empty);
  CHECK(verify_certificate(c).pass);

  auto sys2 = simple(X, {"x^2 - 3"});
  sys2.strict_inequalities.push_back({poly_expr(X, "x - 1"), -1});
  auto c2 = certify_empty("test.bounds2", {sys2}, positive(X));
  CHECK(c2.verdict == Verdict::Empty);
  CHECK(verify_certificate(c2).pass);
}

TEST_CASE("recorded root isolation steps replay") {
  std::vector<TraceStep> tr;
  Poly p = poly_expr(X, "x^12 - 6*x^6 + 1");
  trace_define(p, "factor under test", &tr);
  auto roots = trace_roots(p, "x", VarRange{}, pow2(-40), &tr);
  CHECK(roots.size() == 2);
  // (sqrt2 - 1)^(1/3) and (sqrt2 + 1)^(1/3).
  CHECK(std::abs(roots[0].mid().get_d() - 0.7454321246) < 1e-6);
  CHECK(std::abs(roots[1].mid().get_d() - 1.3415037626) < 1e-6);
  Certificate c;
  c.case_id = "test.roots";
  c.trace = tr;
  c.verdict = Verdict::Solutions;
  CHECK(verify_certificate(c).pass);
  c.trace[3].result_text = "x=[0,2]";
  c.trace[3].result = text_digest(c.trace[3].result_text);
  CHECK_FALSE(verify_certificate(c).pass);
}

TEST_CASE("strict inequalities cut candidate boxes") {
  auto sys = simple(X, {"x^2 - 3*x + 2"});  // roots 1 and 2
  sys.strict_inequalities.push_back({poly_expr(X, "x - 3/2"), 1});  // want x > 3/2
  auto c = certify_empty("test.strict", {sys}, positive(X));
  CHECK(c.verdict == Verdict::Solutions);
  REQUIRE(c.roots.size() == 1);
  CHECK(std::lround(c.roots[0].values.at("x").approx()) == 2);
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("one unrefuted branch forces a Solutions verdict") {
  auto good = simple(X, {"x^2 + 1"});
  auto bad = simple(X, {"x - 2"});
  auto c = certify_empty("test.branches", {good, bad}, positive(X));
  CHECK(c.verdict == Verdict::Solutions);
  REQUIRE(c.roots.size() == 1);
  CHECK(c.roots[0].branch == 1);
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("constant nonzero equation refutes immediately") {
  SignedPolySystem s;
  s.vars = X;
  s.equations.push_back(Poly::constant(X, rat(7, 1)));
  auto c = certify_empty("test.const", {s}, positive(X));
  CHECK(c.verdict == Verdict::Empty);
  CHECK(verify_certificate(c).pass);
}

TEST_CASE("monotonicity certificates") {
  // t^3 (1 - t^3) / (1 + t^3) is strictly decreasing on (1, oo).
  Poly n1 = poly_expr({"t"}, "t^3 - t^6");
  Poly d1 = poly_expr({"t"}, "1 + t^3");
  auto c1 = certify_monotone(n1, d1, "t", VarRange{rat(1, 1), std::nullopt});
  CHECK(c1.verdict == Verdict::Monotone);
  CHECK(c1.direction == -1);
  CHECK(verify_certificate(c1).pass);

  // (1 + t^3) / (1 - t^3) is strictly increasing on (0, 1).
  Poly n2 = poly_expr({"t"}, "1 + t^3");
  Poly d2 = poly_expr({"t"}, "1 - t^3");
  auto c2 = certify_monotone(n2, d2, "t", VarRange{rat(0, 1), rat(1, 1)});
  CHECK(c2.verdict == Verdict::Monotone);
  CHECK(c2.direction == 1);
  CHECK(verify_certificate(c2).pass);

  // t^2 is not monotone across 0.
  Poly n3 = poly_expr({"t"}, "t^2");
  Poly d3 = Poly::constant({"t"}, rat(1, 1));
  auto c3 = certify_monotone(n3, d3, "t", VarRange{rat(-1, 1), rat(1, 1)});
  CHECK(c3.verdict == Verdict::NotMonotone);
  REQUIRE(c3.roots.size() == 1);
  CHECK(c3.roots[0].values.at("t").enclosure(pow2(-20)).contains(rat(0, 1)));
  CHECK(verify_certificate(c3).pass);

  // A denominator root inside the interval is a usage error.
  Poly d4 = poly_expr({"t"}, "t - 1/2");
  CHECK_THROWS_AS(
      certify_monotone(n3, d4, "t", VarRange{rat(0, 1), rat(1, 1)}),
      std::invalid_argument);
}

TEST_CASE("verification fails on a tampered trace") {
  auto c = certify_empty("test.tamper", {simple(X, {"x^2 - 2", "x^2 - x - 1"})},
                         positive(X));
  REQUIRE(verify_certificate(c).pass);
  for (size_t i = 0; i < c.trace.size(); ++i) {
    if (c.trace[i].op != "resultant" && c.trace[i].op != "gcd") continue;
    Certificate bad = c;
    bad.trace[i].result_text = "x|x^2 + 5";
    bad.trace[i].result = text_digest(bad.trace[i].result_text);
    auto v = verify_certificate(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.failure.find("step " + std::to_string(i)) != std::string::npos);
    break;
  }

  Certificate bad2 = c;
  REQUIRE(!bad2.trace.empty());
  bad2.trace[0].result = bad2.trace[0].result ^ 1;
  CHECK_FALSE(verify_certificate(bad2).pass);
}

TEST_CASE("verification fails on a tampered verdict or solution") {
  auto sys = simple(XY, {"x^2 + y^2 - 5", "x*y - 2"});
  auto c = certify_empty("test.tamper2", {sys}, positive(XY));
  REQUIRE(c.verdict == Verdict::Solutions);

  Certificate wrong = c;
  wrong.roots[0].values.erase("x");
  wrong.roots[0].values.emplace("x", ExactReal(rat(3, 1)));
  wrong.roots[0].values.erase("y");
  wrong.roots[0].values.emplace("y", ExactReal(rat(3, 1)));
  auto v = verify_certificate(wrong);
  CHECK_FALSE(v.pass);
  CHECK(v.failure.find("solution 0") != std::string::npos);

  Certificate empty_lie = c;
  empty_lie.verdict = Verdict::Empty;
  CHECK_FALSE(verify_certificate(empty_lie).pass);
}

TEST_CASE("json round trip preserves the certificate") {
  auto sys = simple(XY, {"x^2 + y^2 - 5", "x*y - 2"});
  sys.strict_inequalities.push_back({poly_expr(XY, "x - y"), 1});
  sys.sigma_branch = {1, -1};
  sys.sign_products.push_back({1, 2, -1});
  auto c = certify_empty("test.json", {sys}, positive(XY));
  std::string text = c.to_json();
  Certificate back = certificate_from_json(text);
  CHECK(back.case_id == c.case_id);
  CHECK(back.verdict == c.verdict);
  CHECK(back.input_digests == c.input_digests);
  CHECK(back.trace.size() == c.trace.size());
  CHECK(back.roots.size() == c.roots.size());
  CHECK(verify_certificate(back).pass);
  CHECK(back.to_json() == text);

  auto m = certify_monotone(poly_expr({"t"}, "1 + t^3"), poly_expr({"t"}, "1 - t^3"),
                            "t", VarRange{rat(0, 1), rat(1, 1)});
  Certificate mb = certificate_from_json(m.to_json());
  CHECK(mb.verdict == Verdict::Monotone);
  CHECK(mb.direction == 1);
  CHECK(verify_certificate(mb).pass);
}
