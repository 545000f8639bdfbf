#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cc4/resultant.hpp"
#include "cc4/sturm.hpp"

using namespace cc4;

static const std::vector<std::string> X{"x"};
static const std::vector<std::string> XY{"x", "y"};

// Independent oracle: the literal Sylvester determinant over Q, expanded by
// Gaussian elimination. Coefficients descending, deg(q) rows of p then
// deg(p) rows of q.
static Rat sylvester_det(const UPoly& p, const UPoly& q) {
  int m = updeg(p), n = updeg(q);
  int N = m + n;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(N), std::vector<Rat>(static_cast<size_t>(N), Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = p[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = q[static_cast<size_t>(n - k)];
  Rat det = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (sign(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (sign(a[r][col]) == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int c = col; c < N; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

TEST_CASE("pinned small examples") {
  CHECK(resultant(poly_expr(X, "x - 1"), poly_expr(X, "x - 2"), "x") ==
        Poly::constant(X, rat(-1)));
  CHECK(resultant(poly_expr(X, "x^2 - 2"), poly_expr(X, "x^2 - 2"), "x").is_zero());
  CHECK(resultant(poly_expr(XY, "x^2 + y^2 - 1"), poly_expr(XY, "x - y"), "x") ==
        poly_expr(XY, "2*y^2 - 1"));
}

TEST_CASE("errors") {
  CHECK_THROWS(resultant(poly_expr(XY, "y"), poly_expr(XY, "y + 1"), "x"));
  CHECK_THROWS(resultant(Poly(X), poly_expr(X, "x"), "x"));
}

TEST_CASE("matches the Sylvester determinant on random univariates") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-6, 6), deg(1, 5);
  for (int iter = 0; iter < 120; ++iter) {
    UPoly p(static_cast<size_t>(deg(rng)) + 1), q(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : p) c = coef(rng);
    for (auto& c : q) c = coef(rng);
    if (sign(p.back()) == 0) p.back() = 1;
    if (sign(q.back()) == 0) q.back() = 1;
    Poly rp = resultant(upoly_to_poly(p, "x"), upoly_to_poly(q, "x"), "x");
    CHECK(rp.constant_value() == sylvester_det(p, q));
  }
}

TEST_CASE("bivariate resultant commutes with evaluation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), val(1, 9);
  for (int iter = 0; iter < 40; ++iter) {
    Poly p(XY), q(XY);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) {
        p.add_term({i, j}, coef(rng));
        q.add_term({i, j}, coef(rng));
      }
    if (p.degree_in("x") < 1 || q.degree_in("x") < 1) continue;
    Rat y0 = rat(val(rng), val(rng));
    Poly py = p.substitute("y", y0), qy = q.substitute("y", y0);
    // Evaluation must preserve the x-degrees for specialization to commute.
    if (py.degree_in("x") != p.degree_in("x")) continue;
    if (qy.degree_in("x") != q.degree_in("x")) continue;
    Poly r = resultant(p, q, "x");
    CHECK(r.substitute("y", y0).constant_value() ==
          sylvester_det(upoly_from(py, "x"), upoly_from(qy, "x")));
  }
}

TEST_CASE("multiplicativity for monic factors") {
  Poly p = poly_expr(XY, "x^2 + y");
  Poly q = poly_expr(XY, "x - 2*y");
  Poly r = poly_expr(XY, "x^3 + x*y + 1");
  CHECK(resultant(p * q, r, "x") == resultant(p, r, "x") * resultant(q, r, "x"));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(poly_expr(X, "(x - 1)^2"), "x") == poly_expr(X, "x - 1"));
  CHECK(squarefree_part(poly_expr(X, "x^2 - 2"), "x") == poly_expr(X, "x^2 - 2"));
  Poly p = poly_expr(X, "(x^2 - 2) * (x - 1)^2");
  Poly sf = squarefree_part(p, "x");
  CHECK(divexact(sf, poly_expr(X, "x - 1")) == poly_expr(X, "x^2 - 2"));
}
