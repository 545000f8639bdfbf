#include "cc4/resultant.hpp"

#include <stdexcept>

namespace cc4 {

namespace {

// h^(delta-1) divides g^delta exactly in the subresultant PRS.
Poly pow_quot(const Poly& num, unsigned ne, const Poly& den, unsigned de) {
  return divexact(num.pow(ne), den.pow(de));
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp <= 0 && dq <= 0) throw std::invalid_argument("no elimination variable");
  if (dp == 0) return p.pow(static_cast<unsigned>(dq));
  if (dq == 0) return q.pow(static_cast<unsigned>(dp));

  Poly A = p, B = q;
  int s = 1;
  if (dp < dq) {
    std::swap(A, B);
    if ((dp & 1) && (dq & 1)) s = -s;
  }
  // Strip contents; reintroduce them through the multiplicative rule
  // res(cA', B) = c^deg(B) res(A', B).
  Poly ca = content_in(A, var), cb = content_in(B, var);
  A = divexact(A, ca);
  B = divexact(B, cb);
  Poly t = ca.pow(static_cast<unsigned>(B.degree_in(var))) *
           cb.pow(static_cast<unsigned>(A.degree_in(var)));

  Poly g = Poly::constant(p.vars, 1), h = Poly::constant(p.vars, 1);
  for (;;) {
    int da = A.degree_in(var), db = B.degree_in(var);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    Poly R = pseudo_rem(A, B, var);
    A = B;
    B = R.is_zero() ? R
                    : divexact(R, g * h.pow(static_cast<unsigned>(delta)));
    if (B.is_zero()) {
      if (A.degree_in(var) > 0) return Poly(p.vars);  // common factor: resultant 0
      break;
    }
    g = A.leading_coeff_in(var);
    h = delta == 0 ? h
                   : pow_quot(g, static_cast<unsigned>(delta), h,
                              static_cast<unsigned>(delta - 1));
    if (B.degree_in(var) == 0) break;
  }
  // Here B is a nonzero constant in var (A the last nondegenerate one).
  int da = A.degree_in(var);
  Poly Bc = B;
  Poly hp = da == 0 ? h : divexact(Bc.pow(static_cast<unsigned>(da)),
                                   h.pow(static_cast<unsigned>(da - 1)));
  Poly r = t * hp;
  return s < 0 ? -r : r;
}

Poly squarefree_part(const Poly& p, const std::string& var) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  if (p.degree_in(var) <= 0) return primitive_part(p);
  Poly g = poly_gcd(p, p.derivative(var));
  Poly q = divexact(p, g);
  q = primitive_part(q);
  // Positive leading coefficient in var (leading coeff may be a poly; use the
  // graded-lex leading rational when it is constant).
  Poly lc = q.leading_coeff_in(var);
  if (lc.is_constant() && sign(lc.constant_value()) < 0) q = -q;
  return q;
}

}  // namespace cc4
