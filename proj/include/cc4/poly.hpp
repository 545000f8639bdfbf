#pragma once

#include <map>
#include <string>
#include <vector>

#include "cc4/rational.hpp"

namespace cc4 {

// Sparse multivariate polynomial over Q. Exponent vectors always have the
// same length as the variable list; zero coefficients are never stored, so
// structural equality is semantic equality for a fixed variable list.
struct Poly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, Rat> terms;

  Poly() = default;
  explicit Poly(std::vector<std::string> vs) : vars(std::move(vs)) {}

  static Poly constant(const std::vector<std::string>& vs, const Rat& c);
  static Poly variable(const std::vector<std::string>& vs, const std::string& name);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  int total_degree() const;
  int degree_in(const std::string& var) const;
  int var_index(const std::string& var) const;  // -1 if absent

  void add_term(const std::vector<int>& exp, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return vars == o.vars && terms == o.terms; }

  Poly pow(unsigned e) const;
  Poly derivative(const std::string& var) const;

  Rat eval(const std::map<std::string, Rat>& point) const;
  Poly substitute(const std::string& var, const Rat& value) const;
  Poly substitute(const std::string& var, const Poly& repl) const;

  // Dense coefficient list in `var`, index = power; entries keep the full
  // variable list with the `var` exponent zeroed.
  std::vector<Poly> coeffs_in(const std::string& var) const;
  static Poly from_coeffs(const std::vector<std::string>& vs, const std::string& var,
                          const std::vector<Poly>& cs);
  Poly leading_coeff_in(const std::string& var) const;

  // Canonical text: terms sorted by graded-lex exponent order (total degree
  // descending, then lex descending), each as `coeff * v1^e1*v2^e2`.
  std::string str() const;
};

// Embed p into a superset variable list (order of shared vars preserved).
Poly lift(const Poly& p, const std::vector<std::string>& vars);

// Parse the canonical text form back into a polynomial over `vars`.
Poly poly_parse(const std::vector<std::string>& vars, const std::string& text);

// Convenience builder: parses expressions like "x^2 + 2*x*y - 3/2".
// Accepts +, -, *, ^, parentheses, rational and decimal literals.
Poly poly_expr(const std::vector<std::string>& vars, const std::string& expr);

// Exact division; throws if d does not divide p in Q[vars].
Poly divexact(const Poly& p, const Poly& d);

// Multivariate gcd over Q via primitive PRS, unit-normalized so the leading
// graded-lex coefficient is positive.
Poly poly_gcd(const Poly& a, const Poly& b);

// Positive integer scaling making all coefficients integers with content 1.
Poly primitive_part(const Poly& p);

// Pseudo-remainder in var: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_rem(const Poly& a, const Poly& b, const std::string& var);

// Content of p viewed as univariate in var (gcd of coefficient polys).
Poly content_in(const Poly& p, const std::string& var);

}  // namespace cc4
