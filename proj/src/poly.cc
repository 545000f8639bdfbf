#include "cc4/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cc4 {

Poly Poly::constant(const std::vector<std::string>& vs, const Rat& c) {
  Poly p(vs);
  if (sign(c) != 0) p.terms[std::vector<int>(vs.size(), 0)] = c;
  return p;
}

Poly Poly::variable(const std::vector<std::string>& vs, const std::string& name) {
  Poly p(vs);
  auto it = std::find(vs.begin(), vs.end(), name);
  if (it == vs.end()) throw std::invalid_argument("unknown variable " + name);
  std::vector<int> e(vs.size(), 0);
  e[static_cast<size_t>(it - vs.begin())] = 1;
  p.terms[e] = 1;
  return p;
}

bool Poly::is_constant() const {
  return terms.empty() ||
         (terms.size() == 1 &&
          std::all_of(terms.begin()->first.begin(), terms.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

Rat Poly::constant_value() const {
  if (terms.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value on nonconstant poly");
  return terms.begin()->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int Poly::var_index(const std::string& var) const {
  auto it = std::find(vars.begin(), vars.end(), var);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

int Poly::degree_in(const std::string& var) const {
  int i = var_index(var);
  if (i < 0) return terms.empty() ? -1 : 0;
  int d = -1;
  for (auto& [e, c] : terms) d = std::max(d, e[static_cast<size_t>(i)]);
  if (d < 0 && !terms.empty()) d = 0;
  return d;
}

void Poly::add_term(const std::vector<int>& exp, const Rat& c) {
  if (exp.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms.find(exp);
  if (it == terms.end()) {
    if (sign(c) != 0) terms.emplace(exp, c);
  } else {
    it->second += c;
    if (sign(it->second) == 0) terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(vars);
  for (auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

static void require_same_vars(const Poly& a, const Poly& b) {
  if (a.vars != b.vars) throw std::invalid_argument("variable list mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  require_same_vars(*this, o);
  Poly r = *this;
  for (auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_vars(*this, o);
  Poly r(vars);
  std::vector<int> e(vars.size());
  for (auto& [ea, ca] : terms)
    for (auto& [eb, cb] : o.terms) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(vars);
  if (sign(c) == 0) return r;
  for (auto& [e, k] : terms) r.terms[e] = k * c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(vars, 1), b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative(const std::string& var) const {
  int i = var_index(var);
  if (i < 0) return Poly(vars);
  Poly r(vars);
  for (auto& [e, c] : terms) {
    if (e[static_cast<size_t>(i)] == 0) continue;
    auto e2 = e;
    int k = e2[static_cast<size_t>(i)]--;
    r.add_term(e2, c * k);
  }
  return r;
}

Rat Poly::eval(const std::map<std::string, Rat>& point) const {
  Rat acc = 0;
  for (auto& [e, c] : terms) {
    Rat t = c;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars[i]);
      if (it == point.end()) throw std::invalid_argument("unassigned variable " + vars[i]);
      t *= rat_pow(it->second, static_cast<unsigned>(e[i]));
    }
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::string& var, const Rat& value) const {
  int i = var_index(var);
  if (i < 0) return *this;
  Poly r(vars);
  for (auto& [e, c] : terms) {
    auto e2 = e;
    int k = e2[static_cast<size_t>(i)];
    e2[static_cast<size_t>(i)] = 0;
    r.add_term(e2, c * rat_pow(value, static_cast<unsigned>(k)));
  }
  return r;
}

Poly Poly::substitute(const std::string& var, const Poly& repl) const {
  int i = var_index(var);
  if (i < 0) return *this;
  Poly rp = lift(repl, vars);
  // Cache powers of the replacement.
  std::vector<Poly> powers{Poly::constant(vars, 1)};
  Poly r(vars);
  for (auto& [e, c] : terms) {
    int k = e[static_cast<size_t>(i)];
    while (static_cast<int>(powers.size()) <= k)
      powers.push_back(powers.back() * rp);
    auto e2 = e;
    e2[static_cast<size_t>(i)] = 0;
    Poly mono(vars);
    mono.terms[e2] = c;
    r = r + mono * powers[static_cast<size_t>(k)];
  }
  return r;
}

std::vector<Poly> Poly::coeffs_in(const std::string& var) const {
  int i = var_index(var);
  int d = degree_in(var);
  std::vector<Poly> cs(static_cast<size_t>(std::max(d, 0)) + 1, Poly(vars));
  if (terms.empty()) return {Poly(vars)};
  for (auto& [e, c] : terms) {
    int k = i < 0 ? 0 : e[static_cast<size_t>(i)];
    auto e2 = e;
    if (i >= 0) e2[static_cast<size_t>(i)] = 0;
    cs[static_cast<size_t>(k)].add_term(e2, c);
  }
  return cs;
}

Poly Poly::from_coeffs(const std::vector<std::string>& vs, const std::string& var,
                       const std::vector<Poly>& cs) {
  Poly x = Poly::variable(vs, var);
  Poly r(vs);
  Poly xp = Poly::constant(vs, 1);
  for (size_t k = 0; k < cs.size(); ++k) {
    r = r + lift(cs[k], vs) * xp;
    xp = xp * x;
  }
  return r;
}

Poly Poly::leading_coeff_in(const std::string& var) const {
  auto cs = coeffs_in(var);
  return cs.back();
}

// Graded-lex: total degree descending, then exponent vector lex descending.
static bool grlex_before(const std::vector<int>& a, const std::vector<int>& b) {
  int ta = 0, tb = 0;
  for (int x : a) ta += x;
  for (int x : b) tb += x;
  if (ta != tb) return ta > tb;
  return a > b;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, Rat>*> order;
  for (auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grlex_before(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(t->second);
    std::string mono;
    for (size_t i = 0; i < vars.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (!mono.empty()) os << " * " << mono;
  }
  return os.str();
}

Poly lift(const Poly& p, const std::vector<std::string>& vars) {
  if (p.vars == vars) return p;
  std::vector<int> idx(p.vars.size());
  for (size_t i = 0; i < p.vars.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.vars[i]);
    if (it == vars.end())
      throw std::invalid_argument("lift: missing variable " + p.vars[i]);
    idx[i] = static_cast<int>(it - vars.begin());
  }
  Poly r(vars);
  std::vector<int> e(vars.size());
  for (auto& [pe, c] : p.terms) {
    std::fill(e.begin(), e.end(), 0);
    for (size_t i = 0; i < pe.size(); ++i) e[static_cast<size_t>(idx[i])] = pe[i];
    r.add_term(e, c);
  }
  return r;
}

// ---- expression parser -----------------------------------------------------

namespace {

struct Parser {
  const std::vector<std::string>& vars;
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  Poly expr() {
    Poly r = peek() == '-' ? (eat('-'), -term()) : term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("poly_expr: exponent expected at " + s.substr(i));
      unsigned e = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
      i = j;
      b = b.pow(e);
    }
    return b;
  }

  Poly base() {
    skip();
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) throw std::invalid_argument("poly_expr: missing ')'");
      return r;
    }
    if (eat('-')) return -factor();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) ||
                              s[j] == '.' || s[j] == '/'))
        ++j;
      Rat v = rat_parse(s.substr(i, j - i));
      i = j;
      return Poly::constant(vars, v);
    }
    // identifier
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    if (j == i) throw std::invalid_argument("poly_expr: parse error at '" + s.substr(i) + "'");
    std::string name = s.substr(i, j - i);
    i = j;
    return Poly::variable(vars, name);
  }
};

}  // namespace

Poly poly_expr(const std::vector<std::string>& vars, const std::string& expr) {
  Parser p{vars, expr};
  Poly r = p.expr();
  p.skip();
  if (p.i != expr.size())
    throw std::invalid_argument("poly_expr: trailing input '" + expr.substr(p.i) + "'");
  return r;
}

Poly poly_parse(const std::vector<std::string>& vars, const std::string& text) {
  // The canonical form is a valid expression.
  return poly_expr(vars, text);
}

// ---- exact division, content, gcd -----------------------------------------

Poly divexact(const Poly& p, const Poly& d) {
  require_same_vars(p, d);
  if (d.is_zero()) throw std::invalid_argument("divexact by zero");
  if (d.is_constant()) return p * (Rat(1) / d.constant_value());
  Poly rem = p, q(p.vars);
  // Leading term under graded-lex; in a domain the quotient's leading term is
  // LT(p)/LT(d), so plain single-divisor reduction terminates iff d | p.
  auto lead = [](const Poly& f) {
    auto it = f.terms.begin();
    for (auto jt = f.terms.begin(); jt != f.terms.end(); ++jt)
      if (grlex_before(jt->first, it->first)) it = jt;
    return it;
  };
  auto ld = lead(d);
  while (!rem.is_zero()) {
    auto lr = lead(rem);
    std::vector<int> e(lr->first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = lr->first[i] - ld->first[i];
      if (e[i] < 0) throw std::domain_error("divexact: not divisible");
    }
    Rat c = lr->second / ld->second;
    Poly mono(p.vars);
    mono.terms[e] = c;
    q = q + mono;
    rem = rem - mono * d;
  }
  return q;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (auto& [e, c] : p.terms) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  for (auto& [e, c] : p.terms) {
    mpz_class n = c.get_num() * (den / c.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    num = g;
  }
  Rat scale(den, num);
  scale.canonicalize();
  return p * scale;
}

// Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a mod b.
Poly pseudo_rem(const Poly& a, const Poly& b, const std::string& var) {
  int da = a.degree_in(var), db = b.degree_in(var);
  if (db < 0) throw std::invalid_argument("prem by zero");
  Poly r = a;
  Poly lb = b.leading_coeff_in(var);
  Poly x = Poly::variable(a.vars, var);
  int steps = da - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Poly lr = r.leading_coeff_in(var);
    r = r * lift(lb, a.vars) - lift(lr, a.vars) * b * x.pow(static_cast<unsigned>(dr - db));
    --steps;
  }
  // Keep the classical normalization lc(b)^(da-db+1)*a = qb + r.
  if (steps > 0) r = r * lift(lb, a.vars).pow(static_cast<unsigned>(steps));
  return r;
}

// Content of p seen as univariate in var: gcd of its coefficient polys.
Poly content_in(const Poly& p, const std::string& var) {
  auto cs = p.coeffs_in(var);
  Poly g(p.vars);
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? Poly::constant(p.vars, 1) : g;
}

static Poly unit_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Poly q = primitive_part(p);
  // Positive leading graded-lex coefficient.
  auto it = q.terms.begin();
  for (auto jt = q.terms.begin(); jt != q.terms.end(); ++jt)
    if (grlex_before(jt->first, it->first)) it = jt;
  if (sign(it->second) < 0) q = -q;
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars, 1);
  // Main variable: first one actually appearing.
  std::string var;
  for (auto& v : a.vars)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly p = divexact(a, ca), q = divexact(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = pseudo_rem(p, q, var);
    if (!r.is_zero()) r = unit_normalize(divexact(r, content_in(r, var)));
    p = q;
    q = r;
  }
  Poly g = p.degree_in(var) > 0 ? divexact(p, content_in(p, var))
                                : Poly::constant(a.vars, 1);
  return unit_normalize(g * poly_gcd(ca, cb));
}

}  // namespace cc4
