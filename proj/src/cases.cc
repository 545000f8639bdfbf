#include "cc4/cases.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cc4/sturm.hpp"

namespace cc4 {
namespace {

using Systems = std::vector<SignedPolySystem>;

const std::vector<std::string> UV{"u2", "u3", "u4"};
const std::vector<std::string> MV{"m1", "m2", "m3", "m4"};

// Normalized coordinate u_i over UV; body 1 is the unit reference.
Poly uv(int i) {
  return i == 1 ? Poly::constant(UV, Rat(1))
                : Poly::variable(UV, "u" + std::to_string(i));
}

Poly uc(const std::string& expr) { return poly_expr(UV, expr); }

Systems via(const ConstraintSetId& id) { return constraint_system(id); }

Systems one(const SignedPolySystem& s) { return Systems{s}; }

Systems unite(std::initializer_list<Systems> lists) {
  Systems out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::vector<std::string> var_union(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// Projection onto a smaller variable list; throws if the polynomial actually
// depends on a dropped variable.
Poly restrict_vars(const Poly& p, const std::vector<std::string>& vars) {
  Poly out(vars);
  std::vector<int> where(p.vars.size(), -1);
  for (size_t i = 0; i < p.vars.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.vars[i]);
    if (it != vars.end()) where[i] = int(it - vars.begin());
  }
  for (const auto& [exp, c] : p.terms) {
    std::vector<int> e(vars.size(), 0);
    for (size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (where[i] < 0)
        throw std::invalid_argument("restrict_vars drops a live variable: " +
                                    p.vars[i]);
      e[where[i]] = exp[i];
    }
    out.add_term(e, c);
  }
  return out;
}

// Substitutes polynomial images for variables, then projects to out_vars.
Poly map_vars(const Poly& p, const std::map<std::string, Poly>& images,
              const std::vector<std::string>& out_vars) {
  std::vector<std::string> all = var_union(p.vars, out_vars);
  for (const auto& [v, img] : images) all = var_union(all, img.vars);
  Poly acc = lift(p, all);
  for (const auto& [v, img] : images)
    if (acc.degree_in(v) > 0) acc = acc.substitute(v, lift(img, all));
  return restrict_vars(acc, out_vars);
}

SignedPolySystem map_system(const SignedPolySystem& s,
                            const std::map<std::string, Poly>& images,
                            const std::vector<std::string>& out_vars,
                            const std::string& why) {
  SignedPolySystem r;
  r.vars = out_vars;
  for (const Poly& e : s.equations) {
    Poly m = map_vars(e, images, out_vars);
    if (!m.is_zero()) r.equations.push_back(m);
  }
  for (const Poly& e : s.strict_negations) {
    Poly m = map_vars(e, images, out_vars);
    if (m.is_constant()) {
      if (m.is_zero())
        throw std::invalid_argument("substitution kills a strict negation");
      continue;  // trivially nonzero
    }
    r.strict_negations.push_back(m);
  }
  for (const auto& [e, sg] : s.strict_inequalities) {
    Poly m = map_vars(e, images, out_vars);
    if (m.is_constant()) {
      if (sign(m.constant_value()) == sg) continue;  // trivially satisfied
      // A violated constant inequality empties the branch; record it as a
      // constant nonzero equation so the pipeline refutes it explicitly.
      r.equations.push_back(Poly::constant(out_vars, Rat(1)));
      r.note += "substitution violates a strict inequality; ";
      continue;
    }
    r.strict_inequalities.emplace_back(m, sg);
  }
  r.sign_products = s.sign_products;
  r.sigma_branch = s.sigma_branch;
  r.note += s.note.empty() ? why : s.note + "; " + why;
  return r;
}

Systems map_all(const Systems& in, const std::map<std::string, Poly>& images,
                const std::vector<std::string>& out_vars,
                const std::string& why) {
  Systems out;
  out.reserve(in.size());
  for (const auto& s : in) out.push_back(map_system(s, images, out_vars, why));
  return out;
}

// Parity union-find over body indices 1..4 with a fixed positive reference
// node 0; detects contradictory sign-product requirements.
struct SignParity {
  std::array<int, 5> parent{0, 1, 2, 3, 4};
  std::array<int, 5> parity{0, 0, 0, 0, 0};  // parity relative to parent

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }
  bool merge(int a, int b, int rel) {  // rel: 0 same sign, 1 opposite
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

bool signs_consistent(const std::vector<std::array<int, 3>>& sp) {
  SignParity uf;
  for (const auto& e : sp) {
    int rel = e[2] < 0 ? 1 : 0;
    int a = e[0], b = e[0] == e[1] ? 0 : e[1];
    if (!uf.merge(a, b, rel)) return false;
  }
  return true;
}

std::array<int, 3> canon_sign(std::array<int, 3> e) {
  if (e[0] > e[1]) std::swap(e[0], e[1]);
  return e;
}

// Conjunction of two sign branches; nullopt when the combined sign-product
// requirements are contradictory for every real sign assignment.
std::optional<SignedPolySystem> conjoin(const SignedPolySystem& a,
                                        const SignedPolySystem& b) {
  SignedPolySystem r;
  r.vars = var_union(a.vars, b.vars);
  auto put = [&](std::vector<Poly>& dst, const std::vector<Poly>& src) {
    for (const Poly& p : src) dst.push_back(lift(p, r.vars));
  };
  put(r.equations, a.equations);
  put(r.equations, b.equations);
  put(r.strict_negations, a.strict_negations);
  put(r.strict_negations, b.strict_negations);
  for (const auto& [p, s] : a.strict_inequalities)
    r.strict_inequalities.emplace_back(lift(p, r.vars), s);
  for (const auto& [p, s] : b.strict_inequalities)
    r.strict_inequalities.emplace_back(lift(p, r.vars), s);
  std::set<std::array<int, 3>> seen;
  for (const auto& e : a.sign_products) seen.insert(canon_sign(e));
  for (const auto& e : b.sign_products) seen.insert(canon_sign(e));
  r.sign_products.assign(seen.begin(), seen.end());
  if (!signs_consistent(r.sign_products)) return std::nullopt;
  r.sigma_branch = a.sigma_branch;
  r.sigma_branch.insert(r.sigma_branch.end(), b.sigma_branch.begin(),
                        b.sigma_branch.end());
  if (a.note.empty())
    r.note = b.note;
  else if (b.note.empty())
    r.note = a.note;
  else
    r.note = a.note + "; " + b.note;
  return r;
}

Systems cross(const Systems& a, const Systems& b, int* dropped = nullptr) {
  Systems out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto c = conjoin(x, y);
      if (c)
        out.push_back(*c);
      else if (dropped)
        ++*dropped;
    }
  return out;
}

Systems cross(std::initializer_list<Systems> lists, int* dropped = nullptr) {
  Systems acc;
  bool first = true;
  for (const auto& l : lists) {
    if (first) {
      acc = l;
      first = false;
    } else {
      acc = cross(acc, l, dropped);
    }
  }
  return acc;
}

SignedPolySystem pinned(std::vector<std::string> vars, std::vector<Poly> eqs,
                        std::vector<std::array<int, 3>> signs,
                        std::string note) {
  SignedPolySystem s;
  s.vars = std::move(vars);
  s.equations = std::move(eqs);
  s.sign_products = std::move(signs);
  s.note = std::move(note);
  return s;
}

// Apex-base relation m_i^2 (m_j + m_k)^4 = m_j^3 m_k^3 in normalized
// coordinates; the right side forces sign(m_j m_k) positive, which collapses
// |m_j + m_k| to u_j^2 + u_k^2.
SignedPolySystem vv_u(int i, int j, int k) {
  SignedPolySystem s;
  s.vars = UV;
  s.equations = {uv(i).pow(4) * (uv(j).pow(2) + uv(k).pow(2)).pow(4) -
                 uv(j).pow(6) * uv(k).pow(6)};
  s.sign_products = {canon_sign({j, k, 1})};
  s.note = "apex-base relation [" + std::to_string(i) + "," +
           std::to_string(j) + std::to_string(k) + "] in normalized coordinates";
  return s;
}

// Equal-pair relation m_i = m_j, m_p = m_k in normalized coordinates.
SignedPolySystem ia_u(int i, int j, int p, int k) {
  SignedPolySystem s;
  s.vars = UV;
  s.equations = {uv(i) - uv(j), uv(p) - uv(k)};
  s.sign_products = {canon_sign({i, j, 1}), canon_sign({p, k, 1})};
  s.note = "equal pairs [" + std::to_string(i) + std::to_string(j) + "," +
           std::to_string(p) + std::to_string(k) + "] in normalized coordinates";
  return s;
}

// Equal diagonal products m_i m_j = m_p m_k in normalized coordinates; the
// common product carries one free sign.
Systems ii_u(int i, int j, int p, int k) {
  Systems out;
  for (int s : {1, -1}) {
    SignedPolySystem sys;
    sys.vars = UV;
    sys.equations = {uv(i) * uv(j) - uv(p) * uv(k)};
    sys.sign_products = {canon_sign({i, j, s}), canon_sign({p, k, s})};
    sys.sigma_branch = {s};
    sys.note = "equal diagonal products [" + std::to_string(i) +
               std::to_string(j) + "," + std::to_string(p) + std::to_string(k) +
               "]";
    out.push_back(sys);
  }
  return out;
}

// The triangle union attached to one vanishing-diagonal limit: the
// reciprocal-square-root relation over {a,b,c} together with the three
// apex-base relations.
Systems v_set(int a, int b, int c) {
  return unite({via(ConstraintSetId::triangle(Family::V_III, a, b, c)),
                {vv_u(a, b, c), vv_u(b, a, c), vv_u(c, a, b)}});
}

Systems vib(int i, int j, int p, int k) {
  return via(ConstraintSetId::pair_sets(Family::V_IB, i, j, p, k));
}

// Substitution var = num / den with den nonzero on the branch; the result is
// the numerator after clearing den^deg.
Poly subst_ratio(const Poly& p, const std::string& var, const Poly& num,
                 const Poly& den) {
  auto cs = p.coeffs_in(var);
  Poly n = lift(num, p.vars), d = lift(den, p.vars);
  Poly acc = Poly::constant(p.vars, Rat(0));
  int deg = int(cs.size()) - 1;
  for (int k = 0; k <= deg; ++k)
    acc = acc + cs[k] * n.pow(unsigned(k)) * d.pow(unsigned(deg - k));
  return acc;
}

// Substitution var^2 = num / den for a polynomial even in var.
Poly subst_even(const Poly& p, const std::string& var, const Poly& num,
                const Poly& den) {
  auto cs = p.coeffs_in(var);
  Poly n = lift(num, p.vars), d = lift(den, p.vars);
  Poly acc = Poly::constant(p.vars, Rat(0));
  int deg = int(cs.size()) - 1;
  int half = deg / 2;
  for (int k = 0; k <= deg; ++k) {
    if (cs[k].is_zero()) continue;
    if (k % 2 != 0)
      throw std::invalid_argument("subst_even on a polynomial odd in " + var);
    acc = acc + cs[k] * n.pow(unsigned(k / 2)) * d.pow(unsigned(half - k / 2));
  }
  return acc;
}

// Replaces each sigma pair (branch, partner with the masked sigma entries
// flipped) by one branch whose equation is the product, even in the
// variable whose sign the masked entries resolve. Union semantics: only the
// sign requirements shared by both partners survive.
Systems pair_sigma(const Systems& branches, const std::vector<int>& mask) {
  Systems out;
  std::vector<bool> used(branches.size(), false);
  for (size_t i = 0; i < branches.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> want = branches[i].sigma_branch;
    for (int m : mask) want[m] = -want[m];
    size_t j = i;
    for (size_t l = i + 1; l < branches.size(); ++l)
      if (!used[l] && branches[l].sigma_branch == want) {
        j = l;
        break;
      }
    if (j == i)
      throw std::logic_error("pair_sigma: partner branch not found");
    used[i] = used[j] = true;
    const auto& a = branches[i];
    const auto& b = branches[j];
    if (a.equations.size() != 1 || b.equations.size() != 1)
      throw std::logic_error("pair_sigma expects single-equation branches");
    SignedPolySystem s;
    s.vars = a.vars;
    s.equations = {a.equations.at(0) * b.equations.at(0)};
    for (const Poly& n : a.strict_negations)
      for (const Poly& m : b.strict_negations)
        if (n == m) s.strict_negations.push_back(n);
    std::set<std::array<int, 3>> bs;
    for (const auto& sp : b.sign_products) bs.insert(canon_sign(sp));
    for (const auto& sp : a.sign_products)
      if (bs.count(canon_sign(sp))) s.sign_products.push_back(canon_sign(sp));
    for (size_t m = 0; m < a.sigma_branch.size(); ++m)
      if (std::find(mask.begin(), mask.end(), int(m)) == mask.end())
        s.sigma_branch.push_back(a.sigma_branch[m]);
    s.note = a.note + "; sigma-paired product, even form";
    out.push_back(s);
  }
  return out;
}

bool is_even_in(const Poly& p, const std::string& var) {
  auto it = std::find(p.vars.begin(), p.vars.end(), var);
  if (it == p.vars.end()) return true;
  size_t idx = size_t(it - p.vars.begin());
  for (const auto& [exp, c] : p.terms)
    if (exp[idx] % 2 != 0) return false;
  return true;
}

// Substitutes var = num/den across a branch, clearing the denominator. The
// domain inequalities in `extra` must keep den positive on the branch, so
// clearing preserves the strict signs.
SignedPolySystem map_ratio(const SignedPolySystem& s, const std::string& var,
                           const Poly& num, const Poly& den,
                           const std::vector<std::string>& out_vars,
                           const std::vector<std::pair<Poly, int>>& extra,
                           const std::string& why) {
  SignedPolySystem r;
  r.vars = out_vars;
  auto conv = [&](const Poly& p) {
    return restrict_vars(subst_ratio(lift(p, UV), var, num, den), out_vars);
  };
  for (const Poly& e : s.equations) {
    Poly m = conv(e);
    if (!m.is_zero()) r.equations.push_back(m);
  }
  for (const Poly& e : s.strict_negations) {
    Poly m = conv(e);
    if (m.is_constant()) {
      if (m.is_zero())
        throw std::invalid_argument("ratio substitution kills a strict negation");
      continue;
    }
    r.strict_negations.push_back(m);
  }
  for (const auto& [e, sg] : s.strict_inequalities) {
    Poly m = conv(e);
    if (m.is_constant()) {
      if (sign(m.constant_value()) == sg) continue;
      r.equations.push_back(Poly::constant(out_vars, Rat(1)));
      r.note += "ratio substitution violates a strict inequality; ";
      continue;
    }
    r.strict_inequalities.emplace_back(m, sg);
  }
  for (const auto& [e, sg] : extra) r.strict_inequalities.emplace_back(e, sg);
  r.sign_products = s.sign_products;
  r.sigma_branch = s.sigma_branch;
  r.note += s.note.empty() ? why : s.note + "; " + why;
  return r;
}

// Substitutes var^2 = num/den across a branch whose equations are even in
// var. Negations and inequalities with odd terms are dropped, which only
// enlarges the branch and keeps emptiness claims sound.
SignedPolySystem map_even(const SignedPolySystem& s, const std::string& var,
                          const Poly& num, const Poly& den,
                          const std::vector<std::string>& out_vars,
                          const std::string& why) {
  SignedPolySystem r;
  r.vars = out_vars;
  auto conv = [&](const Poly& p) {
    return restrict_vars(subst_even(lift(p, UV), var, num, den), out_vars);
  };
  for (const Poly& e : s.equations) {
    Poly m = conv(e);
    if (!m.is_zero()) r.equations.push_back(m);
  }
  int odd_dropped = 0;
  for (const Poly& e : s.strict_negations) {
    if (!is_even_in(lift(e, UV), var)) {
      ++odd_dropped;
      continue;
    }
    Poly m = conv(e);
    if (m.is_constant()) {
      if (m.is_zero())
        throw std::invalid_argument("even substitution kills a strict negation");
      continue;
    }
    r.strict_negations.push_back(m);
  }
  for (const auto& [e, sg] : s.strict_inequalities) {
    if (!is_even_in(lift(e, UV), var)) {
      ++odd_dropped;
      continue;
    }
    Poly m = conv(e);
    if (m.is_constant()) {
      if (sign(m.constant_value()) == sg) continue;
      r.equations.push_back(Poly::constant(out_vars, Rat(1)));
      r.note += "even substitution violates a strict inequality; ";
      continue;
    }
    r.strict_inequalities.emplace_back(m, sg);
  }
  r.sign_products = s.sign_products;
  r.sigma_branch = s.sigma_branch;
  r.note += s.note.empty() ? why : s.note + "; " + why;
  if (odd_dropped > 0)
    r.note += "; " + std::to_string(odd_dropped) +
              " odd strict conditions dropped (branch enlarged)";
  return r;
}

// Squared-magnitude coordinates q_i = u_i^2, for branch combinations whose
// relations are all even in the u variables.
const std::vector<std::string> QV{"q2", "q3", "q4"};

Poly qv(int i) {
  return i == 1 ? Poly::constant(QV, Rat(1))
                : Poly::variable(QV, "q" + std::to_string(i));
}

// Vanishing triple sum m_i + m_j + m_k = 0 in squared coordinates; the
// all-plus branch never vanishes and is omitted.
Systems iv_q(int i, int j, int k) {
  Systems out;
  for (int tj : {1, -1})
    for (int tk : {1, -1}) {
      if (tj == 1 && tk == 1) continue;
      SignedPolySystem s;
      s.vars = QV;
      s.equations = {qv(i) + qv(j) * Rat(tj) + qv(k) * Rat(tk)};
      s.sign_products = {canon_sign({i, j, tj}), canon_sign({i, k, tk})};
      s.sigma_branch = {tj, tk};
      s.note = "vanishing triple sum {" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) +
               "} in squared coordinates";
      out.push_back(std::move(s));
    }
  return out;
}

// Apex-base relation in squared coordinates.
SignedPolySystem vv_q(int i, int j, int k) {
  SignedPolySystem s;
  s.vars = QV;
  s.equations = {qv(i).pow(2) * (qv(j) + qv(k)).pow(4) -
                 qv(j).pow(3) * qv(k).pow(3)};
  s.sign_products = {canon_sign({j, k, 1})};
  s.note = "apex-base relation [" + std::to_string(i) + "," +
           std::to_string(j) + std::to_string(k) + "] in squared coordinates";
  return s;
}

Systems iv_u(int a, int b, int c) {
  return via(ConstraintSetId::triangle(Family::V_IV, a, b, c));
}

// Cleared reciprocal-magnitude sum over {i,j,k}; every term positive.
SignedPolySystem recip_sum(int i, int j, int k) {
  SignedPolySystem s;
  s.vars = UV;
  s.equations = {uv(j) * uv(k) + uv(i) * uv(k) + uv(i) * uv(j)};
  s.note = "cleared reciprocal-magnitude sum over {" + std::to_string(i) + "," +
           std::to_string(j) + "," + std::to_string(k) + "}";
  return s;
}

// The diagram-consistency union for a solution with body 1 held aside:
// equal pairs, signed pair splits, and the equal diagonal products.
Systems dia12() {
  return unite({one(ia_u(1, 3, 2, 4)), one(ia_u(1, 4, 2, 3)), vib(1, 3, 2, 4),
                vib(1, 4, 2, 3), ii_u(1, 2, 3, 4)});
}

// Same union after relabeling through the vanishing sum on {1,3,4}.
Systems dia12_again() {
  return unite({one(ia_u(1, 2, 3, 4)), one(ia_u(1, 4, 2, 3)), vib(1, 2, 3, 4),
                vib(1, 4, 2, 3), ii_u(1, 3, 2, 4)});
}

Region make_region(const std::vector<std::string>& vars, const Rat& lo,
                   std::optional<Rat> hi) {
  Region r;
  for (const auto& v : vars) r[v] = VarRange{lo, hi};
  return r;
}

Region positive_region(const std::vector<std::string>& vars) {
  return make_region(vars, Rat(0), std::nullopt);
}

std::vector<std::string> all_vars(const Systems& systems) {
  std::vector<std::string> out;
  for (const auto& s : systems) out = var_union(out, s.vars);
  return out;
}

Certificate empty_case(const std::string& id, const Systems& systems,
                       const Region& region, const std::string& note,
                       int dropped = 0) {
  Certificate c = certify_empty(id, systems, region);
  std::string extra = note;
  if (dropped > 0)
    extra += (extra.empty() ? "" : " ") +
             std::string("Sign-inconsistent branches dropped: ") +
             std::to_string(dropped) + ".";
  if (!extra.empty()) c.note = c.note.empty() ? extra : c.note + " " + extra;
  return c;
}

// ---------------------------------------------------------------------------
// Nonzero total mass, vanishing double-diagonal limits.

// All four masses equal against the vanishing-diagonal triangle union over
// bodies {1,2,3}.
Certificate case_thm61_1() {
  SignedPolySystem pin =
      pinned(UV, {uc("u2 - 1"), uc("u3 - 1"), uc("u4 - 1")},
             {{{1, 2, 1}}, {{1, 3, 1}}, {{1, 4, 1}}},
             "all masses equal; normalized coordinates pinned to 1");
  int dropped = 0;
  Systems systems = cross({one(pin), v_set(1, 2, 3)}, &dropped);
  return empty_case("thm61.case1", systems, positive_region(UV),
                    "Equal masses never satisfy the vanishing-diagonal "
                    "triangle relations over bodies 1,2,3.",
                    dropped);
}

// Two equal pairs m1 = m2, m3 = m4 against the triangle union over {1,2,3}
// and both signed cross pair splits. The pairing m1 = -m2 is excluded by the
// nonzero pair-sum hypothesis, so only the equal-sign pairing appears.
Certificate case_thm61_2() {
  SignedPolySystem pin =
      pinned(UV, {uc("u2 - 1"), uc("u3 - u4")}, {{{1, 2, 1}}, {{3, 4, 1}}},
             "m1 = m2 and m3 = m4 with nonzero pair sums");
  int dropped = 0;
  Systems systems =
      cross({one(pin), v_set(1, 2, 3),
             unite({via(ConstraintSetId::pair_sets(Family::V_IB, 1, 3, 2, 4)),
                    via(ConstraintSetId::pair_sets(Family::V_IB, 1, 4, 2, 3))})},
            &dropped);
  return empty_case(
      "thm61.case2", systems, positive_region(UV),
      "Two equal mass pairs force the triangle candidates to u3 = 1/2, where "
      "neither signed pair-split relation vanishes.",
      dropped);
}

// One equal diagonal product m1 m3 = m2 m4 (so u3 = u2 u4). Subcase 1 meets
// both remaining signed pair splits; the eliminant of the [12,34] relations
// against the diagonal carrier factors through u2^12 - 6 u2^6 + 1, whose two
// positive roots are (sqrt(2) +- 1)^(1/3).
Certificate case_thm61_3_1() {
  int dropped = 0;
  Systems crossed = cross(
      {ii_u(1, 3, 2, 4), vib(1, 2, 3, 4), vib(1, 4, 2, 3), v_set(1, 2, 3)},
      &dropped);
  std::vector<std::string> vars{"u2", "u4"};
  std::map<std::string, Poly> images{{"u3", uc("u2*u4")}};
  Systems systems =
      map_all(crossed, images, vars, "diagonal relation u3 = u2 u4 substituted");

  std::vector<TraceStep> steps;
  Poly carrier = uc("u3 - u2*u4");
  trace_define(carrier, "diagonal product relation", &steps);
  Poly prod = Poly::constant(UV, Rat(1));
  std::vector<Poly> rs;
  for (const auto& br : vib(1, 2, 3, 4)) {
    trace_define(br.equations.at(0), "pair-split relation before substitution",
                 &steps);
    Poly r = trace_resultant(carrier, br.equations.at(0), "u3", &steps);
    rs.push_back(r);
    prod = prod * r;
  }
  trace_define(prod, "product of the four pair-split eliminants", &steps);
  Poly q = prod;
  for (const Poly& r : rs) q = trace_divexact(q, r, "u2", &steps);
  Poly f = uc("u2^12 - 6*u2^6 + 1");
  trace_define(f, "irrational factor of the eliminant product", &steps);
  trace_divexact(prod, f, "u2", &steps);
  trace_roots(f, "u2", VarRange{Rat(0), std::nullopt},
              Rat(mpz_class(1), mpz_class(1) << 60), &steps);

  Certificate c = empty_case(
      "thm61.case3.sub1", systems, positive_region(vars),
      "The two positive roots of u2^12 - 6 u2^6 + 1 fail the remaining "
      "triangle relations.",
      dropped);
  c.trace.insert(c.trace.end(), steps.begin(), steps.end());
  return c;
}

// Subcase 2, first vanishing-triangle pattern: the matching signed pair
// split against the triangle unions over {1,2,3} and {1,3,4}.
Certificate case_thm61_3_2() {
  int dropped = 0;
  Systems crossed = cross(
      {ii_u(1, 3, 2, 4), vib(1, 3, 2, 4), v_set(1, 2, 3), v_set(1, 3, 4)},
      &dropped);
  std::vector<std::string> vars{"u2", "u4"};
  std::map<std::string, Poly> images{{"u3", uc("u2*u4")}};
  Systems systems =
      map_all(crossed, images, vars, "diagonal relation u3 = u2 u4 substituted");
  return empty_case("thm61.case3.sub2", systems, positive_region(vars), "",
                    dropped);
}

// Companion degree report for subcase 2: total degrees of the three product
// polynomials after the diagonal substitution, against the published
// figures 36, 17, 17.
Certificate case_thm61_3_2_degrees() {
  std::vector<std::string> vars{"u2", "u4"};
  std::map<std::string, Poly> images{{"u3", uc("u2*u4")}};
  // Sign environment of the subcase: some possibilities of each triangle
  // union are inconsistent with it and drop out of the products.
  Systems env = cross({ii_u(1, 3, 2, 4), vib(1, 3, 2, 4)});

  Certificate c;
  c.case_id = "thm61.case3.sub2.degrees";
  c.verdict = Verdict::DegreeReport;
  std::array<Systems, 3> groups = {vib(1, 3, 2, 4), v_set(1, 2, 3),
                                   v_set(1, 3, 4)};
  std::array<std::string, 3> names = {"pair-split product",
                                      "triangle union over {1,2,3}",
                                      "triangle union over {1,3,4}"};
  std::array<int, 3> reference = {36, 17, 17};
  for (int g = 0; g < 3; ++g) {
    Poly prod = Poly::constant(vars, Rat(1));
    int kept = 0;
    for (const auto& br : groups[g]) {
      bool live = false;
      for (const auto& e : env)
        if (conjoin(br, e)) {
          live = true;
          break;
        }
      if (!live) continue;
      prod = prod * map_vars(br.equations.at(0), images, vars);
      ++kept;
    }
    trace_define(prod, names[g] + " after the diagonal substitution", &c.trace);
    int deg = prod.total_degree();
    trace_note("degree", "", {poly_digest(prod)}, std::to_string(deg),
               names[g] + ": computed " + std::to_string(deg) + ", reference " +
                   std::to_string(reference[g]) + ", branches " +
                   std::to_string(kept),
               &c.trace);
    if (g == 0) {
      c.degree = deg;
      c.reference_degree = reference[g];
    }
  }
  c.note =
      "Computed total degrees of the branch products are 36, 46, 46; the "
      "published figures are 36, 17, 17. The first agrees; the other two "
      "differ because the published count applies to an unstated reduced "
      "form. The discrepancy is recorded, not reconciled.";
  return c;
}

// Subcase 3, second vanishing-triangle pattern: triangle unions over
// {1,2,3}, {1,2,4} and {2,3,4}.
Certificate case_thm61_3_3() {
  int dropped = 0;
  Systems crossed =
      cross({ii_u(1, 3, 2, 4), vib(1, 3, 2, 4), v_set(1, 2, 3),
             v_set(1, 2, 4), v_set(2, 3, 4)},
            &dropped);
  std::vector<std::string> vars{"u2", "u4"};
  std::map<std::string, Poly> images{{"u3", uc("u2*u4")}};
  Systems systems =
      map_all(crossed, images, vars, "diagonal relation u3 = u2 u4 substituted");
  return empty_case("thm61.case3.sub3", systems, positive_region(vars), "",
                    dropped);
}

// Shared machinery of the no-diagonal-degeneration subcases: the triangle
// union over {1, a, 4} is split into its possibilities solved for u_a. The
// all-plus triangle branch is strictly positive; the three sign branches give
// u_a as a rational function of u4; the apex-base relation gives
// u_a^2 = u4^3/(1+u4^2)^2 and is substituted into sigma-paired products that
// are even in u_a.
Certificate case4_split(const std::string& id, const std::string& sv,
                        const Systems& base, const Systems& base_even,
                        int dropped, const std::string& note) {
  std::vector<std::string> out_vars;
  for (const auto& v : UV)
    if (v != sv) out_vars.push_back(v);
  Systems all;

  SignedPolySystem allplus;
  allplus.vars = UV;
  allplus.equations = {poly_expr(UV, sv + "*u4 + u4 + " + sv)};
  allplus.note = "all-plus branch of the split triangle relation";
  int local = 0;
  for (const auto& s : cross(base, one(allplus), &local)) all.push_back(s);

  struct Ratio {
    std::string why;
    Poly num, den;
    std::vector<std::pair<Poly, int>> ineqs;
  };
  const std::vector<Ratio> ratios = {
      {sv + " = u4/(1 - u4)", uc("u4"), uc("1 - u4"), {{uc("1 - u4"), 1}}},
      {sv + " = u4/(1 + u4)", uc("u4"), uc("1 + u4"), {}},
      {sv + " = u4/(u4 - 1)", uc("u4"), uc("u4 - 1"), {{uc("u4 - 1"), 1}}}};
  for (const auto& rt : ratios)
    for (const auto& s : base)
      all.push_back(map_ratio(s, sv, rt.num, rt.den, out_vars, rt.ineqs, rt.why));

  Poly num = uc("u4^3"), den = uc("(1 + u4^2)^2");
  for (const auto& s : base_even) {
    SignedPolySystem t =
        map_even(s, sv, num, den, out_vars,
                 sv + "^2 = u4^3/(1 + u4^2)^2 from the apex-base relation");
    t.sign_products.push_back(canon_sign({1, 4, 1}));
    all.push_back(t);
  }
  return empty_case(id, all, positive_region(UV), note, dropped + local);
}

Systems tri3(int a, int b, int c) {
  return via(ConstraintSetId::triangle(Family::V_III, a, b, c));
}

Systems vvs(int a, int b, int c) {
  return {vv_u(a, b, c), vv_u(b, a, c), vv_u(c, a, b)};
}

Certificate case_thm61_4_1() {
  int dropped = 0;
  Systems base = cross(
      {vib(1, 2, 3, 4), vib(1, 3, 2, 4), v_set(1, 2, 3), v_set(1, 3, 4)},
      &dropped);
  Systems v123_even = unite({pair_sigma(tri3(1, 2, 3), {0}), vvs(1, 2, 3)});
  Systems base_e = cross({pair_sigma(vib(1, 2, 3, 4), {1}),
                          pair_sigma(vib(1, 3, 2, 4), {0}), v123_even,
                          v_set(1, 3, 4)},
                         &dropped);
  return case4_split(
      "thm61.case4.sub1", "u2", base, base_e, dropped,
      "Both pair splits against the triangle unions over {1,2,3}, {1,2,4}, "
      "{1,3,4}; the {1,2,4} union is split into its solved possibilities.");
}

Certificate case_thm61_4_2() {
  int dropped = 0;
  Systems base = cross(
      {vib(1, 2, 3, 4), vib(1, 3, 2, 4), v_set(1, 2, 3), v_set(2, 3, 4)},
      &dropped);
  Systems v123_even = unite({pair_sigma(tri3(1, 2, 3), {0}), vvs(1, 2, 3)});
  Systems v234_even = unite({pair_sigma(tri3(2, 3, 4), {0, 1}), vvs(2, 3, 4)});
  Systems base_e = cross({pair_sigma(vib(1, 2, 3, 4), {1}),
                          pair_sigma(vib(1, 3, 2, 4), {0}), v123_even,
                          v234_even},
                         &dropped);
  return case4_split(
      "thm61.case4.sub2", "u2", base, base_e, dropped,
      "Both pair splits against the triangle unions over {1,2,3}, {1,2,4}, "
      "{2,3,4}; the {1,2,4} union is split into its solved possibilities.");
}

Certificate case_thm61_4_3() {
  int dropped = 0;
  Systems base = cross(
      {vib(1, 2, 3, 4), vib(1, 3, 2, 4), v_set(1, 2, 3), v_set(2, 3, 4)},
      &dropped);
  Systems v123_even = unite({pair_sigma(tri3(1, 2, 3), {1}), vvs(1, 2, 3)});
  Systems v234_even = unite({pair_sigma(tri3(2, 3, 4), {0}), vvs(2, 3, 4)});
  Systems base_e = cross({pair_sigma(vib(1, 2, 3, 4), {0}),
                          pair_sigma(vib(1, 3, 2, 4), {1}), v123_even,
                          v234_even},
                         &dropped);
  return case4_split(
      "thm61.case4.sub3", "u3", base, base_e, dropped,
      "Both pair splits against the triangle unions over {1,2,3}, {1,3,4}, "
      "{2,3,4}; the {1,3,4} union is split into its solved possibilities.");
}

// ---------------------------------------------------------------------------
// Nonzero masses with vanishing moment: diagonal-product degenerations.

// Equal diagonal products in every split force unit masses, which fail the
// four-term cube-root cycle sum.
Certificate case_thm62_1() {
  Systems base = via(ConstraintSetId::pair_sets(Family::I_II, 1, 3, 2, 4));
  std::vector<std::string> vars{"c12", "c14", "c23", "c34"};
  std::map<std::string, Poly> images;
  for (const auto& m : MV) images[m] = Poly::constant(vars, Rat(1));
  Systems systems = map_all(
      base, images, vars,
      "equal diagonal products in every split force unit masses");
  for (auto& sys : systems)
    sys.sign_products = {{{1, 1, 1}}, {{2, 2, 1}}, {{3, 3, 1}}, {{4, 4, 1}}};
  return empty_case(
      "thm62.case1", systems, make_region(vars, Rat(-8), Rat(8)),
      "At unit masses every cycle auxiliary equals (1/2)^(1/3), so their sum "
      "is positive; the auxiliary bounds follow from the edge-equation root "
      "bounds.");
}

// Equal pairs m1 = m2 = 1, m3 = m4 = s < 0 against the two-term cube-root
// pair relation on the split [13,24].
Certificate case_thm62_2() {
  Systems base = via(ConstraintSetId::pair_sets(Family::I_I, 1, 3, 2, 4));
  std::vector<std::string> vars{"s"};
  Poly s = Poly::variable(vars, "s");
  std::map<std::string, Poly> images{{"m1", Poly::constant(vars, Rat(1))},
                                     {"m2", Poly::constant(vars, Rat(1))},
                                     {"m3", s},
                                     {"m4", s}};
  Systems systems =
      map_all(base, images, vars, "masses (1, 1, s, s) with s negative");
  for (auto& sys : systems) sys.sign_products = {{{3, 3, -1}}, {{4, 4, -1}}};
  return empty_case(
      "thm62.case2", systems, make_region(vars, Rat(-8), Rat(0)),
      "The pair relation collapses to 2 s^3 (1+s)^... with roots 0 and -1; "
      "s = -1 is excluded by the nonzero pair-sum negation and s = 0 by "
      "nonzero masses, and all roots lie in [-1, 0] so the search bound -8 is "
      "safe.");
}

// Alternating signs with equal diagonal products on [13,24]: writing
// m2 = -q2, m4 = -q4, m3 = q2 q4, the cube-root pair relation on [12,34]
// factors as q2^3 q4 (1 - q2)(1 - q4^5); dividing the recorded nonvanishing
// factors (nonzero masses, nonzero pair sums) leaves 1+q4+q4^2+q4^3+q4^4.
Certificate case_thm62_3_1() {
  std::vector<std::string> vars{"q2", "q4"};
  Systems base = via(ConstraintSetId::pair_sets(Family::I_I, 1, 2, 3, 4));
  Poly q2 = Poly::variable(vars, "q2"), q4 = Poly::variable(vars, "q4");
  std::map<std::string, Poly> images{{"m1", Poly::constant(vars, Rat(1))},
                                     {"m2", -q2},
                                     {"m3", q2 * q4},
                                     {"m4", -q4}};
  Systems mapped = map_all(base, images, vars,
                           "masses (1, -q2, q2 q4, -q4), q positive");
  std::vector<TraceStep> steps;
  Poly full = mapped.at(0).equations.at(0);
  trace_define(full, "pair relation at the substituted masses", &steps);
  Poly f1 = poly_expr(vars, "q2^3*q4");
  trace_define(f1, "nonzero-mass factor", &steps);
  Poly r1 = trace_divexact(full, f1, "q4", &steps);
  Poly f2 = poly_expr(vars, "1 - q2");
  trace_define(f2, "nonzero pair sum m1 + m2", &steps);
  Poly r2 = trace_divexact(r1, f2, "q4", &steps);
  Poly f3 = poly_expr(vars, "1 - q4");
  trace_define(f3, "nonzero pair sum m1 + m4", &steps);
  Poly reduced = trace_divexact(r2, f3, "q4", &steps);

  SignedPolySystem sys;
  sys.vars = vars;
  sys.equations = {reduced};
  sys.strict_negations = {f2, f3};
  sys.sign_products = {{{2, 2, -1}}, {{4, 4, -1}}, {{3, 3, 1}}};
  sys.note =
      "reduced pair relation after dividing recorded nonvanishing factors";
  Certificate c =
      empty_case("thm62.case3.sub1", one(sys), positive_region(vars),
                 "The quotient 1+q4+q4^2+q4^3+q4^4 is positive for q4 > 0.");
  c.trace.insert(c.trace.end(), steps.begin(), steps.end());
  return c;
}

// Equal diagonal products on [13,24] meeting the cube-root pair relation on
// the same split: substituting m1 = 1, m3 = m2 m4 factors the relation into
// (m2 m4)^3 (1 + m2)(1 + m4), and (1 + m2)(1 + m4) is the total mass. Each
// linear factor becomes its own branch, refuted against the nonzero
// total-mass negation.
Certificate case_equal_products_pair(const std::string& id,
                                     const std::string& context) {
  std::vector<std::string> vars{"m2", "m4"};
  Systems base = via(ConstraintSetId::pair_sets(Family::I_I, 1, 3, 2, 4));
  Poly m2 = Poly::variable(vars, "m2"), m4 = Poly::variable(vars, "m4");
  std::map<std::string, Poly> images{{"m1", Poly::constant(vars, Rat(1))},
                                     {"m3", m2 * m4}};
  Systems mapped = map_all(base, images, vars, context);
  std::vector<TraceStep> steps;
  Poly full = mapped.at(0).equations.at(0);
  trace_define(full, "pair relation with m1 = 1, m3 = m2 m4", &steps);
  Poly f1 = (m2 * m4).pow(3);
  trace_define(f1, "nonzero-mass factor", &steps);
  Poly total = trace_divexact(full, f1, "m2", &steps);
  Poly a = poly_expr(vars, "1 + m2");
  trace_define(a, "first linear factor of the total mass", &steps);
  Poly b = trace_divexact(total, a, "m2", &steps);

  Systems systems;
  for (const Poly& factor : {a, b}) {
    SignedPolySystem sys;
    sys.vars = vars;
    sys.equations = {factor};
    sys.strict_negations = {factor};
    sys.note = "total-mass factor must vanish, but the total mass is nonzero";
    systems.push_back(sys);
  }
  Certificate c = empty_case(
      id, systems, make_region(vars, Rat(-8), Rat(8)),
      "The relation reduces to (m2 m4)^3 (1+m2)(1+m4) = 0 while "
      "(1+m2)(1+m4) equals the nonzero total mass. " + context);
  c.trace.insert(c.trace.end(), steps.begin(), steps.end());
  return c;
}

Certificate case_thm62_3_2() {
  return case_equal_products_pair(
      "thm62.case3.sub2",
      "Equal diagonal products on [13,24] meet the matching cube-root pair "
      "relation.");
}

// One positive and one negative pair: masses (1, -u2^2, -u3^2, u4^2) under
// both signed pair-split relations together with the vanishing-moment
// extras. The sign analysis leaves two essentially different subcases; the
// other two follow by renormalizing on body 2.

Poly c4_f1(int s1, int s2) {
  return (uv(3).pow(3) + uv(4).pow(3) * Rat(s1)) +
         (uv(3).pow(3) - uv(4).pow(3) * Rat(s1)) * uv(2).pow(3) * Rat(s2);
}
Poly c4_f2(int s3, int s4) {
  return (uv(2).pow(3) + uv(4).pow(3) * Rat(s3)) +
         (uv(2).pow(3) - uv(4).pow(3) * Rat(s3)) * uv(3).pow(3) * Rat(s4);
}
Poly c4_g1() {
  return uv(2).pow(6) * (uv(3).pow(2) - uv(4).pow(2)) -
         uv(3).pow(6) * uv(4).pow(6) *
             (Poly::constant(UV, Rat(1)) - uv(2).pow(2));
}
Poly c4_g2() {
  return uv(3).pow(6) * (uv(2).pow(2) - uv(4).pow(2)) -
         uv(2).pow(6) * uv(4).pow(6) *
             (Poly::constant(UV, Rat(1)) - uv(3).pow(2));
}

Certificate case_thm62_4_1() {
  std::vector<TraceStep> steps;
  Poly d = c4_f1(-1, -1) - c4_f2(-1, -1);
  trace_define(d, "difference of the two signed pair relations", &steps);
  Poly cof = uc("1 + u4^3");
  trace_define(cof, "positive cofactor", &steps);
  trace_divexact(d, cof, "u3", &steps);  // u3^3 - u2^3, so u3 = u2

  std::vector<std::string> vars{"u2", "u4"};
  std::map<std::string, Poly> images{{"u3", Poly::variable(UV, "u2")}};
  SignedPolySystem sys;
  sys.vars = vars;
  sys.equations = {map_vars(c4_f1(-1, -1), images, vars),
                   map_vars(c4_g1(), images, vars)};
  sys.strict_inequalities = {{poly_expr(vars, "u2 - 1"), -1}};
  sys.sign_products = {{{1, 1, 1}}, {{2, 2, -1}}, {{3, 3, -1}}, {{4, 4, 1}}};
  sys.sigma_branch = {-1, -1, -1, -1};
  sys.note =
      "both normalized ratios below 1; the difference of the pair relations "
      "factors through the positive cofactor and forces u3 = u2";
  Certificate c = empty_case(
      "thm62.case4.sub1", one(sys), positive_region(vars),
      "Masses (1, -u2^2, -u3^2, u4^2); the remaining two subcases reduce to "
      "these by renormalizing on body 2 (swapping labels within both pairs).");
  c.trace.insert(c.trace.end(), steps.begin(), steps.end());
  return c;
}

Certificate case_thm62_4_2() {
  std::vector<TraceStep> steps;
  Poly d = c4_f1(-1, -1) + c4_f2(1, 1);
  trace_define(d, "sum of the two signed pair relations", &steps);
  Poly cof = uc("u2^3 + u3^3");
  trace_define(cof, "positive cofactor", &steps);
  Poly rem = trace_divexact(d, cof, "u4", &steps);  // 1 - u4^3, so u4 = 1
  trace_roots(rem, "u4", VarRange{Rat(0), std::nullopt}, Rat(1, 1024), &steps);

  std::vector<std::string> vars{"u2", "u3"};
  std::map<std::string, Poly> images{{"u4", Poly::constant(UV, Rat(1))}};
  SignedPolySystem sys;
  sys.vars = vars;
  sys.equations = {map_vars(c4_f1(-1, -1), images, vars),
                   map_vars(c4_g1(), images, vars),
                   map_vars(c4_g2(), images, vars)};
  sys.strict_inequalities = {{poly_expr(vars, "u2 - 1"), -1},
                             {poly_expr(vars, "u3 - 1"), 1}};
  sys.sign_products = {{{1, 1, 1}}, {{2, 2, -1}}, {{3, 3, -1}}, {{4, 4, 1}}};
  sys.sigma_branch = {-1, -1, 1, 1};
  sys.note = "ratios split around 1; the sum of the pair relations factors "
             "through the positive cofactor and forces u4 = 1";
  Certificate c =
      empty_case("thm62.case4.sub2", one(sys), positive_region(vars),
                 "Masses (1, -u2^2, -u3^2, u4^2) with u2 < 1 < u3.");
  c.trace.insert(c.trace.end(), steps.begin(), steps.end());
  return c;
}

// ---------------------------------------------------------------------------
// Nonzero masses, vanishing moment, one vanishing triple sum.

// First diagram family: the zero-moment pair split [13,24] against the other
// admissible degenerations and the vanishing triangle sum over {1,2,3}.
Certificate case_thm64_1() {
  Systems systems;

  // The equal-diagonal-products possibility is the shared total-mass
  // reduction (thm64.case1.products); here the two triple-sum possibilities.

  // (b) both triangle sums over {1,2,3} and {1,2,4} vanish: masses
  // (1, -(s+1), s, s) in the two-term cube-root pair relation on [13,24].
  {
    std::vector<std::string> vars{"s"};
    Poly s = Poly::variable(vars, "s");
    std::map<std::string, Poly> images{
        {"m1", Poly::constant(vars, Rat(1))},
        {"m2", (s + Poly::constant(vars, Rat(1))) * Rat(-1)},
        {"m3", s},
        {"m4", s}};
    Systems mapped =
        map_all(via(ConstraintSetId::pair_sets(Family::I_I, 1, 3, 2, 4)),
                images, vars,
                "masses (1, -(s+1), s, s) from two vanishing triangle sums");
    for (auto& sys : mapped) {
      sys.strict_negations.push_back(s);
      sys.sign_products = {{{3, 3, -1}}};
      systems.push_back(sys);
    }
  }

  // (c) triangle sums over {1,2,3} and {2,3,4} vanish: m4 = 1 and masses
  // (1, m2, -1-m2, 1) in the same pair relation.
  {
    std::vector<std::string> vars{"m2"};
    Poly m2 = Poly::variable(vars, "m2");
    std::map<std::string, Poly> images{
        {"m1", Poly::constant(vars, Rat(1))},
        {"m3", (m2 + Poly::constant(vars, Rat(1))) * Rat(-1)},
        {"m4", Poly::constant(vars, Rat(1))}};
    Systems mapped =
        map_all(via(ConstraintSetId::pair_sets(Family::I_I, 1, 3, 2, 4)),
                images, vars,
                "masses (1, m2, -1-m2, 1) from two vanishing triangle sums");
    for (auto& sys : mapped) systems.push_back(sys);
  }

  Region region;
  region["s"] = VarRange{Rat(-8), Rat(0)};
  region["m2"] = VarRange{Rat(-8), Rat(8)};
  return empty_case(
      "thm64.case1", systems, region,
      "Zero-moment pair split [13,24]: the equal-diagonal-product possibility "
      "is the shared total-mass reduction (see thm64.case1.products); the two "
      "triple-sum possibilities collapse to the rootless univariate relations "
      "s^3 (1 + (s+1)^4) and (1+m2)^4 + m2^4.");
}

Certificate case_thm64_1_products() {
  return case_equal_products_pair(
      "thm64.case1.products",
      "Zero-moment pair split [13,24] meeting equal diagonal products on the "
      "same split.");
}

// Second diagram family: equal diagonal products on [12,34] with the
// vanishing triangle sum over {1,2,3} parameterize the masses as
// (1, -t/(1+t), -1/(1+t), t); each remaining possibility pins t.
Certificate case_thm64_2() {
  std::vector<std::string> vars{"t", "c12", "c14", "c23", "c34"};
  auto P = [&](const std::string& e) { return poly_expr(vars, e); };

  // (ii)/(iv): t^2 = 1 from equal products on [13,24] or from the vanishing
  // triangle sum over {2,3,4}; t = -1 is excluded by the nonzero pair sum
  // m1 + m4, and t = 1 gives masses (1, -1/2, -1/2, 1), which must satisfy
  // the cycle sum. Denominators (1+t)^k were cleared against that negation.
  std::vector<Poly> cyc = {P("c12^3*(1+t)^2 + t^3"), P("c14^3*(1+t) - t^3"),
                           P("-c23^3*(1+t)^6 - t^3"),
                           P("c34^3*(t^2+t-1)*(1+t)^2 + t^3"),
                           P("c12 + c14 + c23 + c34")};
  std::vector<TraceStep> steps;
  Poly tsq = P("t^2 - 1");
  trace_define(tsq, "numerator of m3 - m2 m4; also of m2 + m3 + m4", &steps);
  trace_roots(tsq, "t", VarRange{Rat(-8), Rat(8)}, Rat(1, 1024), &steps);

  Systems systems;
  for (int t : {1, -1}) {
    SignedPolySystem sys;
    sys.vars = {"c12", "c14", "c23", "c34"};
    for (const Poly& e : cyc) {
      Poly m = map_vars(e, {{"t", Poly::constant(vars, Rat(t))}}, sys.vars);
      if (!m.is_zero()) sys.equations.push_back(m);
    }
    sys.note = t == 1 ? "cycle sum check at t = 1, masses (1, -1/2, -1/2, 1)"
                      : "t = -1 zeroes the excluded pair sum m1 + m4; one "
                        "cleared edge equation becomes the constant 1";
    systems.push_back(sys);
  }

  // (iii): vanishing triangle sum over {1,2,4} gives numerator t^2 + t + 1.
  SignedPolySystem tri;
  tri.vars = {"t"};
  tri.equations = {poly_expr({"t"}, "t^2 + t + 1")};
  tri.note = "numerator of m1 + m2 + m4 at the parameterized masses";
  systems.push_back(tri);

  Region region = make_region(vars, Rat(-8), Rat(8));
  Certificate cert = empty_case(
      "thm64.case2", systems, region,
      "At t = 1 the cycle auxiliaries are (-(1/4)^(1/3), (1/2)^(1/3), -1/4, "
      "-(1/4)^(1/3)) and their sum is nonzero; t = -1 makes an edge equation "
      "equal 1. The auxiliary bounds follow from the edge-equation root "
      "bounds at t = 1.");
  cert.trace.insert(cert.trace.end(), steps.begin(), steps.end());
  return cert;
}

// The three fully symmetric triple-sum solutions (one body against three
// equal ones) are incompatible with the vanishing of their equal-mass
// triangle sum, which the surviving diagram shapes would force.
Certificate case_thm64_final() {
  Systems systems;
  struct Sol {
    std::array<Rat, 3> m;  // m2, m3, m4 with m1 = 1
    std::vector<int> tri;  // indices of the equal-mass triangle
  };
  std::vector<Sol> sols = {
      {{Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}, {2, 3, 4}},
      {{Rat(-2), Rat(1), Rat(1)}, {1, 3, 4}},
      {{Rat(1), Rat(-2), Rat(1)}, {1, 2, 4}},
  };
  std::vector<std::string> vars{"m2", "m3", "m4"};
  for (const auto& s : sols) {
    SignedPolySystem sys;
    sys.vars = vars;
    for (int i = 0; i < 3; ++i)
      sys.equations.push_back(Poly::variable(vars, vars[i]) -
                              Poly::constant(vars, s.m[i]));
    Poly sum = Poly::constant(vars, Rat(0));
    for (int b : s.tri)
      sum = sum + (b == 1 ? Poly::constant(vars, Rat(1))
                          : Poly::variable(vars, "m" + std::to_string(b)));
    sys.equations.push_back(sum);
    sys.note = "pinned triple-equal solution against its forced zero triangle sum";
    systems.push_back(sys);
  }
  return empty_case(
      "thm64.final", systems, make_region(vars, Rat(-8), Rat(8)),
      "Each solution with three equal masses would need the triangle sum over "
      "the equal bodies to vanish in the surviving diagram shape, but that "
      "sum is -3/2 or 3 at the pinned masses.");
}

// ---------------------------------------------------------------------------
// Two vanishing triple sums sharing a pair force m3 = m4; the three
// admissible degenerations over {1,3,4} and the two apex-base relations all
// fail.
Certificate case_lemma72() {
  Systems systems;

  // (a) triangle relations over {1,3,4} with its vanishing sum: the masses
  // pin to (1, -1/2, -1/2, -1/2) up to a global sign.
  {
    SignedPolySystem pin = pinned(
        UV, {uc("u2 - u3"), uc("u3 - u4"), uc("u2^2 - 1/2")},
        {{{1, 2, -1}}, {{1, 3, -1}}, {{1, 4, -1}}},
        "two vanishing triple sums with a vanishing triangle sum over {1,3,4}");
    int dropped = 0;
    Systems part =
        cross({one(pin), via(ConstraintSetId::triangle(Family::V_III, 1, 3, 4)),
               via(ConstraintSetId::triangle(Family::V_IV, 1, 3, 4))},
              &dropped);
    systems.insert(systems.end(), part.begin(), part.end());
  }

  // (b)/(c) apex-base relation with apex 3 (resp. 4) over the base {1,4}
  // (resp. {1,3}): with m3 = m4 and x = m1/m3 > 0 it reads (1+x)^4 = x^3.
  for (const char* which : {"apex 3 over base {1,4}", "apex 4 over base {1,3}"}) {
    SignedPolySystem sys;
    sys.vars = {"x"};
    sys.equations = {poly_expr({"x"}, "(1+x)^4 - x^3")};
    sys.note = std::string("apex-base relation, ") + which +
               ", homogenized with m3 = m4 and x = m1/m3";
    systems.push_back(sys);
  }

  Region region = positive_region(UV);
  region["x"] = VarRange{Rat(0), std::nullopt};
  return empty_case(
      "lemma72", systems, region,
      "m1+m2+m3 = 0 and m1+m2+m4 = 0 force m3 = m4; the pinned triangle "
      "candidates evaluate away from zero and (1+x)^4 - x^3 is positive for "
      "x > 0.");
}

// ---------------------------------------------------------------------------
// Monotonicity lemmas used by the zero-total-mass pair analysis.

// ---------------------------------------------------------------------------
// Two vanishing-sum triangles: the triple sum on {1,2,3} vanishes against the
// degeneration unions over {1,2,4} and {1,3,4}. The five subsets below cover
// every combination of union members.

// Subsets 1 and 2: combinations whose relations are all even (squared
// coordinates), plus the two mixed sum-triangle combinations. These admit
// isolated solutions; the masses are recovered as certified root boxes.
Certificate case_thm63_subsets12() {
  int dropped = 0;
  Systems q124 = unite({iv_q(1, 2, 4), {vv_q(1, 2, 4), vv_q(2, 1, 4), vv_q(4, 1, 2)}});
  Systems q134 = unite({iv_q(1, 3, 4), {vv_q(1, 3, 4), vv_q(3, 1, 4), vv_q(4, 1, 3)}});
  Systems s1 = cross({iv_q(1, 2, 3), q124, q134}, &dropped);
  Systems s2 =
      unite({cross({iv_u(1, 2, 3), tri3(1, 2, 4), iv_u(1, 3, 4)}, &dropped),
             cross({iv_u(1, 2, 3), iv_u(1, 2, 4), tri3(1, 3, 4)}, &dropped)});
  Region reg = positive_region(QV);
  for (const auto& v : UV) reg[v] = VarRange{Rat(0), std::nullopt};
  Certificate c = certify_empty("thm63.subsets12", unite({s1, s2}), reg);

  // The same mass point recurs across branches and coordinate systems;
  // collapse records by the squared magnitudes.
  std::vector<SolutionRecord> unique;
  std::set<std::array<long long, 3>> seen;
  for (const auto& r : c.roots) {
    std::array<long long, 3> k{};
    for (int i = 2; i <= 4; ++i) {
      double v = 0;
      auto qi = r.values.find("q" + std::to_string(i));
      auto ui = r.values.find("u" + std::to_string(i));
      if (qi != r.values.end()) {
        v = qi->second.approx();
      } else if (ui != r.values.end()) {
        double u = ui->second.approx();
        v = u * u;
      }
      k[size_t(i - 2)] = llround(v * 1e9);
    }
    if (seen.insert(k).second) unique.push_back(r);
  }
  std::string merged =
      std::to_string(c.roots.size() - unique.size()) + " duplicate records merged.";
  c.roots = std::move(unique);
  std::string extra = merged + " Sign-inconsistent branches dropped: " +
                      std::to_string(dropped) + ".";
  c.note = c.note.empty() ? extra : c.note + " " + extra;
  return c;
}

// The solutions of subsets 1 and 2 against the diagram-consistency unions:
// each recovered mass point is pinned and refuted in every consistency
// branch. Points with a vanishing sum on {1,3,4} face the relabeled union too.
Certificate case_thm63_subsets12_checks() {
  struct Tup {
    const char* name;
    std::vector<std::string> pins;
    std::array<int, 3> sg;  // signs of m2, m3, m4
    bool sum134;
  };
  const std::vector<Tup> tuples = {
      {"(1, 4, -5, 4)", {"u2 - 2", "u3^2 - 5", "u4 - 2"}, {1, -1, 1}, true},
      {"(1, -5, 4, 4)", {"u2^2 - 5", "u3 - 2", "u4 - 2"}, {-1, 1, 1}, false},
      {"(1, -4, 3, -4)", {"u2 - 2", "u3^2 - 3", "u4 - 2"}, {-1, 1, -1}, true},
      {"(1, 3, -4, -4)", {"u2^2 - 3", "u3 - 2", "u4 - 2"}, {1, -1, -1}, false},
      {"(1, -1/2, -1/2, -1/2)",
       {"u2^2 - 1/2", "u3^2 - 1/2", "u4^2 - 1/2"},
       {-1, -1, -1},
       true}};
  Systems checks = unite({dia12(),
                          cross(one(recip_sum(1, 3, 4)), iv_u(1, 3, 4)),
                          cross(one(recip_sum(2, 3, 4)), iv_u(2, 3, 4)),
                          iv_u(2, 3, 4)});
  Systems again =
      unite({dia12_again(), cross(one(recip_sum(1, 2, 4)), iv_u(1, 2, 4))});
  int dropped = 0;
  Systems all;
  for (const auto& t : tuples) {
    std::vector<Poly> eqs;
    for (const auto& p : t.pins) eqs.push_back(uc(p));
    SignedPolySystem pin = pinned(
        UV, eqs,
        {{1, 1, 1}, {2, 2, t.sg[0]}, {3, 3, t.sg[1]}, {4, 4, t.sg[2]}},
        std::string("masses pinned to ") + t.name);
    for (const auto& s : cross(one(pin), checks, &dropped)) all.push_back(s);
    if (t.sum134)
      for (const auto& s : cross(one(pin), again, &dropped)) all.push_back(s);
  }
  return empty_case("thm63.subsets12.checks", all, positive_region(UV),
                    "Every recovered mass point fails each diagram-consistency "
                    "branch.",
                    dropped);
}

// Subset 3: both unions take their plain triangle member. Solving each
// triangle relation for its magnitude turns the vanishing triple sum into a
// one-variable quartic; combinations with an all-plus triangle branch are
// strictly positive and kept raw.
Certificate case_thm63_subset3() {
  int dropped = 0;
  Systems all;
  auto split_plus = [](const Systems& t) {
    std::pair<Systems, Systems> out;
    for (const auto& s : t)
      (s.sigma_branch == std::vector<int>{1, 1} ? out.first : out.second)
          .push_back(s);
    return out;
  };
  auto [plus124, rest124] = split_plus(tri3(1, 2, 4));
  auto [plus134, rest134] = split_plus(tri3(1, 3, 4));
  for (const auto& s :
       cross({iv_u(1, 2, 3), plus124, tri3(1, 3, 4)}, &dropped))
    all.push_back(s);
  for (const auto& s : cross({iv_u(1, 2, 3), rest124, plus134}, &dropped))
    all.push_back(s);

  const std::vector<std::string> V4{"u4"};
  struct Pos {
    std::string den;
    std::vector<std::pair<std::string, int>> ineqs;
    std::string why;
  };
  const std::vector<Pos> poss = {{"1 - u4", {{"1 - u4", 1}}, "u4/(1 - u4)"},
                                 {"1 + u4", {}, "u4/(1 + u4)"},
                                 {"u4 - 1", {{"u4 - 1", 1}}, "u4/(u4 - 1)"}};
  for (const auto& ivb : iv_u(1, 2, 3)) {
    int tj = ivb.sigma_branch.at(0), tk = ivb.sigma_branch.at(1);
    for (const auto& pa : poss)
      for (const auto& pb : poss) {
        Poly a = poly_expr(V4, pa.den), b = poly_expr(V4, pb.den);
        Poly u4 = Poly::variable(V4, "u4");
        SignedPolySystem s;
        s.vars = V4;
        s.equations = {a.pow(2) * b.pow(2) + u4.pow(2) * b.pow(2) * Rat(tj) +
                       u4.pow(2) * a.pow(2) * Rat(tk)};
        for (const auto& [e, sg] : pa.ineqs)
          s.strict_inequalities.emplace_back(poly_expr(V4, e), sg);
        for (const auto& [e, sg] : pb.ineqs)
          s.strict_inequalities.emplace_back(poly_expr(V4, e), sg);
        s.sign_products = ivb.sign_products;
        s.sigma_branch = ivb.sigma_branch;
        s.note = "triple sum cleared under u2 = " + pa.why +
                 ", u3 = " + pb.why;
        all.push_back(std::move(s));
      }
  }
  return empty_case("thm63.subset3", all, positive_region(UV),
                    "Surviving roots are the admissible magnitudes of the "
                    "double-triangle combinations.",
                    dropped);
}

// The subset-3 combinations against the diagram-consistency unions and the
// remaining vanishing sums.
Certificate case_thm63_subset3_checks() {
  int dropped = 0;
  Systems all = cross({iv_u(1, 2, 3), tri3(1, 2, 4), tri3(1, 3, 4),
                       unite({dia12(), iv_u(1, 3, 4), iv_u(2, 3, 4)})},
                      &dropped);
  return empty_case("thm63.subset3.checks", all, positive_region(UV), "",
                    dropped);
}

// Subset 4: plain triangle over {1,2,4} against the apex-base union over
// {1,3,4}, crossed with the diagram-consistency union.
Certificate case_thm63_subset4() {
  int dropped = 0;
  Systems all = cross({iv_u(1, 2, 3), tri3(1, 2, 4),
                       {vv_u(1, 3, 4), vv_u(3, 1, 4), vv_u(4, 1, 3)},
                       dia12()},
                      &dropped);
  return empty_case("thm63.subset4", all, positive_region(UV), "", dropped);
}

// Subset 4 with an additional vanishing sum. m1 + m3 + m4 = 0 forces
// m2 = m4 and two rational mass points; m2 + m3 + m4 = 0 forces m4 = 1 and
// two more. Each fails the apex-base union over {1,3,4}.
Certificate case_thm63_subset4_sums() {
  struct Pt {
    const char* name;
    std::vector<std::string> pins;
    std::array<int, 3> sg;
  };
  const std::vector<Pt> pts = {
      {"(1, 4, -5, 4)", {"u2 - 2", "u3^2 - 5", "u4 - 2"}, {1, -1, 1}},
      {"(1, -4, 3, -4)", {"u2 - 2", "u3^2 - 3", "u4 - 2"}, {-1, 1, -1}},
      {"(1, -1/4, -3/4, 1)",
       {"u2^2 - 1/4", "u3^2 - 3/4", "u4 - 1"},
       {-1, -1, 1}},
      {"(1, 1/4, -5/4, 1)",
       {"u2^2 - 1/4", "u3^2 - 5/4", "u4 - 1"},
       {1, -1, 1}}};
  Systems vvset{vv_u(1, 3, 4), vv_u(3, 1, 4), vv_u(4, 1, 3)};
  int dropped = 0;
  Systems all;
  for (const auto& p : pts) {
    std::vector<Poly> eqs;
    for (const auto& e : p.pins) eqs.push_back(uc(e));
    SignedPolySystem pin = pinned(
        UV, eqs, {{1, 1, 1}, {2, 2, p.sg[0]}, {3, 3, p.sg[1]}, {4, 4, p.sg[2]}},
        std::string("masses pinned to ") + p.name);
    for (const auto& s : cross(one(pin), vvset, &dropped)) all.push_back(s);
  }
  return empty_case(
      "thm63.subset4.sums", all, positive_region(UV),
      "The first two points solve the triple sums on {1,2,3} and {1,3,4} with "
      "the triangle relation on {1,2,4}; the last two solve the sums on "
      "{1,2,3} and {2,3,4}.",
      dropped);
}

// Subset 5: plain triangle over {1,3,4} against the apex-base union over
// {1,2,4}; the vanishing-sum exceptions join the consistency union directly.
Certificate case_thm63_subset5() {
  int dropped = 0;
  Systems all = cross({iv_u(1, 2, 3), tri3(1, 3, 4),
                       {vv_u(1, 2, 4), vv_u(2, 1, 4), vv_u(4, 1, 2)},
                       unite({dia12(), iv_u(1, 3, 4), iv_u(2, 3, 4)})},
                      &dropped);
  return empty_case("thm63.subset5", all, positive_region(UV), "", dropped);
}

// Zero total mass in normalized ratios with the body signs (+, +, -, -).
SignedPolySystem mass_sum_ppmm() {
  SignedPolySystem s;
  s.vars = UV;
  s.equations = {uc("1 + u2^2 - u3^2 - u4^2")};
  s.sign_products = {{1, 1, 1}, {2, 2, 1}, {3, 3, -1}, {4, 4, -1}};
  s.note = "vanishing total mass, body signs (+,+,-,-)";
  return s;
}

// Both pair splits on the first body against the vanishing total mass:
// sixteen sigma combinations over the positive ratios.
Systems pair_splits_m0(int* dropped) {
  return cross({vib(1, 3, 2, 4), vib(1, 4, 2, 3), one(mass_sum_ppmm())},
               dropped);
}

// One strict ordering of the three free ratios in the pair-split system.
// The hypothesis excludes every equality among {1, u2, u3, u4}, so the four
// admissible interleavings of 1 into the ordering become four charts in
// positive gap variables. Every excluded equality is then an open chart
// boundary: a candidate sitting on it is cut off by the region itself, never
// by a strict inequality that could bind exactly at the candidate.
Certificate case_thm81_ordering(const std::string& id, int hi, int mid,
                                int lo) {
  static const std::vector<std::string> GV{"g1", "g2", "g3"};
  auto gp = [&](const std::string& e) { return poly_expr(GV, e); };
  std::string uhi = "u" + std::to_string(hi);
  std::string umid = "u" + std::to_string(mid);
  std::string ulo = "u" + std::to_string(lo);

  struct Chart {
    std::map<std::string, Poly> images;
    std::vector<std::pair<Poly, int>> floors;  // keep the mapped ratios positive
    const char* why;
  };
  std::vector<Chart> charts;
  charts.push_back({{{ulo, gp("1 + g1")},
                     {umid, gp("1 + g1 + g2")},
                     {uhi, gp("1 + g1 + g2 + g3")}},
                    {},
                    "all ratios above 1"});
  charts.push_back({{{ulo, gp("1 - g1")},
                     {umid, gp("1 + g2")},
                     {uhi, gp("1 + g2 + g3")}},
                    {{gp("1 - g1"), 1}},
                    "smallest ratio below 1"});
  charts.push_back({{{ulo, gp("1 - g1 - g2")},
                     {umid, gp("1 - g1")},
                     {uhi, gp("1 + g3")}},
                    {{gp("1 - g1"), 1}, {gp("1 - g1 - g2"), 1}},
                    "two ratios below 1"});
  charts.push_back({{{ulo, gp("1 - g1 - g2 - g3")},
                     {umid, gp("1 - g1 - g2")},
                     {uhi, gp("1 - g1")}},
                    {{gp("1 - g1"), 1},
                     {gp("1 - g1 - g2"), 1},
                     {gp("1 - g1 - g2 - g3"), 1}},
                    "all ratios below 1"});

  int dropped = 0;
  Systems base = pair_splits_m0(&dropped);
  Systems all;
  for (const auto& ch : charts) {
    Systems mapped = map_all(base, ch.images, GV, ch.why);
    for (auto& s : mapped) {
      for (const auto& f : ch.floors) s.strict_inequalities.push_back(f);
      all.push_back(std::move(s));
    }
  }
  return empty_case(
      id, all, positive_region(GV),
      "Ordering " + uhi + " > " + umid + " > " + ulo +
          "; the interleavings of 1 into the ordering give four charts in "
          "positive gaps, so each excluded equality among the ratios and 1 "
          "is an open chart boundary.",
      dropped);
}

Certificate case_thm81_ordering1() {
  return case_thm81_ordering("thm81.ordering1", 2, 3, 4);
}
Certificate case_thm81_ordering2() {
  return case_thm81_ordering("thm81.ordering2", 3, 4, 2);
}
Certificate case_thm81_ordering3() {
  return case_thm81_ordering("thm81.ordering3", 3, 2, 4);
}

// The admissible degenerations of the pair-split system with zero total
// mass: equal first pair (u2 = 1) or equal second pair (u3 = u4). Pinning
// each and solving exactly recovers the exceptional mass families, all
// expressed through the unique positive root of
// (1 - a^3)^2 - (1 + a^3)^2 (2 - a^2)^3.
Certificate case_thm81_main() {
  int dropped = 0;
  Systems base = pair_splits_m0(&dropped);
  SignedPolySystem pin_a = pinned(UV, {uc("u2 - 1")}, {}, "equal first pair");
  SignedPolySystem pin_b = pinned(UV, {uc("u3 - u4")}, {}, "equal second pair");
  Systems all = unite({cross(one(pin_a), base, &dropped),
                       cross(one(pin_b), base, &dropped)});
  Certificate c = certify_empty("thm81.main", all, positive_region(UV));
  std::vector<SolutionRecord> unique;
  std::set<std::array<long long, 3>> seen;
  for (const auto& r : c.roots) {
    std::array<long long, 3> k{};
    for (int i = 2; i <= 4; ++i)
      k[size_t(i - 2)] =
          llround(r.values.at("u" + std::to_string(i)).approx() * 1e9);
    if (seen.insert(k).second) unique.push_back(r);
  }
  std::string extra =
      std::to_string(c.roots.size() - unique.size()) +
      " duplicate records merged. Sign-inconsistent branches dropped: " +
      std::to_string(dropped) + ".";
  c.roots = std::move(unique);
  c.note = c.note.empty() ? extra : c.note + " " + extra;
  return c;
}

// Collinear ordering x4 < x1 < x2 < x3 for the masses (1, 1, m3, -(2+m3)):
// the three cleared balance equations are each linear in x1; eliminating x1
// and then d13 leaves one nonzero polynomial whose degree in d14 certifies
// finiteness along this ordering.
Certificate case_thm82_collinear() {
  const std::vector<std::string> CV{"d13", "d14", "m3", "x1"};
  auto cp = [&](const std::string& e) { return poly_expr(CV, e); };
  auto sq = [](const Poly& p) { return p * p; };
  Poly d13 = cp("d13"), d14 = cp("d14"), m3 = cp("m3"), x1 = cp("x1");
  Poly m4a = cp("2 + m3");  // -m4, the absolute fourth mass
  Poly d12 = cp("-(m3*d13) - (2 + m3)*d14");
  Poly d23 = d13 - d12;
  Poly d24 = d12 + d14;
  Poly d34 = d13 + d14;
  // x1 + 1/d12^2 + m3/d13^2 + (2+m3)/d14^2, cleared by d12^2 d13^2 d14^2
  Poly p1 = x1 * sq(d12) * sq(d13) * sq(d14) + sq(d13) * sq(d14) +
            m3 * sq(d12) * sq(d14) + m4a * sq(d12) * sq(d13);
  // (x1+d12) - 1/d12^2 + m3/d23^2 + (2+m3)/d24^2, cleared by d12^2 d23^2 d24^2
  Poly p2 = (x1 + d12) * sq(d12) * sq(d23) * sq(d24) - sq(d23) * sq(d24) +
            m3 * sq(d12) * sq(d24) + m4a * sq(d12) * sq(d23);
  // (x1+d13) - 1/d13^2 - 1/d23^2 + (2+m3)/d34^2, cleared by d13^2 d23^2 d34^2
  Poly p3 = (x1 + d13) * sq(d13) * sq(d23) * sq(d34) - sq(d23) * sq(d34) -
            sq(d13) * sq(d34) + m4a * sq(d13) * sq(d23);

  Certificate c;
  c.case_id = "thm82.collinear";
  c.verdict = Verdict::DegreeReport;
  trace_define(p1, "cleared balance equation of the first body", &c.trace);
  trace_define(p2, "cleared balance equation of the second body", &c.trace);
  trace_define(p3, "cleared balance equation of the third body", &c.trace);
  Poly r1 = trace_resultant(p1, p2, "x1", &c.trace);
  Poly r2 = trace_resultant(p1, p3, "x1", &c.trace);
  Poly r3 = trace_resultant(r1, r2, "d13", &c.trace);
  int deg = r3.degree_in("d14");
  c.degree = deg;
  c.reference_degree = 135;
  trace_note("degree", "d14", {poly_digest(r3)}, std::to_string(deg),
             "eliminant of the collinear ordering: computed " +
                 std::to_string(deg) + ", reference 135, nonzero " +
                 (r3.is_zero() ? std::string("no") : std::string("yes")),
             &c.trace);
  c.note =
      "Distances d12, d23, d24, d34 are linear in d13, d14 through the "
      "center-of-mass relation; the third mass stays symbolic.";
  return c;
}

// Planar configurations with two equal-and-opposite pairs: four of the six
// distances coincide, the remaining two satisfy a circle relation and a
// cleared force balance. Exactly two positive solutions.
Certificate case_thm82_planar1() {
  const std::vector<std::string> PV{"t", "w"};
  SignedPolySystem s;
  s.vars = PV;
  s.equations = {poly_expr(PV, "w^2 + t^2 - 4"),
                 poly_expr(PV, "t^3 + w^3 - 2*w^3*t^3")};
  s.note = "four equal distances normalized to 1; t, w the free diagonals";
  return certify_empty("thm82.planar1", one(s), positive_region(PV));
}

// Planar configurations for the one-parameter exceptional family: the
// symmetry r13 = r23, r14 = r24 and the normalization r34 = 1 reduce the
// balance to three cleared relations joined with the defining quartic of
// the mass parameter.
Certificate case_thm82_planar2() {
  const std::vector<std::string> PV{"a", "r", "u", "v"};
  SignedPolySystem s;
  s.vars = PV;
  s.equations = {
      poly_expr(PV, "u^2 - 4*r^2 + a^4"),
      poly_expr(PV, "v^2 - r^2 - 1 + a^2"),
      poly_expr(PV, "v^3*r^3 - u^3*r^3 - u^3*v^3 + u^3*v^3*r^3"),
      poly_expr(PV, "(1 - a^3)^2 - (1 + a^3)^2*(2 - a^2)^3")};
  s.note =
      "u = r12, v = r13 = r23, r = r14 = r24, r34 = 1; a the positive mass "
      "parameter root";
  return certify_empty("thm82.planar2", one(s), positive_region(PV));
}

Certificate case_thm81_monotone1() {
  std::vector<std::string> tv{"t"};
  Certificate c =
      certify_monotone(poly_expr(tv, "t^3 - t^6"), poly_expr(tv, "1 + t^3"),
                       "t", VarRange{Rat(1), std::nullopt});
  c.case_id = "thm81.monotone1";
  return c;
}

Certificate case_thm81_monotone2() {
  std::vector<std::string> tv{"t"};
  Certificate c =
      certify_monotone(poly_expr(tv, "1 + t^3"), poly_expr(tv, "1 - t^3"),
                       "t", VarRange{Rat(0), Rat(1)});
  c.case_id = "thm81.monotone2";
  return c;
}

// ---------------------------------------------------------------------------
// Registry.

struct CaseEntry {
  CaseInfo info;
  std::function<Certificate()> fn;
};

const std::vector<CaseEntry>& case_table() {
  static const std::vector<CaseEntry> table = {
      {{"thm61.case1", Verdict::Empty,
        "equal masses against the triangle union over {1,2,3}"},
       case_thm61_1},
      {{"thm61.case2", Verdict::Empty,
        "two equal pairs against the triangle union and both pair splits"},
       case_thm61_2},
      {{"thm61.case3.sub1", Verdict::Empty,
        "one equal diagonal product against both remaining pair splits"},
       case_thm61_3_1},
      {{"thm61.case3.sub2", Verdict::Empty,
        "one equal diagonal product, matching pair split, two triangle unions"},
       case_thm61_3_2},
      {{"thm61.case3.sub2.degrees", Verdict::DegreeReport,
        "total degrees of the three branch products after substitution"},
       case_thm61_3_2_degrees},
      {{"thm61.case3.sub3", Verdict::Empty,
        "one equal diagonal product, matching pair split, three triangle unions"},
       case_thm61_3_3},
      {{"thm61.case4.sub1", Verdict::Empty,
        "no diagonal degeneration: triangle unions over {1,2,3}, {1,2,4}, {1,3,4}"},
       case_thm61_4_1},
      {{"thm61.case4.sub2", Verdict::Empty,
        "no diagonal degeneration: triangle unions over {1,2,3}, {1,2,4}, {2,3,4}"},
       case_thm61_4_2},
      {{"thm61.case4.sub3", Verdict::Empty,
        "no diagonal degeneration: triangle unions over {1,2,3}, {1,3,4}, {2,3,4}"},
       case_thm61_4_3},
      {{"thm62.case1", Verdict::Empty,
        "unit masses against the cube-root cycle sum"},
       case_thm62_1},
      {{"thm62.case2", Verdict::Empty,
        "equal pairs (1,1,s,s) against the cube-root pair relation"},
       case_thm62_2},
      {{"thm62.case3.sub1", Verdict::Empty,
        "alternating signs: reduced pair relation is positive"},
       case_thm62_3_1},
      {{"thm62.case3.sub2", Verdict::Empty,
        "equal products on [13,24] force zero total mass"},
       case_thm62_3_2},
      {{"thm62.case4.sub1", Verdict::Empty,
        "mixed pairs, both ratios below 1"},
       case_thm62_4_1},
      {{"thm62.case4.sub2", Verdict::Empty,
        "mixed pairs, ratios split around 1"},
       case_thm62_4_2},
      {{"thm63.subsets12", Verdict::Solutions,
        "even and mixed subsets of the double-triangle context"},
       case_thm63_subsets12},
      {{"thm63.subsets12.checks", Verdict::Empty,
        "recovered mass points against the diagram-consistency unions"},
       case_thm63_subsets12_checks},
      {{"thm63.subset3", Verdict::Solutions,
        "both plain triangles: one-variable quartic reductions"},
       case_thm63_subset3},
      {{"thm63.subset3.checks", Verdict::Empty,
        "double-triangle combinations against the consistency unions"},
       case_thm63_subset3_checks},
      {{"thm63.subset4", Verdict::Empty,
        "triangle over {1,2,4} against the apex-base union over {1,3,4}"},
       case_thm63_subset4},
      {{"thm63.subset4.sums", Verdict::Empty,
        "vanishing-sum mass points against the apex-base union"},
       case_thm63_subset4_sums},
      {{"thm63.subset5", Verdict::Empty,
        "triangle over {1,3,4} against the apex-base union over {1,2,4}"},
       case_thm63_subset5},
      {{"thm64.case1", Verdict::Empty,
        "zero-moment split [13,24] against the triple-sum possibilities"},
       case_thm64_1},
      {{"thm64.case1.products", Verdict::Empty,
        "zero-moment split [13,24] against equal diagonal products"},
       case_thm64_1_products},
      {{"thm64.case2", Verdict::Empty,
        "parameterized masses (1, -t/(1+t), -1/(1+t), t)"},
       case_thm64_2},
      {{"thm64.final", Verdict::Empty,
        "triple-equal solutions against their forced zero triangle sums"},
       case_thm64_final},
      {{"lemma72", Verdict::Empty,
        "two vanishing triple sums against the {1,3,4} degenerations"},
       case_lemma72},
      {{"thm81.monotone1", Verdict::Monotone,
        "t^3(1-t^3)/(1+t^3) is strictly monotone on (1, oo)"},
       case_thm81_monotone1},
      {{"thm81.monotone2", Verdict::Monotone,
        "(1+t^3)/(1-t^3) is strictly monotone on (0, 1)"},
       case_thm81_monotone2},
      {{"thm81.ordering1", Verdict::Empty,
        "pair splits with zero total mass, ordering u2 > u3 > u4"},
       case_thm81_ordering1},
      {{"thm81.ordering2", Verdict::Empty,
        "pair splits with zero total mass, ordering u3 > u4 > u2"},
       case_thm81_ordering2},
      {{"thm81.ordering3", Verdict::Empty,
        "pair splits with zero total mass, ordering u3 > u2 > u4"},
       case_thm81_ordering3},
      {{"thm81.main", Verdict::Solutions,
        "equal-pair degenerations recover the exceptional mass families"},
       case_thm81_main},
      {{"thm82.collinear", Verdict::DegreeReport,
        "collinear ordering for the one-parameter family: eliminant degree"},
       case_thm82_collinear},
      {{"thm82.planar1", Verdict::Solutions,
        "planar two-equal-pair configurations: two positive solutions"},
       case_thm82_planar1},
      {{"thm82.planar2", Verdict::Solutions,
        "planar one-parameter family under the forced symmetry"},
       case_thm82_planar2},
  };
  return table;
}

}  // namespace

const std::vector<CaseInfo>& registered_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> v;
    for (const auto& e : case_table()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

Certificate run_case(const std::string& id) {
  for (const auto& e : case_table())
    if (e.info.id == id) return e.fn();
  throw std::invalid_argument("unknown case id: " + id);
}

}  // namespace cc4
