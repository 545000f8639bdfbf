#include "cc4/constraints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cc4/resultant.hpp"

namespace cc4 {

namespace {

const std::vector<std::string> MV{"m1", "m2", "m3", "m4"};
const std::vector<std::string> UV{"u2", "u3", "u4"};

Poly mv(int i) { return Poly::variable(MV, "m" + std::to_string(i)); }

Poly uv(int i) {
  if (i == 1) return Poly::constant(UV, 1);
  return Poly::variable(UV, "u" + std::to_string(i));
}

Poly upow(int i, unsigned e) { return uv(i).pow(e); }

Poly msum(int i, int j) { return mv(i) + mv(j); }

enum class Shape { Pairs, Triangle, Pointed, Plain };

Shape shape_of(Family f) {
  switch (f) {
    case Family::V_III:
    case Family::V_IV:
      return Shape::Triangle;
    case Family::V_V:
      return Shape::Pointed;
    case Family::V_m0:
      return Shape::Plain;
    default:
      return Shape::Pairs;
  }
}

void check_indices(const std::vector<int>& idx, bool full) {
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("labeling indices must be distinct");
  for (int v : s)
    if (v < 1 || v > 4) throw std::invalid_argument("labeling index out of range");
  if (full && s.size() != 4) throw std::invalid_argument("labeling must use all four bodies");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::V_IA: return "V_IA";
    case Family::V_IB: return "V_IB";
    case Family::V_I0: return "V_I0";
    case Family::I_I: return "I_I";
    case Family::V_II: return "V_II";
    case Family::V_II0: return "V_II0";
    case Family::I_II: return "I_II";
    case Family::V_III: return "V_III";
    case Family::V_IV: return "V_IV";
    case Family::V_V: return "V_V";
    case Family::V_m0: return "V_m0";
    case Family::V_IA0: return "V_IA0";
    case Family::V_ZW2: return "V_ZW2";
  }
  return "?";
}

ConstraintSetId ConstraintSetId::pair_sets(Family f, int i, int j, int p, int k) {
  if (shape_of(f) != Shape::Pairs)
    throw std::invalid_argument(family_name(f) + " does not take a pair labeling");
  check_indices({i, j, p, k}, true);
  if (i > j) std::swap(i, j);
  if (p > k) std::swap(p, k);
  if (p < i) {
    std::swap(i, p);
    std::swap(j, k);
  }
  return {f, {i, j, p, k}};
}

ConstraintSetId ConstraintSetId::triangle(Family f, int i, int j, int k) {
  if (shape_of(f) != Shape::Triangle)
    throw std::invalid_argument(family_name(f) + " does not take a triangle labeling");
  check_indices({i, j, k}, false);
  std::vector<int> t{i, j, k};
  std::sort(t.begin(), t.end());
  return {f, t};
}

ConstraintSetId ConstraintSetId::pointed(Family f, int apex, int j, int k) {
  if (shape_of(f) != Shape::Pointed)
    throw std::invalid_argument(family_name(f) + " does not take a pointed labeling");
  check_indices({apex, j, k}, false);
  if (j > k) std::swap(j, k);
  return {f, {apex, j, k}};
}

ConstraintSetId ConstraintSetId::plain(Family f) {
  if (shape_of(f) != Shape::Plain)
    throw std::invalid_argument(family_name(f) + " requires a labeling");
  return {f, {}};
}

std::string ConstraintSetId::str() const {
  std::string s = family_name(family);
  switch (shape_of(family)) {
    case Shape::Plain:
      return s;
    case Shape::Pairs:
      return s + "[" + std::to_string(labeling[0]) + std::to_string(labeling[1]) + "," +
             std::to_string(labeling[2]) + std::to_string(labeling[3]) + "]";
    case Shape::Triangle:
      return s + "[" + std::to_string(labeling[0]) + std::to_string(labeling[1]) +
             std::to_string(labeling[2]) + "]";
    case Shape::Pointed:
      return s + "[" + std::to_string(labeling[0]) + "," + std::to_string(labeling[1]) +
             std::to_string(labeling[2]) + "]";
  }
  return s;
}

std::string SignedPolySystem::str() const {
  std::ostringstream os;
  for (size_t n = 0; n < equations.size(); ++n)
    os << (n ? "; " : "") << equations[n].str() << " = 0";
  for (const auto& p : strict_negations) os << "; " << p.str() << " != 0";
  for (const auto& [p, s] : strict_inequalities)
    os << "; " << p.str() << (s > 0 ? " > 0" : " < 0");
  for (const auto& sp : sign_products) {
    if (sp[0] == sp[1])
      os << "; sign(m" << sp[0] << ") = " << sp[2];
    else
      os << "; sign(m" << sp[0] << "*m" << sp[1] << ") = " << sp[2];
  }
  if (!sigma_branch.empty()) {
    os << " [branch";
    for (int b : sigma_branch) os << " " << (b > 0 ? "+" : "-");
    os << "]";
  }
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> other_pairs(int i, int j, int p, int k) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      if ((a == i && b == j) || (a == p && b == k)) continue;
      out.push_back({a, b});
    }
  return out;
}

std::string cvar(int a, int b) { return "c" + std::to_string(a) + std::to_string(b); }

// Cube-root sum over the four cycle edges; the real cube root makes each
// cubic in its auxiliary have exactly one real solution, so no branches.
SignedPolySystem cycle_cbrt_system(int i, int j, int p, int k) {
  auto edges = other_pairs(i, j, p, k);
  std::vector<std::string> vars = MV;
  for (auto& [a, b] : edges) vars.push_back(cvar(a, b));
  SignedPolySystem sys;
  sys.vars = vars;
  Poly total(vars);
  for (auto& [a, b] : edges) {
    Poly c = Poly::variable(vars, cvar(a, b));
    Poly ma = Poly::variable(vars, "m" + std::to_string(a));
    Poly mb = Poly::variable(vars, "m" + std::to_string(b));
    sys.equations.push_back(c.pow(3) * (ma + mb) - (ma * mb).pow(3));
    sys.strict_negations.push_back(ma + mb);
    total = total + c;
  }
  sys.equations.push_back(total);
  sys.note = "auxiliaries are the real cube roots of m_a^3 m_b^3 / (m_a+m_b)";
  return sys;
}

}  // namespace

std::vector<SignedPolySystem> constraint_system(const ConstraintSetId& id) {
  const auto& L = id.labeling;
  std::vector<SignedPolySystem> out;
  switch (id.family) {
    case Family::V_IA: {
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {mv(L[0]) - mv(L[1]), mv(L[2]) - mv(L[3])};
      out.push_back(std::move(s));
      break;
    }
    case Family::V_IA0: {
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {mv(L[0]) - mv(L[1]), mv(L[2]) - mv(L[3]), msum(L[0], L[2])};
      out.push_back(std::move(s));
      break;
    }
    case Family::V_ZW2: {
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {msum(L[0], L[1]), msum(L[2], L[3]),
                     mv(L[0]) * mv(L[0]) - mv(L[2]) * mv(L[2])};
      out.push_back(std::move(s));
      break;
    }
    case Family::V_m0: {
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {mv(1) + mv(2) + mv(3) + mv(4)};
      out.push_back(std::move(s));
      break;
    }
    case Family::V_II: {
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {mv(L[0]) * mv(L[1]) - mv(L[2]) * mv(L[3])};
      for (auto& [a, b] : other_pairs(L[0], L[1], L[2], L[3]))
        s.strict_negations.push_back(msum(a, b));
      out.push_back(std::move(s));
      break;
    }
    case Family::I_I: {
      int i = L[0], j = L[1], p = L[2], k = L[3];
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {(mv(i) * mv(j)).pow(3) * msum(p, k) +
                     (mv(p) * mv(k)).pow(3) * msum(i, j)};
      s.strict_negations = {msum(i, j), msum(p, k)};
      s.note = "two-term cube-root sum cubed; the real cube root leaves one branch";
      out.push_back(std::move(s));
      break;
    }
    case Family::I_II: {
      out.push_back(cycle_cbrt_system(L[0], L[1], L[2], L[3]));
      break;
    }
    case Family::V_II0: {
      SignedPolySystem s = cycle_cbrt_system(L[0], L[1], L[2], L[3]);
      Poly prod = Poly::variable(s.vars, "m" + std::to_string(L[0])) *
                      Poly::variable(s.vars, "m" + std::to_string(L[1])) -
                  Poly::variable(s.vars, "m" + std::to_string(L[2])) *
                      Poly::variable(s.vars, "m" + std::to_string(L[3]));
      s.equations.insert(s.equations.begin(), prod);
      out.push_back(std::move(s));
      break;
    }
    case Family::V_IV: {
      int i = L[0], j = L[1], k = L[2];
      for (int tj : {1, -1})
        for (int tk : {1, -1}) {
          if (tj == 1 && tk == 1) continue;  // positive sum never vanishes
          SignedPolySystem s;
          s.vars = UV;
          s.equations = {upow(i, 2) + upow(j, 2) * Rat(tj) + upow(k, 2) * Rat(tk)};
          s.sign_products = {{i, j, tj}, {i, k, tk}};
          s.sigma_branch = {tj, tk};
          out.push_back(std::move(s));
        }
      break;
    }
    case Family::V_III: {
      int i = L[0], j = L[1], k = L[2];
      for (int tj : {1, -1})
        for (int tk : {1, -1}) {
          SignedPolySystem s;
          s.vars = UV;
          s.equations = {uv(j) * uv(k) + uv(i) * uv(k) * Rat(tj) + uv(i) * uv(j) * Rat(tk)};
          s.sigma_branch = {tj, tk};
          if (tj == 1 && tk == 1) s.note = "all-plus branch; empty over positive u, retained";
          out.push_back(std::move(s));
        }
      break;
    }
    case Family::V_V: {
      int i = L[0], j = L[1], k = L[2];
      SignedPolySystem s;
      s.vars = MV;
      s.equations = {mv(i).pow(2) * msum(j, k).pow(4) - mv(j).pow(3) * mv(k).pow(3)};
      s.note = "squared form; forces m_j m_k > 0 on its own";
      out.push_back(std::move(s));
      break;
    }
    case Family::V_IB:
    case Family::V_I0: {
      int i = L[0], j = L[1], p = L[2], k = L[3];
      if (i != 1) throw std::logic_error("canonical pair labeling must lead with body 1");
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          SignedPolySystem s;
          s.vars = UV;
          Poly eq = (upow(p, 3) + upow(k, 3) * Rat(s1)) +
                    upow(j, 3) * Rat(s2) * (upow(p, 3) - upow(k, 3) * Rat(s1));
          s.equations = {eq};
          s.strict_negations = {upow(j, 2) - Poly::constant(UV, 1),
                                upow(p, 2) - upow(k, 2)};
          s.sign_products = {{i, j, -1}, {p, k, -1}};
          s.sigma_branch = {s1, s2};
          if (id.family == Family::V_I0) {
            for (int sp : {1, -1}) {
              SignedPolySystem t = s;
              // Moment extra with sign(m_i) normalized positive.
              t.equations.push_back(upow(j, 6) * Rat(sp) * (upow(p, 2) - upow(k, 2)) +
                                    upow(p, 6) * upow(k, 6) *
                                        (Poly::constant(UV, 1) - upow(j, 2)));
              t.sign_products.push_back({i, p, sp});
              t.sigma_branch.push_back(sp);
              out.push_back(std::move(t));
            }
          } else {
            out.push_back(std::move(s));
          }
        }
      break;
    }
  }
  return out;
}

int radical_sign(const Poly& expr, const std::vector<RadicalDef>& defs) {
  if (expr.is_zero()) return 0;
  if (expr.is_constant()) return sign(expr.constant_value());

  auto box_at = [&](int bits) {
    std::map<std::string, RatInterval> box;
    for (const auto& d : defs) box[d.var] = root_enclosure(d.radicand, d.degree, bits);
    return box;
  };
  for (int bits : {48, 128}) {
    int s = eval_interval(expr, box_at(bits)).definite_sign();
    if (s != 0) return s;
  }

  // Annihilating polynomial of the value: eliminate each radical variable
  // from t - expr against its defining power relation.
  std::vector<std::string> vars;
  for (const auto& d : defs) vars.push_back(d.var);
  vars.push_back("t");
  Poly q = Poly::variable(vars, "t") - lift(expr, vars);
  for (const auto& d : defs) {
    if (q.degree_in(d.var) <= 0) continue;
    Poly rel = Poly::variable(vars, d.var).pow(d.degree) -
               Poly::constant(vars, d.radicand);
    q = resultant(q, rel, d.var);
  }
  UPoly a = upsquarefree(upoly_from(q, "t"));
  bool zero_is_root = sign(upeval(a, Rat(0))) == 0;
  UPoly b = a;
  if (zero_is_root) b = updivexact(a, UPoly{Rat(0), Rat(1)});

  for (int bits = 192; bits <= (1 << 14); bits *= 2) {
    RatInterval ev = eval_interval(expr, box_at(bits));
    int s = ev.definite_sign();
    if (s != 0) return s;
    // The value is a root of a; if no nonzero root of a lies in the
    // enclosure, the value must be the root 0.
    if (zero_is_root && updeg(b) >= 1 && sturm_count(b, ev.lo, ev.hi) == 0 &&
        sign(upeval(b, ev.lo)) != 0 && sign(upeval(b, ev.hi)) != 0)
      return 0;
    if (zero_is_root && updeg(b) == 0) return 0;
  }
  throw std::runtime_error("radical_sign: undecided at precision cap");
}

namespace {

// Branch evaluation over exact u = sqrt coordinates for rational quadruples.
bool u_branch_holds(const SignedPolySystem& s, const MuSigma& ms) {
  for (const auto& sp : s.sign_products) {
    int prod = sp[0] == sp[1] ? ms.sig[sp[0] - 1] : ms.sig[sp[0] - 1] * ms.sig[sp[1] - 1];
    if (prod != sp[2]) return false;
  }
  std::vector<RadicalDef> defs;
  for (int i = 2; i <= 4; ++i)
    defs.push_back({"u" + std::to_string(i), ms.musq[i - 1].rational(), 2});
  for (const auto& eq : s.equations)
    if (radical_sign(eq, defs) != 0) return false;
  for (const auto& p : s.strict_negations)
    if (radical_sign(p, defs) == 0) return false;
  for (const auto& [p, sg] : s.strict_inequalities)
    if (radical_sign(p, defs) != sg) return false;
  return true;
}

bool m_branch_holds(const SignedPolySystem& s, const MassQuadruple& q) {
  std::map<std::string, Rat> pt;
  for (int i = 0; i < 4; ++i) pt["m" + std::to_string(i + 1)] = q.m[i].rational();
  for (const auto& sp : s.sign_products) {
    int prod = sp[0] == sp[1] ? q.m[sp[0] - 1].sgn() : q.m[sp[0] - 1].sgn() * q.m[sp[1] - 1].sgn();
    if (prod != sp[2]) return false;
  }
  bool has_aux = s.vars.size() > 4;
  if (!has_aux) {
    for (const auto& eq : s.equations)
      if (sign(eq.eval(pt)) != 0) return false;
    for (const auto& p : s.strict_negations)
      if (sign(p.eval(pt)) == 0) return false;
    for (const auto& [p, sg] : s.strict_inequalities)
      if (sign(p.eval(pt)) != sg) return false;
    return true;
  }
  // Cube-root cycle system: eliminate the auxiliaries exactly. Each c with
  // defining c^3 (ma+mb) = (ma mb)^3 is (ma mb) * y^2 / (ma+mb) for
  // y = cbrt(ma+mb); the sum condition becomes one radical sign test.
  std::vector<RadicalDef> defs;
  Poly sum_expr;
  std::vector<std::string> yvars;
  std::vector<Rat> coeffs;
  for (const auto& eq : s.equations) {
    // Recognize the plain polynomial equations (no auxiliary variable).
    bool aux_eq = false;
    for (size_t v = 4; v < s.vars.size(); ++v)
      if (eq.degree_in(s.vars[v]) > 0) aux_eq = true;
    if (!aux_eq) {
      if (sign(eq.eval(pt)) != 0) return false;
    }
  }
  for (const auto& p : s.strict_negations)
    if (sign(p.eval(pt)) == 0) return false;
  for (size_t v = 4; v < s.vars.size(); ++v) {
    const std::string& cv = s.vars[v];
    int a = cv[1] - '0', b = cv[2] - '0';
    Rat ma = q.m[a - 1].rational(), mb = q.m[b - 1].rational();
    if (sign(ma + mb) == 0) return false;
    defs.push_back({"y" + cv, ma + mb, 3});
    yvars.push_back("y" + cv);
    coeffs.push_back(ma * mb / (ma + mb));
  }
  Poly total(yvars);
  for (size_t n = 0; n < yvars.size(); ++n)
    total = total + Poly::variable(yvars, yvars[n]).pow(2) * coeffs[n];
  return radical_sign(total, defs) == 0;
}

RatInterval iabs(const RatInterval& x) {
  if (x.contains_zero()) return {Rat(0), std::max(rat_abs(x.lo), rat_abs(x.hi))};
  Rat a = rat_abs(x.lo), b = rat_abs(x.hi);
  return {std::min(a, b), std::max(a, b)};
}

Membership interval_membership(const ConstraintSetId& id, const MassQuadruple& q,
                               int max_bits) {
  auto systems = constraint_system(id);
  for (int bits = 64; bits <= max_bits; bits *= 2) {
    Rat w = pow2(-bits);
    auto mbox = q.box(w);
    // u coordinates: sqrt(|m_i| / |m_1|).
    std::map<std::string, RatInterval> ubox;
    RatInterval am1 = iabs(mbox["m1"]);
    if (sign(am1.lo) <= 0) continue;
    for (int i = 2; i <= 4; ++i) {
      RatInterval ami = iabs(mbox["m" + std::to_string(i)]);
      RatInterval ratio{ami.lo / am1.hi, ami.hi / am1.lo};
      ubox["u" + std::to_string(i)] = iroot(ratio, 2, bits);
    }
    bool any_open = false;
    for (const auto& s : systems) {
      bool violated = false;
      for (const auto& sp : s.sign_products) {
        int prod = sp[0] == sp[1] ? q.m[sp[0] - 1].sgn()
                                  : q.m[sp[0] - 1].sgn() * q.m[sp[1] - 1].sgn();
        if (prod != sp[2]) violated = true;
      }
      if (violated) continue;
      if (s.vars.size() > 4) {
        any_open = true;  // auxiliary cube roots: interval path not wired up
        continue;
      }
      const auto& box = s.vars == UV ? ubox : mbox;
      for (const auto& eq : s.equations)
        if (eval_interval(eq, box).definite_sign() != 0) violated = true;
      for (const auto& [p, sg] : s.strict_inequalities)
        if (!violated && eval_interval(p, box).definite_sign() == -sg) violated = true;
      if (!violated) any_open = true;
    }
    if (!any_open) return Membership::Out;
  }
  return Membership::Boundary;
}

}  // namespace

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::Boundary: return "Boundary";
  }
  return "?";
}

Membership membership(const ConstraintSetId& id, const MassQuadruple& q, int max_bits) {
  if (!q.all_nonzero()) throw std::invalid_argument("membership: zero mass");
  if (q.all_rational()) {
    auto systems = constraint_system(id);
    MuSigma ms;
    bool need_u = false;
    for (const auto& s : systems)
      if (s.vars == UV) need_u = true;
    if (need_u) ms = to_mu_sigma(q);
    for (const auto& s : systems) {
      bool holds = s.vars == UV ? u_branch_holds(s, ms) : m_branch_holds(s, q);
      if (holds) return Membership::In;
    }
    return Membership::Out;
  }
  return interval_membership(id, q, max_bits);
}

std::string diagram_class_name(DiagramClass c) {
  switch (c) {
    case DiagramClass::I: return "I";
    case DiagramClass::II: return "II";
    case DiagramClass::III: return "III";
    case DiagramClass::IV: return "IV";
    case DiagramClass::V: return "V";
    case DiagramClass::VI: return "VI";
    case DiagramClass::I0: return "I0";
    case DiagramClass::II0: return "II0";
    case DiagramClass::ZW2_PAR: return "ZW2_PAR";
    case DiagramClass::ZW2_QUAD: return "ZW2_QUAD";
    case DiagramClass::ZW2_QUAD_CIRC: return "ZW2_QUAD_CIRC";
    case DiagramClass::FE: return "FE";
    case DiagramClass::FE_HALF: return "FE_HALF";
    case DiagramClass::FE_FULL: return "FE_FULL";
  }
  return "?";
}

namespace {

std::string rkey(int a, int b) {
  if (a > b) std::swap(a, b);
  return "r" + std::to_string(a) + std::to_string(b);
}

int missing_index(const std::vector<int>& t) {
  for (int v = 1; v <= 4; ++v)
    if (std::find(t.begin(), t.end(), v) == t.end()) return v;
  throw std::logic_error("triangle labeling uses all bodies");
}

}  // namespace

DiagramConstraints diagram_constraints(DiagramClass c, const std::vector<int>& labeling,
                                       bool total_mass_zero) {
  bool zero_class = !(c == DiagramClass::I || c == DiagramClass::II ||
                      c == DiagramClass::III || c == DiagramClass::IV ||
                      c == DiagramClass::V || c == DiagramClass::VI);
  if (zero_class != total_mass_zero && c != DiagramClass::VI)
    throw std::invalid_argument("diagram class does not match the total-mass flag");

  DiagramConstraints out;
  auto pair_orders = [&](int i, int j, int p, int k, const std::string& near,
                         const std::string& far) {
    out.distance_orders[rkey(i, j)] = near;
    out.distance_orders[rkey(p, k)] = near;
    for (auto& [a, b] : other_pairs(std::min(i, j), std::max(i, j), std::min(p, k),
                                    std::max(p, k)))
      out.distance_orders[rkey(a, b)] = far;
  };

  switch (c) {
    case DiagramClass::I:
    case DiagramClass::I0: {
      auto id = ConstraintSetId::pair_sets(Family::V_IB, labeling[0], labeling[1],
                                           labeling[2], labeling[3]);
      const auto& L = id.labeling;
      if (c == DiagramClass::I) {
        out.mass_sets = {ConstraintSetId::pair_sets(Family::V_IA, L[0], L[1], L[2], L[3]), id};
        out.moment_zero_extra = {
            ConstraintSetId::pair_sets(Family::I_I, L[0], L[1], L[2], L[3]),
            ConstraintSetId::pair_sets(Family::V_I0, L[0], L[1], L[2], L[3])};
      } else {
        out.mass_sets = {ConstraintSetId::pair_sets(Family::V_IA0, L[0], L[1], L[2], L[3]), id};
      }
      pair_orders(L[0], L[1], L[2], L[3], "r^3 ~ pair mass sum, finite", "~eps^-2");
      break;
    }
    case DiagramClass::II:
    case DiagramClass::II0: {
      auto id = ConstraintSetId::pair_sets(Family::V_II, labeling[0], labeling[1],
                                           labeling[2], labeling[3]);
      const auto& L = id.labeling;
      out.mass_sets = {id};
      if (c == DiagramClass::II)
        out.moment_zero_extra = {
            ConstraintSetId::pair_sets(Family::I_II, L[0], L[1], L[2], L[3]),
            ConstraintSetId::pair_sets(Family::V_II0, L[0], L[1], L[2], L[3])};
      else
        for (auto& [a, b] : other_pairs(L[0], L[1], L[2], L[3]))
          out.forced_zero_sums.push_back({a, b});
      // The labeled pairs are the diagonals; the cycle edges stay finite.
      out.distance_orders[rkey(L[0], L[1])] = "~eps^-2";
      out.distance_orders[rkey(L[2], L[3])] = "~eps^-2";
      for (auto& [a, b] : other_pairs(L[0], L[1], L[2], L[3]))
        out.distance_orders[rkey(a, b)] = "r^3 ~ pair mass sum, finite";
      break;
    }
    case DiagramClass::III:
    case DiagramClass::IV: {
      Family f = c == DiagramClass::III ? Family::V_III : Family::V_IV;
      auto id = ConstraintSetId::triangle(f, labeling[0], labeling[1], labeling[2]);
      out.mass_sets = {id};
      int l = missing_index(id.labeling);
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b)
          out.distance_orders[rkey(id.labeling[a], id.labeling[b])] = "~eps";
      for (int v : id.labeling)
        out.distance_orders[rkey(v, l)] =
            c == DiagramClass::III ? "between eps and the global scale" : "~eps^-2";
      if (c == DiagramClass::III)
        out.note = "spoke orders split into subcases; only the mass set is shared";
      break;
    }
    case DiagramClass::V: {
      auto id = ConstraintSetId::pointed(Family::V_V, labeling[0], labeling[1], labeling[2]);
      out.mass_sets = {id};
      int apex = id.labeling[0];
      std::vector<int> tri{id.labeling[0], id.labeling[1], id.labeling[2]};
      int l = missing_index(tri);
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b) out.distance_orders[rkey(tri[a], tri[b])] = "~eps";
      for (int v : tri)
        out.distance_orders[rkey(v, l)] = v == apex ? "~1" : "~eps^-1/2";
      break;
    }
    case DiagramClass::VI:
    case DiagramClass::FE:
    case DiagramClass::FE_HALF:
    case DiagramClass::FE_FULL: {
      for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) out.distance_orders[rkey(a, b)] = "~eps";
      if (c == DiagramClass::VI || c == DiagramClass::FE)
        out.note = "no mass polynomial; occurs only where the moment of inertia vanishes";
      else
        out.forced_zero_sums = {{1, 2, 3, 4}};
      break;
    }
    case DiagramClass::ZW2_PAR:
    case DiagramClass::ZW2_QUAD:
    case DiagramClass::ZW2_QUAD_CIRC: {
      auto id = ConstraintSetId::pair_sets(Family::V_ZW2, labeling[0], labeling[1],
                                           labeling[2], labeling[3]);
      const auto& L = id.labeling;
      out.mass_sets = {id};
      out.forced_zero_sums = {{L[0], L[1]}, {L[2], L[3]}};
      pair_orders(L[0], L[1], L[2], L[3], "~eps",
                  c == DiagramClass::ZW2_PAR ? "~eps^-2" : "finite");
      break;
    }
    default:
      throw std::logic_error("unhandled diagram class");
  }
  return out;
}

}  // namespace cc4
