#include "cc4/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cc4/interval.hpp"
#include "cc4/resultant.hpp"
#include "cc4/sturm.hpp"

namespace cc4 {

namespace {

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Polynomials travel through traces as "v1,v2|canonical text" so a verifier
// can rebuild them without out-of-band context.
std::string encode_poly(const Poly& p) { return join(p.vars, ',') + "|" + p.str(); }

Poly decode_poly(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad poly encoding");
  auto vars = split(s.substr(0, bar), ',');
  if (vars.size() == 1 && vars[0].empty()) vars.clear();
  return poly_parse(vars, s.substr(bar + 1));
}

uint64_t put_poly(std::vector<TraceStep>* tr, const std::string& op,
                  const std::string& var, std::vector<uint64_t> operands,
                  const Poly& result, const std::string& detail = "") {
  TraceStep s;
  s.op = op;
  s.var = var;
  s.operands = std::move(operands);
  s.result_text = encode_poly(result);
  s.result = fnv1a(s.result_text);
  s.detail = detail;
  tr->push_back(std::move(s));
  return tr->back().result;
}

uint64_t put_note(std::vector<TraceStep>* tr, const std::string& op,
                  const std::string& var, std::vector<uint64_t> operands,
                  const std::string& text, const std::string& detail = "") {
  TraceStep s;
  s.op = op;
  s.var = var;
  s.operands = std::move(operands);
  s.result_text = text;
  s.result = fnv1a(text);
  s.detail = detail;
  tr->push_back(std::move(s));
  return tr->back().result;
}

std::string range_str(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  return "(" + (lo ? rat_str(*lo) : std::string("-inf")) + "," +
         (hi ? rat_str(*hi) : std::string("inf")) + ")";
}

}  // namespace

uint64_t text_digest(const std::string& s) { return fnv1a(s); }
uint64_t poly_digest(const Poly& p) { return fnv1a(encode_poly(p)); }
uint64_t system_digest(const SignedPolySystem& s) { return fnv1a(s.str()); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Empty: return "Empty";
    case Verdict::Solutions: return "Solutions";
    case Verdict::DegreeReport: return "DegreeReport";
    case Verdict::Monotone: return "Monotone";
    case Verdict::NotMonotone: return "NotMonotone";
  }
  return "?";
}

std::string SolutionRecord::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, x] : values) {
    if (!first) out += ", ";
    out += v + " = " + x.str();
    first = false;
  }
  out += "}";
  if (!sigma.empty()) {
    out += " sigma=";
    for (int s : sigma) out += s > 0 ? '+' : '-';
  }
  return out;
}

uint64_t trace_define(const Poly& p, const std::string& why,
                      std::vector<TraceStep>* trace) {
  return put_poly(trace, "define", "", {}, p, why);
}

bool shift_positive(const Poly& p, const std::map<std::string, Rat>& lower,
                    std::vector<TraceStep>* trace) {
  Poly q = p;
  std::string bounds;
  for (const auto& [v, lo] : lower) {
    if (q.var_index(v) < 0) continue;
    if (!bounds.empty()) bounds += ";";
    bounds += v + ">" + rat_str(lo);
    if (sign(lo) != 0)
      q = q.substitute(v, Poly::variable(q.vars, v) + Poly::constant(q.vars, lo));
  }
  bool ok = !q.is_zero();
  for (const auto& [e, c] : q.terms)
    if (sign(c) < 0) ok = false;
  if (trace)
    put_poly(trace, "positivity", "", {poly_digest(p)}, q,
             bounds + (ok ? " => positive" : " => indefinite"));
  return ok;
}

namespace {

// Resultants of the lowest-degree var-dependent equation against the others;
// each one is a necessary condition on the projection, which is all the root
// pipeline needs. Shared factors are split off first (their zero set stays in
// the output) so no resultant vanishes identically. Returns false via
// *refuted when a pair of equations with no shared factor has a nonzero
// constant resultant.
std::vector<Poly> eliminate_list(const std::vector<Poly>& eqs, const std::string& var,
                                 std::vector<TraceStep>* trace, bool* refuted,
                                 std::string* why) {
  std::vector<Poly> dep, out;
  for (const Poly& e : eqs) {
    if (e.is_zero()) continue;
    (e.degree_in(var) > 0 ? dep : out).push_back(e);
  }
  if (dep.size() == 1 && out.empty()) {
    // Single equation in var: its solvability cannot be decided here, but
    // there is nothing to intersect it with either.
    return {};
  }
  std::set<std::string> seen;
  auto push = [&](const Poly& p) {
    if (p.is_zero() || p.is_constant()) return;
    if (seen.insert(encode_poly(p)).second) out.push_back(p);
  };
  std::vector<Poly> kept = out;
  out.clear();
  for (const Poly& p : kept) push(p);
  std::stable_sort(dep.begin(), dep.end(), [&](const Poly& a, const Poly& b) {
    if (a.degree_in(var) != b.degree_in(var))
      return a.degree_in(var) < b.degree_in(var);
    return a.total_degree() < b.total_degree();
  });
  for (size_t i = 0; i < 1 && i < dep.size(); ++i)
    for (size_t j = i + 1; j < dep.size(); ++j) {
      Poly a = dep[i], b = dep[j];
      Poly g = poly_gcd(a, b);
      bool shared = !g.is_constant();
      if (shared) {
        put_poly(trace, "gcd", var, {poly_digest(a), poly_digest(b)}, g,
                 "shared factor kept as a constraint");
        push(g);
        Poly a2 = divexact(a, g), b2 = divexact(b, g);
        put_poly(trace, "divexact", var, {poly_digest(a), poly_digest(g)}, a2);
        put_poly(trace, "divexact", var, {poly_digest(b), poly_digest(g)}, b2);
        a = a2;
        b = b2;
      }
      if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        push(a);
        push(b);
        continue;
      }
      Poly r = resultant(a, b, var);
      put_poly(trace, "resultant", var, {poly_digest(a), poly_digest(b)}, r);
      if (r.is_zero())
        throw std::runtime_error("elimination degenerates: zero resultant after gcd");
      if (r.is_constant()) {
        if (!shared && refuted) {
          *refuted = true;
          *why = "nonzero constant resultant in " + var;
          put_note(trace, "const-nonzero", var, {poly_digest(r)}, encode_poly(r),
                   "pair of equations has no common zero");
          return {};
        }
        continue;
      }
      Poly pr = primitive_part(r);
      put_poly(trace, "primitive", var, {poly_digest(r)}, pr);
      push(pr);
    }
  return out;
}

}  // namespace

Poly resultant_eliminate(const std::vector<Poly>& eqs, const std::string& var,
                         std::vector<TraceStep>* trace) {
  bool refuted = false;
  std::string why;
  auto list = eliminate_list(eqs, var, trace, &refuted, &why);
  if (refuted) {
    if (eqs.empty()) throw std::logic_error("unreachable");
    return Poly::constant(eqs.front().vars, Rat(1));
  }
  if (list.empty()) throw std::runtime_error("elimination degenerates: no eliminant");
  Poly g = list.front();
  for (size_t i = 1; i < list.size(); ++i) {
    Poly g2 = poly_gcd(g, list[i]);
    put_poly(trace, "gcd", var, {poly_digest(g), poly_digest(list[i])}, g2);
    g = g2;
    if (g.is_constant()) break;
  }
  return g;
}

namespace {

struct BranchOutcome {
  bool refuted = false;
  std::vector<SolutionRecord> survivors;
};

std::string box_text(const std::map<std::string, RatInterval>& box) {
  std::string s;
  for (const auto& [v, iv] : box) {
    if (!s.empty()) s += ";";
    s += v + "=[" + rat_str(iv.lo) + "," + rat_str(iv.hi) + "]";
  }
  return s;
}

Rat rat_floor(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rat(q);
}

// Smallest-denominator rational in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi) {
  Rat fl = rat_floor(lo);
  if (fl == lo) return fl;
  if (fl + 1 <= hi) return Rat(fl + 1);
  Rat inner = simplest_between(Rat(1 / (hi - fl)), Rat(1 / (lo - fl)));
  return Rat(fl + 1 / inner);
}

// Refines the interval, then asks whether its unique root is the simplest
// rational inside. A miss is harmless: the candidate just stays algebraic.
std::optional<Rat> rational_root_at(const UPoly& u, IsolatingInterval* iv) {
  *iv = refine_root(*iv, pow2(-120));
  Rat cand = simplest_between(iv->lo, iv->hi);
  if (sign(upeval(u, cand)) == 0) return cand;
  return std::nullopt;
}

std::string point_text(const std::map<std::string, Rat>& pt) {
  std::string s;
  for (const auto& [v, c] : pt) {
    if (!s.empty()) s += ";";
    s += v + "=" + rat_str(c);
  }
  return s;
}

std::map<std::string, Rat> parse_point(const std::string& s) {
  std::map<std::string, Rat> pt;
  for (const std::string& part : split(s, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad point: " + s);
    pt[part.substr(0, eq)] = rat_parse(part.substr(eq + 1));
  }
  return pt;
}

bool point_covers(const Poly& p, const std::map<std::string, Rat>& pt) {
  for (const std::string& v : p.vars)
    if (p.degree_in(v) > 0 && !pt.count(v)) return false;
  return true;
}

Rat point_eval(const Poly& p, const std::map<std::string, Rat>& pt) {
  std::map<std::string, Rat> vals;
  for (const std::string& v : p.vars) {
    auto it = pt.find(v);
    vals[v] = it == pt.end() ? Rat(0) : it->second;
  }
  return p.eval(vals);
}

std::map<std::string, RatInterval> parse_box(const std::string& s) {
  std::map<std::string, RatInterval> box;
  for (const std::string& part : split(s, ';')) {
    auto eq = part.find("=[");
    auto comma = part.find(',', eq);
    if (eq == std::string::npos || comma == std::string::npos || part.back() != ']')
      throw std::invalid_argument("bad box encoding: " + s);
    box[part.substr(0, eq)] =
        RatInterval(rat_parse(part.substr(eq + 2, comma - eq - 2)),
                    rat_parse(part.substr(comma + 1, part.size() - comma - 2)));
  }
  return box;
}

BranchOutcome refute_branch(const SignedPolySystem& sys, int branch_index,
                            const Region& region, std::vector<TraceStep>* trace) {
  BranchOutcome out;
  std::string sig;
  for (int s : sys.sigma_branch) sig += s > 0 ? '+' : '-';
  put_note(trace, "branch", "", {system_digest(sys)},
           "branch " + std::to_string(branch_index) + " sigma=" + sig);
  auto refute = [&](const std::string& why) {
    put_note(trace, "refuted", "", {}, "branch " + std::to_string(branch_index), why);
    out.refuted = true;
  };

  // Strict bounds of the form sg*(a*v + b) > 0 sharpen the region for this
  // branch; the Sturm steps below record the range they actually used.
  Region reg = region;
  for (const auto& [p, sg] : sys.strict_inequalities) {
    std::string v;
    int nv = 0;
    for (const std::string& name : p.vars)
      if (p.degree_in(name) > 0) {
        v = name;
        ++nv;
      }
    if (nv != 1 || p.degree_in(v) != 1 || !reg.count(v)) continue;
    auto cs = p.coeffs_in(v);
    if (!cs[0].is_constant() || !cs[1].is_constant()) continue;
    Rat a = cs[1].constant_value(), b = cs[0].constant_value();
    Rat bound = Rat(-b / a);
    VarRange& r = reg[v];
    if (sign(a) * sg > 0) {
      if (bound > r.lo) r.lo = bound;
    } else {
      if (!r.hi || bound < *r.hi) r.hi = bound;
    }
  }

  std::vector<Poly> eqs;
  for (const Poly& e : sys.equations) {
    if (e.is_zero()) continue;
    if (e.is_constant()) {
      put_note(trace, "const-nonzero", "", {poly_digest(e)}, encode_poly(e));
      refute("constant nonzero equation");
      return out;
    }
    for (const std::string& v : e.vars)
      if (e.degree_in(v) > 0 && !reg.count(v))
        throw std::invalid_argument("equation variable outside the region: " + v);
    eqs.push_back(e);
  }

  std::map<std::string, Rat> lower;
  for (const auto& [v, r] : reg) lower[v] = r.lo;
  for (const Poly& e : eqs) {
    bool fixed = shift_positive(e, lower, trace);
    if (!fixed) {
      Poly ne = -e;
      trace_define(ne, "negated equation", trace);
      fixed = shift_positive(ne, lower, trace);
    }
    if (fixed) {
      refute("equation has a fixed sign on the region");
      return out;
    }
  }

  std::vector<std::string> unknowns;
  for (const auto& [v, r] : reg) {
    for (const Poly& e : eqs)
      if (e.degree_in(v) > 0) {
        unknowns.push_back(v);
        break;
      }
  }
  if (unknowns.empty()) {
    SolutionRecord rec;
    rec.sigma = sys.sigma_branch;
    rec.branch = branch_index;
    out.survivors.push_back(rec);
    put_note(trace, "note", "", {}, "branch " + std::to_string(branch_index),
             "no isolating equations; branch left unresolved");
    return out;
  }

  // Univariate eliminant and admissible roots per unknown.
  std::map<std::string, UPoly> eliminant;
  std::map<std::string, std::vector<IsolatingInterval>> roots;
  for (const std::string& v : unknowns) {
    std::vector<Poly> work = eqs;
    for (const std::string& u : unknowns) {
      if (u == v) continue;
      bool refuted = false;
      std::string why;
      work = eliminate_list(work, u, trace, &refuted, &why);
      if (refuted) {
        refute(why);
        return out;
      }
    }
    Poly g;
    bool have = false;
    for (const Poly& p : work)
      if (p.degree_in(v) > 0) {
        if (!have) {
          g = p;
          have = true;
        } else {
          Poly g2 = poly_gcd(g, p);
          put_poly(trace, "gcd", v, {poly_digest(g), poly_digest(p)}, g2);
          g = g2;
        }
      }
    if (!have)
      throw std::runtime_error("unbounded search: no eliminant in " + v);
    if (g.is_constant()) {
      put_note(trace, "const-nonzero", v, {poly_digest(g)}, encode_poly(g));
      refute("eliminants in " + v + " are coprime");
      return out;
    }
    Poly sf = squarefree_part(g, v);
    put_poly(trace, "squarefree", v, {poly_digest(g)}, sf);
    UPoly u = upoly_from(sf, v);
    const VarRange& r = reg.at(v);
    auto iso = isolate_real_roots(u, r.lo, r.hi);
    put_note(trace, "sturm", v, {poly_digest(sf)},
             "count=" + std::to_string(iso.size()) + " on " +
                 range_str(r.lo, r.hi));
    if (iso.empty()) {
      refute("eliminant in " + v + " has no root in the region");
      return out;
    }
    eliminant[v] = u;
    roots[v] = iso;
  }

  // Candidate boxes: one root choice per unknown, refuted by interval
  // evaluation or kept as a surviving solution record.
  std::vector<std::map<std::string, IsolatingInterval>> boxes = {{}};
  for (const std::string& v : unknowns) {
    std::vector<std::map<std::string, IsolatingInterval>> next;
    for (const auto& partial : boxes)
      for (const auto& iv : roots[v]) {
        auto b = partial;
        b.emplace(v, iv);
        next.push_back(b);
      }
    boxes = next;
  }

  bool any_survivor = false;
  for (auto& cand : boxes) {
    std::map<std::string, Rat> exact;
    for (auto& [v, iv] : cand) {
      auto rr = rational_root_at(eliminant.at(v), &iv);
      if (rr) exact[v] = *rr;
    }
    bool killed = false;
    if (exact.size() == cand.size()) {
      // Every coordinate is an exact rational: decide all conditions exactly.
      const std::string pt = point_text(exact);
      for (const Poly& e : eqs) {
        if (sign(point_eval(e, exact)) != 0) {
          put_note(trace, "refute-point", "", {poly_digest(e)}, pt,
                   "equation nonzero at the exact point");
          killed = true;
          break;
        }
      }
      if (!killed)
        for (const Poly& n : sys.strict_negations) {
          if (!point_covers(n, exact)) continue;
          if (sign(point_eval(n, exact)) == 0) {
            put_note(trace, "refute-point", "", {poly_digest(n)}, pt,
                     "nonvanishing condition vanishes at the exact point");
            killed = true;
            break;
          }
        }
      if (!killed)
        for (const auto& [p, sg] : sys.strict_inequalities) {
          if (!point_covers(p, exact)) continue;
          if (sign(point_eval(p, exact)) != sg) {
            put_note(trace, "refute-point", "", {poly_digest(p)}, pt,
                     "strict inequality fails at the exact point; need sign " +
                         std::string(sg > 0 ? "+1" : "-1"));
            killed = true;
            break;
          }
        }
      if (!killed) {
        any_survivor = true;
        SolutionRecord rec;
        rec.sigma = sys.sigma_branch;
        rec.branch = branch_index;
        for (const auto& [v, c] : exact) rec.values.emplace(v, ExactReal(c));
        out.survivors.push_back(rec);
      }
      continue;
    }
    for (int bits : {60, 120, 240, 400}) {
      std::map<std::string, RatInterval> box;
      for (auto& [v, iv] : cand) {
        auto it = exact.find(v);
        if (it != exact.end()) {
          box[v] = RatInterval::point(it->second);
          continue;
        }
        iv = refine_root(iv, pow2(-bits));
        box[v] = {iv.lo, iv.hi};
      }
      for (size_t ei = 0; ei < eqs.size() && !killed; ++ei) {
        RatInterval enc = eval_interval(eqs[ei], box);
        if (!enc.contains_zero()) {
          put_note(trace, "refute-box", "", {poly_digest(eqs[ei])}, box_text(box),
                   "equation enclosure excludes zero");
          killed = true;
        }
      }
      for (const auto& [p, sg] : sys.strict_inequalities) {
        if (killed) break;
        bool covered = true;
        for (const std::string& v : p.vars)
          if (p.degree_in(v) > 0 && !box.count(v)) covered = false;
        if (!covered) continue;
        RatInterval enc = eval_interval(p, box);
        if (enc.definite_sign() == -sg) {
          put_note(trace, "refute-box", "", {poly_digest(p)}, box_text(box),
                   "strict inequality fails on the box");
          killed = true;
        }
      }
      if (killed) break;
    }
    if (killed) continue;
    any_survivor = true;
    SolutionRecord rec;
    rec.sigma = sys.sigma_branch;
    rec.branch = branch_index;
    for (const auto& [v, iv] : cand) {
      auto it = exact.find(v);
      if (it != exact.end()) {
        rec.values.emplace(v, ExactReal(it->second));
        continue;
      }
      IsolatingInterval full = iv;
      full.target = eliminant.at(v);
      full.var = v;
      rec.values.emplace(v, ExactReal(full));
    }
    out.survivors.push_back(rec);
  }
  if (!any_survivor) refute("all candidate boxes refuted");
  return out;
}

}  // namespace

uint64_t trace_note(const std::string& op, const std::string& var,
                    const std::vector<uint64_t>& operands, const std::string& text,
                    const std::string& detail, std::vector<TraceStep>* trace) {
  return put_note(trace, op, var, operands, text, detail);
}

Poly trace_resultant(const Poly& a, const Poly& b, const std::string& var,
                     std::vector<TraceStep>* trace) {
  Poly r = resultant(a, b, var);
  put_poly(trace, "resultant", var, {poly_digest(a), poly_digest(b)}, r);
  return r;
}

Poly trace_divexact(const Poly& a, const Poly& b, const std::string& var,
                    std::vector<TraceStep>* trace) {
  Poly q = divexact(a, b);
  put_poly(trace, "divexact", var, {poly_digest(a), poly_digest(b)}, q);
  return q;
}

std::vector<IsolatingInterval> trace_roots(const Poly& p, const std::string& var,
                                           const VarRange& range, const Rat& width,
                                           std::vector<TraceStep>* trace) {
  Poly sf = squarefree_part(p, var);
  put_poly(trace, "squarefree", var, {poly_digest(p)}, sf);
  UPoly u = upoly_from(sf, var);
  auto iso = isolate_real_roots(u, range.lo, range.hi);
  put_note(trace, "sturm", var, {poly_digest(sf)},
           "count=" + std::to_string(iso.size()) + " on " +
               range_str(range.lo, range.hi));
  std::vector<IsolatingInterval> out;
  for (IsolatingInterval iv : iso) {
    iv = refine_root(iv, width);
    put_note(trace, "root", var, {poly_digest(sf)},
             box_text({{var, {iv.lo, iv.hi}}}));
    out.push_back(iv);
  }
  return out;
}

Certificate certify_empty(const std::string& case_id,
                          const std::vector<SignedPolySystem>& systems,
                          const Region& region) {
  Certificate c;
  c.case_id = case_id;
  c.inputs = systems;
  for (const auto& s : systems) c.input_digests.push_back(system_digest(s));
  bool all_refuted = true;
  for (size_t i = 0; i < systems.size(); ++i) {
    BranchOutcome o = refute_branch(systems[i], int(i), region, &c.trace);
    if (!o.refuted) {
      all_refuted = false;
      for (auto& r : o.survivors) c.roots.push_back(std::move(r));
    }
  }
  c.verdict = all_refuted ? Verdict::Empty : Verdict::Solutions;
  return c;
}

Certificate certify_monotone(const Poly& numer, const Poly& denom,
                             const std::string& var, const VarRange& range) {
  Certificate c;
  c.case_id = "monotone";
  trace_define(numer, "numerator", &c.trace);
  trace_define(denom, "denominator", &c.trace);

  UPoly d = upoly_from(denom, var);
  if (updeg(d) < 0) throw std::invalid_argument("zero denominator");
  UPoly dsf = upsquarefree(d);
  int droots = sturm_count(dsf, range.lo, range.hi);
  put_note(&c.trace, "sturm", var, {poly_digest(denom)},
           "count=" + std::to_string(droots) + " on " + range_str(range.lo, range.hi),
           "denominator roots");
  if (droots != 0)
    throw std::invalid_argument("denominator vanishes inside the interval");

  Poly g = numer.derivative(var) * denom - numer * denom.derivative(var);
  put_poly(&c.trace, "define", var, {poly_digest(numer), poly_digest(denom)}, g,
           "derivative numerator n'd - nd'");
  if (g.is_zero()) {
    c.verdict = Verdict::NotMonotone;
    c.note = "constant ratio";
    return c;
  }
  Poly gsf = squarefree_part(g, var);
  put_poly(&c.trace, "squarefree", var, {poly_digest(g)}, gsf);
  UPoly u = upoly_from(gsf, var);
  auto iso = isolate_real_roots(u, range.lo, range.hi);
  put_note(&c.trace, "sturm", var, {poly_digest(gsf)},
           "count=" + std::to_string(iso.size()) + " on " +
               range_str(range.lo, range.hi),
           "derivative numerator roots");
  if (!iso.empty()) {
    c.verdict = Verdict::NotMonotone;
    SolutionRecord rec;
    rec.values.emplace(var, ExactReal(iso.front()));
    c.roots.push_back(rec);
    c.note = "derivative numerator vanishes inside the interval";
    return c;
  }
  Rat sample = range.hi ? Rat((range.lo + *range.hi) / 2) : Rat(range.lo + 1);
  int dir = sign(upeval(upoly_from(g, var), sample));
  put_note(&c.trace, "sample", var, {poly_digest(g)},
           "sign=" + std::to_string(dir) + " at " + rat_str(sample));
  c.verdict = Verdict::Monotone;
  c.direction = dir;
  c.note = dir > 0 ? "strictly increasing" : "strictly decreasing";
  return c;
}

namespace {

std::optional<Rat> parse_bound(const std::string& s) {
  if (s == "inf" || s == "-inf") return std::nullopt;
  return rat_parse(s);
}

// Parses "count=N on (LO,HI)".
bool parse_sturm_detail(const std::string& text, int* count, std::optional<Rat>* lo,
                        std::optional<Rat>* hi) {
  auto eq = text.find("count=");
  auto on = text.find(" on (");
  auto comma = text.find(',', on);
  if (eq != 0 || on == std::string::npos || comma == std::string::npos ||
      text.back() != ')')
    return false;
  *count = std::stoi(text.substr(6, on - 6));
  *lo = parse_bound(text.substr(on + 5, comma - on - 5));
  *hi = parse_bound(text.substr(comma + 1, text.size() - comma - 2));
  return true;
}

}  // namespace

VerifyResult verify_certificate(const Certificate& c) {
  auto fail = [](const std::string& what) { return VerifyResult{false, what}; };
  std::map<uint64_t, Poly> table;
  auto learn = [&](const Poly& p) { table.emplace(poly_digest(p), p); };
  for (const auto& sys : c.inputs) {
    for (const Poly& p : sys.equations) learn(p);
    for (const Poly& p : sys.strict_negations) learn(p);
    for (const auto& [p, s] : sys.strict_inequalities) learn(p);
  }
  for (size_t si = 0; si < c.input_digests.size(); ++si)
    if (si >= c.inputs.size() || system_digest(c.inputs[si]) != c.input_digests[si])
      return fail("input digest mismatch at system " + std::to_string(si));

  int refuted_branches = 0;
  for (size_t i = 0; i < c.trace.size(); ++i) {
    const TraceStep& st = c.trace[i];
    std::string where = "step " + std::to_string(i) + " (" + st.op + ")";
    if (fnv1a(st.result_text) != st.result)
      return fail(where + ": result digest does not match its text");
    auto get = [&](size_t k) -> const Poly* {
      if (k >= st.operands.size()) return nullptr;
      auto it = table.find(st.operands[k]);
      return it == table.end() ? nullptr : &it->second;
    };
    auto check_poly = [&](const Poly& recomputed) -> bool {
      return encode_poly(recomputed) == st.result_text;
    };
    try {
      if (st.op == "define") {
        Poly p = decode_poly(st.result_text);
        learn(p);
        if (st.operands.size() == 2) {
          // Combination steps (derivative numerator) are re-derived.
          const Poly *n = get(0), *d = get(1);
          if (n && d && !st.var.empty()) {
            Poly g = n->derivative(st.var) * *d - *n * d->derivative(st.var);
            if (!check_poly(g)) return fail(where + ": combination mismatch");
          }
        }
      } else if (st.op == "resultant" || st.op == "gcd" || st.op == "divexact") {
        const Poly *a = get(0), *b = get(1);
        if (!a || !b) return fail(where + ": unknown operand");
        Poly r = st.op == "resultant" ? resultant(*a, *b, st.var)
                 : st.op == "gcd"     ? poly_gcd(*a, *b)
                                      : divexact(*a, *b);
        if (!check_poly(r)) return fail(where + ": recomputation differs");
        learn(r);
      } else if (st.op == "primitive" || st.op == "squarefree" ||
                 st.op == "derivative") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        Poly r = st.op == "primitive"    ? primitive_part(*a)
                 : st.op == "squarefree" ? squarefree_part(*a, st.var)
                                         : a->derivative(st.var);
        if (!check_poly(r)) return fail(where + ": recomputation differs");
        learn(r);
      } else if (st.op == "substitute") {
        const Poly *a = get(0), *b = get(1);
        if (!a || !b) return fail(where + ": unknown operand");
        Poly r = a->substitute(st.var, *b);
        if (!check_poly(r)) return fail(where + ": recomputation differs");
        learn(r);
      } else if (st.op == "sturm") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        int count;
        std::optional<Rat> lo, hi;
        if (!parse_sturm_detail(st.result_text, &count, &lo, &hi))
          return fail(where + ": unparsable count record");
        UPoly u = upsquarefree(upoly_from(*a, st.var));
        if (sturm_count(u, lo, hi) != count)
          return fail(where + ": root count does not reproduce");
      } else if (st.op == "positivity") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        Poly q = *a;
        auto arrow = st.detail.rfind(" => ");
        if (arrow == std::string::npos) return fail(where + ": unparsable detail");
        std::string bounds = st.detail.substr(0, arrow);
        bool claimed = st.detail.substr(arrow + 4) == "positive";
        if (!bounds.empty())
          for (const std::string& part : split(bounds, ';')) {
            auto gt = part.find('>');
            if (gt == std::string::npos) return fail(where + ": unparsable bound");
            Rat lo = rat_parse(part.substr(gt + 1));
            std::string v = part.substr(0, gt);
            if (q.var_index(v) >= 0 && sign(lo) != 0)
              q = q.substitute(v, Poly::variable(q.vars, v) +
                                      Poly::constant(q.vars, lo));
          }
        if (!check_poly(q)) return fail(where + ": shifted polynomial differs");
        bool ok = !q.is_zero();
        for (const auto& [e, cf] : q.terms)
          if (sign(cf) < 0) ok = false;
        if (ok != claimed) return fail(where + ": positivity claim does not hold");
        learn(q);
      } else if (st.op == "const-nonzero") {
        Poly p = decode_poly(st.result_text);
        if (!p.is_constant() || sign(p.constant_value()) == 0)
          return fail(where + ": claimed constant is not a nonzero constant");
      } else if (st.op == "refute-box") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        auto box = parse_box(st.result_text);
        for (const std::string& v : a->vars)
          if (a->degree_in(v) > 0 && !box.count(v))
            return fail(where + ": box does not cover " + v);
        RatInterval enc = eval_interval(*a, box);
        bool excluded = st.detail.find("inequality") != std::string::npos
                            ? enc.definite_sign() != 0
                            : !enc.contains_zero();
        if (!excluded) return fail(where + ": enclosure does not exclude zero");
      } else if (st.op == "refute-point") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        auto pt = parse_point(st.result_text);
        for (const std::string& v : a->vars)
          if (a->degree_in(v) > 0 && !pt.count(v))
            return fail(where + ": point does not cover " + v);
        int s = sign(point_eval(*a, pt));
        if (st.detail.find("nonzero") != std::string::npos) {
          if (s == 0) return fail(where + ": claimed nonzero value vanishes");
        } else if (st.detail.find("vanishes") != std::string::npos) {
          if (s != 0) return fail(where + ": claimed zero value is nonzero");
        } else if (st.detail.find("need sign") != std::string::npos) {
          int need = st.detail.find("+1") != std::string::npos ? 1 : -1;
          if (s == need) return fail(where + ": inequality holds after all");
        } else {
          return fail(where + ": unparsable detail");
        }
      } else if (st.op == "root") {
        const Poly* a = get(0);
        if (!a) return fail(where + ": unknown operand");
        auto box = parse_box(st.result_text);
        if (box.size() != 1 || !box.count(st.var))
          return fail(where + ": root record must isolate " + st.var);
        UPoly u = upsquarefree(upoly_from(*a, st.var));
        const RatInterval& iv = box.at(st.var);
        if (sturm_count(u, iv.lo, iv.hi) != 1)
          return fail(where + ": interval does not isolate one root");
      } else if (st.op == "refuted") {
        ++refuted_branches;
      } else if (st.op == "branch" || st.op == "note" || st.op == "sample" ||
                 st.op == "degree") {
        // informational; digest already checked
      } else {
        return fail(where + ": unknown operation");
      }
    } catch (const std::exception& e) {
      return fail(where + ": replay error: " + e.what());
    }
  }

  if (c.verdict == Verdict::Empty) {
    if (!c.roots.empty()) return fail("Empty verdict carries solutions");
    if (refuted_branches < int(c.inputs.size()))
      return fail("Empty verdict with unrefuted branches");
  }
  if (c.verdict == Verdict::Solutions || c.verdict == Verdict::Monotone ||
      c.verdict == Verdict::NotMonotone) {
    for (size_t ri = 0; ri < c.roots.size(); ++ri) {
      const SolutionRecord& rec = c.roots[ri];
      if (rec.branch < 0 || rec.branch >= int(c.inputs.size())) continue;
      const SignedPolySystem& sys = c.inputs[rec.branch];
      std::string where = "solution " + std::to_string(ri);
      bool all_rational = true;
      for (const auto& [v, x] : rec.values)
        if (!x.is_rational()) all_rational = false;
      std::map<std::string, RatInterval> box;
      for (const auto& [v, x] : rec.values) box[v] = x.enclosure(pow2(-200));
      for (const Poly& e : sys.equations) {
        bool covered = true;
        for (const std::string& v : e.vars)
          if (e.degree_in(v) > 0 && !box.count(v)) covered = false;
        if (!covered) return fail(where + ": equation variable unassigned");
        if (all_rational) {
          std::map<std::string, Rat> pt;
          for (const auto& [v, x] : rec.values) pt[v] = x.rational();
          if (sign(e.eval(pt)) != 0)
            return fail(where + ": equation residual is nonzero");
        } else if (!eval_interval(e, box).contains_zero()) {
          return fail(where + ": equation enclosure excludes zero");
        }
      }
      for (const auto& [p, sg] : sys.strict_inequalities) {
        bool covered = true;
        for (const std::string& v : p.vars)
          if (p.degree_in(v) > 0 && !box.count(v)) covered = false;
        if (!covered) continue;
        RatInterval enc = eval_interval(p, box);
        if (enc.definite_sign() != sg)
          return fail(where + ": strict sign condition not certified");
      }
      for (const Poly& p : sys.strict_negations) {
        bool covered = true;
        for (const std::string& v : p.vars)
          if (p.degree_in(v) > 0 && !box.count(v)) covered = false;
        if (!covered) continue;
        if (eval_interval(p, box).definite_sign() == 0) {
          if (!all_rational)
            return fail(where + ": nonvanishing condition not certified");
          std::map<std::string, Rat> pt;
          for (const auto& [v, x] : rec.values) pt[v] = x.rational();
          if (sign(p.eval(pt)) == 0)
            return fail(where + ": nonvanishing condition violated");
        }
      }
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

using nlohmann::json;

json system_to_json(const SignedPolySystem& s) {
  json j;
  j["vars"] = s.vars;
  for (const Poly& p : s.equations) j["equations"].push_back(p.str());
  for (const Poly& p : s.strict_negations) j["negations"].push_back(p.str());
  for (const auto& [p, sg] : s.strict_inequalities)
    j["inequalities"].push_back({p.str(), sg});
  for (const auto& sp : s.sign_products) j["sign_products"].push_back({sp[0], sp[1], sp[2]});
  j["sigma"] = s.sigma_branch;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

SignedPolySystem system_from_json(const json& j) {
  SignedPolySystem s;
  s.vars = j.at("vars").get<std::vector<std::string>>();
  if (j.contains("equations"))
    for (const auto& t : j["equations"])
      s.equations.push_back(poly_parse(s.vars, t.get<std::string>()));
  if (j.contains("negations"))
    for (const auto& t : j["negations"])
      s.strict_negations.push_back(poly_parse(s.vars, t.get<std::string>()));
  if (j.contains("inequalities"))
    for (const auto& t : j["inequalities"])
      s.strict_inequalities.push_back(
          {poly_parse(s.vars, t[0].get<std::string>()), t[1].get<int>()});
  if (j.contains("sign_products"))
    for (const auto& t : j["sign_products"])
      s.sign_products.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  if (j.contains("sigma")) s.sigma_branch = j["sigma"].get<std::vector<int>>();
  if (j.contains("note")) s.note = j["note"].get<std::string>();
  return s;
}

json value_to_json(const ExactReal& x) {
  json j;
  if (x.is_rational()) {
    j["rational"] = rat_str(x.rational());
  } else {
    const IsolatingInterval& iv = x.root();
    j["lo"] = rat_str(iv.lo);
    j["hi"] = rat_str(iv.hi);
    j["target"] = upoly_to_poly(iv.target, iv.var).str();
    j["var"] = iv.var;
  }
  return j;
}

ExactReal value_from_json(const json& j) {
  if (j.contains("rational")) return ExactReal(rat_parse(j["rational"].get<std::string>()));
  IsolatingInterval iv;
  iv.lo = rat_parse(j["lo"].get<std::string>());
  iv.hi = rat_parse(j["hi"].get<std::string>());
  iv.var = j["var"].get<std::string>();
  iv.target = upoly_from(poly_parse({iv.var}, j["target"].get<std::string>()), iv.var);
  return ExactReal(iv);
}

}  // namespace

std::string Certificate::to_json() const {
  json j;
  j["case_id"] = case_id;
  j["tool_version"] = "cc4-1.0";
  for (const auto& s : inputs) j["inputs"].push_back(system_to_json(s));
  for (uint64_t d : input_digests) j["input_digests"].push_back(d);
  for (const auto& st : trace) {
    json t;
    t["op"] = st.op;
    if (!st.var.empty()) t["var"] = st.var;
    t["operands"] = st.operands;
    t["result"] = st.result;
    t["text"] = st.result_text;
    if (!st.detail.empty()) t["detail"] = st.detail;
    j["trace"].push_back(t);
  }
  for (const auto& r : roots) {
    json t;
    for (const auto& [v, x] : r.values) t["values"][v] = value_to_json(x);
    t["sigma"] = r.sigma;
    t["branch"] = r.branch;
    j["roots"].push_back(t);
  }
  j["verdict"] = verdict_name(verdict);
  if (verdict == Verdict::DegreeReport) {
    j["degree"] = degree;
    if (reference_degree) j["reference_degree"] = *reference_degree;
  }
  if (direction) j["direction"] = direction;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

std::string Certificate::str() const {
  std::ostringstream os;
  os << case_id << ": " << verdict_name(verdict);
  if (verdict == Verdict::DegreeReport) {
    os << "(" << degree << ")";
    if (reference_degree)
      os << (degree == *reference_degree ? " matches " : " DIFFERS from ")
         << *reference_degree;
  }
  if (verdict == Verdict::Solutions) os << " [" << roots.size() << "]";
  if (verdict == Verdict::Monotone) os << (direction > 0 ? " increasing" : " decreasing");
  if (!note.empty()) os << " -- " << note;
  return os.str();
}

Certificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate c;
  c.case_id = j.at("case_id").get<std::string>();
  if (j.contains("inputs"))
    for (const auto& t : j["inputs"]) c.inputs.push_back(system_from_json(t));
  if (j.contains("input_digests"))
    c.input_digests = j["input_digests"].get<std::vector<uint64_t>>();
  if (j.contains("trace"))
    for (const auto& t : j["trace"]) {
      TraceStep st;
      st.op = t.at("op").get<std::string>();
      if (t.contains("var")) st.var = t["var"].get<std::string>();
      if (t.contains("operands")) st.operands = t["operands"].get<std::vector<uint64_t>>();
      st.result = t.at("result").get<uint64_t>();
      st.result_text = t.at("text").get<std::string>();
      if (t.contains("detail")) st.detail = t["detail"].get<std::string>();
      c.trace.push_back(std::move(st));
    }
  if (j.contains("roots"))
    for (const auto& t : j["roots"]) {
      SolutionRecord r;
      if (t.contains("values"))
        for (auto it = t["values"].begin(); it != t["values"].end(); ++it)
          r.values.emplace(it.key(), value_from_json(it.value()));
      if (t.contains("sigma")) r.sigma = t["sigma"].get<std::vector<int>>();
      if (t.contains("branch")) r.branch = t["branch"].get<int>();
      c.roots.push_back(std::move(r));
    }
  std::string v = j.at("verdict").get<std::string>();
  if (v == "Empty") c.verdict = Verdict::Empty;
  else if (v == "Solutions") c.verdict = Verdict::Solutions;
  else if (v == "DegreeReport") c.verdict = Verdict::DegreeReport;
  else if (v == "Monotone") c.verdict = Verdict::Monotone;
  else if (v == "NotMonotone") c.verdict = Verdict::NotMonotone;
  else throw std::invalid_argument("unknown verdict: " + v);
  if (j.contains("degree")) c.degree = j["degree"].get<int>();
  if (j.contains("reference_degree")) c.reference_degree = j["reference_degree"].get<int>();
  if (j.contains("direction")) c.direction = j["direction"].get<int>();
  if (j.contains("note")) c.note = j["note"].get<std::string>();
  return c;
}

}  // namespace cc4
