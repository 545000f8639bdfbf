#include "cc4/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace cc4 {

UPoly upoly_from(const Poly& p, const std::string& var) {
  for (size_t i = 0; i < p.vars.size(); ++i)
    if (p.vars[i] != var && p.degree_in(p.vars[i]) > 0)
      throw std::invalid_argument("upoly_from: polynomial not univariate in " + var);
  int d = std::max(p.degree_in(var), 0);
  UPoly u(static_cast<size_t>(d) + 1, Rat(0));
  int i = p.var_index(var);
  for (auto& [e, c] : p.terms) u[static_cast<size_t>(i < 0 ? 0 : e[static_cast<size_t>(i)])] = c;
  while (u.size() > 1 && sign(u.back()) == 0) u.pop_back();
  if (u.size() == 1 && sign(u[0]) == 0) u.clear();
  return u;
}

Poly upoly_to_poly(const UPoly& u, const std::string& var) {
  std::vector<std::string> vs{var};
  Poly p(vs);
  for (size_t k = 0; k < u.size(); ++k)
    if (sign(u[k]) != 0) p.add_term({static_cast<int>(k)}, u[k]);
  return p;
}

int updeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

Rat upeval(const UPoly& u, const Rat& x) {
  Rat acc = 0;
  for (size_t k = u.size(); k-- > 0;) acc = acc * x + u[k];
  return acc;
}

UPoly upderiv(const UPoly& u) {
  if (u.size() <= 1) return {};
  UPoly d(u.size() - 1);
  for (size_t k = 1; k < u.size(); ++k) d[k - 1] = u[k] * static_cast<long>(k);
  return d;
}

UPoly upmul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && sign(r.back()) == 0) r.pop_back();
  return r;
}

UPoly upnormalize(const UPoly& u) {
  if (u.empty()) return u;
  mpz_class den = 1, num = 0;
  for (auto& c : u) {
    if (sign(c) == 0) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  for (auto& c : u) {
    if (sign(c) == 0) continue;
    mpz_class n = c.get_num() * (den / c.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    num = g;
  }
  Rat scale(den, num);
  scale.canonicalize();
  if (sign(u.back()) < 0) scale = -scale;
  UPoly r(u.size());
  for (size_t k = 0; k < u.size(); ++k) r[k] = u[k] * scale;
  return r;
}

UPoly uprem(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("uprem by zero");
  UPoly r = a;
  int db = updeg(b);
  while (updeg(r) >= db) {
    Rat c = r.back() / b.back();
    int shift = updeg(r) - db;
    for (int k = 0; k <= db; ++k) r[static_cast<size_t>(k + shift)] -= c * b[static_cast<size_t>(k)];
    while (!r.empty() && sign(r.back()) == 0) r.pop_back();
  }
  return r;
}

UPoly updivexact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("updivexact by zero");
  UPoly r = a, q;
  int db = updeg(b);
  if (updeg(a) < db) throw std::domain_error("updivexact: not divisible");
  q.assign(static_cast<size_t>(updeg(a) - db) + 1, Rat(0));
  while (updeg(r) >= db) {
    Rat c = r.back() / b.back();
    int shift = updeg(r) - db;
    q[static_cast<size_t>(shift)] = c;
    for (int k = 0; k <= db; ++k) r[static_cast<size_t>(k + shift)] -= c * b[static_cast<size_t>(k)];
    while (!r.empty() && sign(r.back()) == 0) r.pop_back();
  }
  if (!r.empty()) throw std::domain_error("updivexact: nonzero remainder");
  return q;
}

UPoly upgcd(const UPoly& a, const UPoly& b) {
  UPoly p = upnormalize(a), q = upnormalize(b);
  if (updeg(p) < updeg(q)) std::swap(p, q);
  while (!q.empty()) {
    UPoly r = upnormalize(uprem(p, q));
    p = q;
    q = r;
  }
  return p;
}

UPoly upsquarefree(const UPoly& u) {
  if (u.empty()) throw std::invalid_argument("upsquarefree of zero");
  if (updeg(u) <= 1) return upnormalize(u);
  UPoly g = upgcd(u, upderiv(u));
  if (updeg(g) == 0) return upnormalize(u);
  return upnormalize(updivexact(u, g));
}

Rat cauchy_bound(const UPoly& u) {
  if (u.empty()) throw std::invalid_argument("cauchy_bound of zero");
  Rat m = 0;
  for (size_t k = 0; k + 1 < u.size(); ++k) m = std::max(m, rat_abs(u[k]));
  return Rat(1) + m / rat_abs(u.back());
}

namespace {

// Sturm chain with content stripped after each step (signs preserved by the
// positive scaling in upnormalize, modulo the leading-coefficient flip, so we
// strip with a sign-preserving variant here).
UPoly strip_positive(const UPoly& u) {
  if (u.empty()) return u;
  UPoly n = upnormalize(u);
  if (sign(u.back()) < 0)
    for (auto& c : n) c = -c;
  return n;
}

std::vector<UPoly> sturm_chain(const UPoly& u) {
  std::vector<UPoly> chain;
  chain.push_back(strip_positive(u));
  UPoly d = upderiv(u);
  if (!d.empty()) chain.push_back(strip_positive(d));
  while (chain.back().size() > 1) {
    UPoly r = uprem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(strip_positive(r));
  }
  return chain;
}

int sign_at(const UPoly& u, const std::optional<Rat>& x, int infsign) {
  if (!x) {
    // infsign +1: +inf, -1: -inf.
    int s = sign(u.back());
    if (infsign < 0 && (updeg(u) & 1)) s = -s;
    return s;
  }
  return sign(upeval(u, *x));
}

int variations(const std::vector<UPoly>& chain, const std::optional<Rat>& x, int infsign) {
  int v = 0, prev = 0;
  for (auto& u : chain) {
    int s = sign_at(u, x, infsign);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Remove every rational root equal to r (exactly) from u.
UPoly deflate_at(UPoly u, const Rat& r) {
  UPoly lin{-r, Rat(1)};
  while (!u.empty() && sign(upeval(u, r)) == 0) u = updivexact(u, lin);
  return u;
}

}  // namespace

int sturm_count(const UPoly& u0, std::optional<Rat> lo, std::optional<Rat> hi) {
  if (u0.empty()) throw std::invalid_argument("sturm_count of zero");
  UPoly u = u0;
  // Endpoint roots are deflated out; the open-interval count is unaffected.
  if (lo && sign(upeval(u, *lo)) == 0) u = deflate_at(u, *lo);
  if (hi && !u.empty() && sign(upeval(u, *hi)) == 0) u = deflate_at(u, *hi);
  if (updeg(u) <= 0) return 0;
  auto chain = sturm_chain(u);
  return variations(chain, lo, -1) - variations(chain, hi, +1);
}

int sturm_count(const Poly& p, const std::string& var, std::optional<Rat> lo,
                std::optional<Rat> hi) {
  return sturm_count(upoly_from(p, var), lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& u0,
                                                  std::optional<Rat> lo,
                                                  std::optional<Rat> hi) {
  UPoly u = upsquarefree(u0);
  std::vector<IsolatingInterval> out;
  if (updeg(u) <= 0) return out;
  Rat bound = cauchy_bound(u);
  Rat a = lo ? *lo : -bound;
  Rat b = hi ? *hi : bound;
  if (a >= b) return out;
  // Endpoints that are roots: shave them off the working polynomial so every
  // sub-interval endpoint evaluates nonzero.
  if (sign(upeval(u, a)) == 0) u = deflate_at(u, a);
  if (!u.empty() && sign(upeval(u, b)) == 0) u = deflate_at(u, b);
  if (updeg(u) <= 0) return out;
  auto chain = sturm_chain(u);
  auto count = [&](const Rat& x, const Rat& y) {
    return variations(chain, x, 0) - variations(chain, y, 0);
  };

  struct Seg {
    Rat a, b;
    int n;
  };
  std::vector<Seg> stack{{a, b, count(a, b)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      out.push_back({s.a, s.b, u, "x"});
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    // Nudge a midpoint that happens to be a root.
    Rat step = (s.b - s.a) / 4;
    while (sign(upeval(u, mid)) == 0) {
      mid += step;
      step /= 2;
    }
    int left = count(s.a, mid);
    stack.push_back({s.a, mid, left});
    stack.push_back({mid, s.b, s.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
  return out;
}

IsolatingInterval refine_root(const IsolatingInterval& iv, const Rat& width) {
  if (sign(width) <= 0) throw std::invalid_argument("refine_root: width must be positive");
  Rat lo = iv.lo, hi = iv.hi;
  int slo = sign(upeval(iv.target, lo));
  int shi = sign(upeval(iv.target, hi));
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::logic_error("refine_root: interval does not bracket a sign change");
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sign(upeval(iv.target, mid));
    if (sm == 0) {
      // Exact rational root: shrink symmetrically around it.
      Rat gap = hi - lo;
      Rat w = (width < gap ? width : gap) / 4;
      return {mid - w, mid + w, iv.target, iv.var};
    }
    (sm == slo ? lo : hi) = mid;
  }
  return {lo, hi, iv.target, iv.var};
}

}  // namespace cc4
