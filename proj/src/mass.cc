#include "cc4/mass.hpp"

#include <sstream>
#include <stdexcept>

namespace cc4 {

namespace {

IsolatingInterval refine_halve(const IsolatingInterval& iv) {
  Rat w = (iv.hi - iv.lo) / 4;
  return refine_root(iv, w);
}

bool rational_sqrt(const Rat& q, Rat* out) {
  if (sign(q) < 0) return false;
  if (sign(q) == 0) {
    *out = 0;
    return true;
  }
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return false;
  if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  Rat r(n, d);
  r.canonicalize();
  *out = r;
  return true;
}

}  // namespace

ExactReal::ExactReal(IsolatingInterval iv) : alg_(std::move(iv)) {
  const IsolatingInterval& r = *alg_;
  if (r.target.empty() || r.lo >= r.hi)
    throw std::invalid_argument("ExactReal: degenerate isolating interval");
  int slo = sign(upeval(r.target, r.lo));
  int shi = sign(upeval(r.target, r.hi));
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("ExactReal: interval does not bracket a root");
}

const Rat& ExactReal::rational() const {
  if (!rat_) throw std::logic_error("ExactReal: not rational");
  return *rat_;
}

const IsolatingInterval& ExactReal::root() const {
  if (!alg_) throw std::logic_error("ExactReal: not algebraic");
  return *alg_;
}

RatInterval ExactReal::enclosure(const Rat& width) const {
  if (rat_) return RatInterval::point(*rat_);
  IsolatingInterval r = refine_root(*alg_, width);
  return {r.lo, r.hi};
}

int ExactReal::sgn() const {
  if (rat_) return sign(*rat_);
  IsolatingInterval iv = *alg_;
  if (iv.contains(Rat(0)) && sign(upeval(iv.target, Rat(0))) == 0) return 0;
  while (iv.contains(Rat(0))) iv = refine_halve(iv);
  return sign(iv.lo) > 0 ? 1 : -1;
}

double ExactReal::approx() const {
  RatInterval e = enclosure(pow2(-60));
  return to_double(e.mid());
}

std::string ExactReal::str() const {
  if (rat_) return rat_str(*rat_);
  std::ostringstream os;
  os << "root of " << upoly_to_poly(alg_->target, alg_->var).str() << " in ["
     << rat_str(alg_->lo) << ", " << rat_str(alg_->hi) << "]";
  return os.str();
}

namespace {

// Sign of algebraic x minus rational r, given x != r.
int sign_vs_rational(IsolatingInterval iv, const Rat& r) {
  while (iv.contains(r)) iv = refine_halve(iv);
  return iv.lo > r ? 1 : -1;
}

}  // namespace

int compare(const ExactReal& a, const ExactReal& b) {
  if (a.is_rational() && b.is_rational()) return sign(a.rational() - b.rational());
  if (a.is_rational()) return -compare(b, a);
  const IsolatingInterval& ia = a.root();
  if (b.is_rational()) {
    const Rat& r = b.rational();
    if (ia.contains(r) && sign(upeval(ia.target, r)) == 0) return 0;
    return sign_vs_rational(ia, r);
  }
  IsolatingInterval x = ia, y = b.root();
  UPoly g = upgcd(x.target, y.target);
  for (;;) {
    if (x.hi < y.lo) return -1;
    if (y.hi < x.lo) return 1;
    // A root of the gcd inside the overlap is a root of each target inside
    // its isolating interval, hence equal to both values at once. Interval
    // endpoints are never roots, so the open count is exact.
    Rat lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
    if (updeg(g) >= 1 && lo < hi && sturm_count(g, lo, hi) >= 1) return 0;
    x = refine_halve(x);
    y = refine_halve(y);
  }
}

MassQuadruple MassQuadruple::of(Rat a, Rat b, Rat c, Rat d) {
  MassQuadruple q;
  q.m = {ExactReal(std::move(a)), ExactReal(std::move(b)), ExactReal(std::move(c)),
         ExactReal(std::move(d))};
  return q;
}

bool MassQuadruple::all_nonzero() const {
  for (const auto& v : m)
    if (v.sgn() == 0) return false;
  return true;
}

bool MassQuadruple::all_rational() const {
  for (const auto& v : m)
    if (!v.is_rational()) return false;
  return true;
}

std::map<std::string, RatInterval> MassQuadruple::box(const Rat& width) const {
  std::map<std::string, RatInterval> out;
  for (int i = 0; i < 4; ++i) out["m" + std::to_string(i + 1)] = m[i].enclosure(width);
  return out;
}

std::string MassQuadruple::str() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? ", " : "") + m[i].str();
  return s + ")";
}

std::string MuSigma::str() const {
  std::string s = "mu=(";
  for (int i = 0; i < 4; ++i) s += (i ? ", " : "") + mu[i].str();
  s += "), sig=(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(sig[i]);
  return s + ")";
}

namespace {

ExactReal sqrt_of_rational(const Rat& q) {
  if (sign(q) < 0) throw std::domain_error("sqrt of a negative");
  Rat r;
  if (rational_sqrt(q, &r)) return ExactReal(r);
  UPoly t{-q, Rat(0), Rat(1)};  // x^2 - q
  RatInterval e = root_enclosure(q, 2, 16);
  return ExactReal(IsolatingInterval{e.lo, e.hi, t, "x"});
}

ExactReal sqrt_of_algebraic(const IsolatingInterval& q) {
  if (sign(q.lo) <= 0)
    throw std::domain_error("sqrt_of_algebraic: interval must be strictly positive");
  // Roots of T(x^2) include the value; shrink until the bracket isolates it.
  UPoly even(2 * q.target.size() - 1, Rat(0));
  for (size_t k = 0; k < q.target.size(); ++k) even[2 * k] = q.target[k];
  UPoly t = upsquarefree(even);
  IsolatingInterval src = q;
  for (int bits = 24; bits <= 512; bits *= 2) {
    RatInterval e = iroot({src.lo, src.hi}, 2, bits);
    if (sign(upeval(t, e.lo)) != 0 && sign(upeval(t, e.hi)) != 0 &&
        sturm_count(t, e.lo, e.hi) == 1 &&
        sign(upeval(t, e.lo)) != sign(upeval(t, e.hi)))
      return ExactReal(IsolatingInterval{e.lo, e.hi, t, "x"});
    src = refine_root(src, (src.hi - src.lo) / 16);
  }
  throw std::runtime_error("sqrt_of_algebraic: failed to isolate");
}

}  // namespace

MuSigma to_mu_sigma(const MassQuadruple& q) {
  if (!q.all_nonzero()) throw std::invalid_argument("to_mu_sigma: zero mass");
  if (!q.m[0].is_rational())
    throw std::invalid_argument("to_mu_sigma: m1 must be rational");
  Rat c = rat_abs(q.m[0].rational());
  MuSigma out;
  for (int i = 0; i < 4; ++i) {
    int s = q.m[i].sgn();
    out.sig[i] = s;
    if (q.m[i].is_rational()) {
      Rat qq = rat_abs(q.m[i].rational()) / c;
      out.musq[i] = ExactReal(qq);
      out.mu[i] = sqrt_of_rational(qq);
    } else {
      // |m_i|/c is a root of T(s*c*x) on the scaled interval.
      const IsolatingInterval& t = q.m[i].root();
      Rat f = Rat(s) * c;
      UPoly w(t.target.size());
      Rat p = 1;
      for (size_t k = 0; k < t.target.size(); ++k, p *= f) w[k] = t.target[k] * p;
      Rat a = t.lo / f, b = t.hi / f;
      if (a > b) std::swap(a, b);
      IsolatingInterval sq{a, b, upnormalize(w), t.var};
      out.musq[i] = ExactReal(sq);
      while (sign(sq.lo) <= 0) sq = refine_root(sq, (sq.hi - sq.lo) / 4);
      out.mu[i] = sqrt_of_algebraic(sq);
    }
  }
  return out;
}

MassQuadruple from_mu_sigma(const MuSigma& ms, const Rat& m1_abs) {
  if (sign(m1_abs) <= 0) throw std::invalid_argument("from_mu_sigma: scale must be positive");
  MassQuadruple q;
  for (int i = 0; i < 4; ++i) {
    if (!ms.musq[i].is_rational())
      throw std::invalid_argument("from_mu_sigma: algebraic square, scale-back undefined");
    q.m[i] = ExactReal(Rat(ms.sig[i]) * ms.musq[i].rational() * m1_abs);
  }
  return q;
}

}  // namespace cc4
