#include "cc4/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cc4 {

RatInterval iadd(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval isub(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval imul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval ipow(const RatInterval& a, unsigned e) {
  if (e == 0) return RatInterval::point(1);
  if (e % 2 == 0) {
    // Even powers are monotone in |x|; take the tight range.
    Rat l = rat_pow(a.lo, e), h = rat_pow(a.hi, e);
    Rat hi = std::max(l, h);
    Rat lo = a.contains_zero() ? Rat(0) : std::min(l, h);
    return {lo, hi};
  }
  return {rat_pow(a.lo, e), rat_pow(a.hi, e)};
}

RatInterval iscale(const RatInterval& a, const Rat& c) {
  if (sign(c) >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

RatInterval root_enclosure(const Rat& a, unsigned n, int bits) {
  if (n == 0) throw std::invalid_argument("root_enclosure: n must be positive");
  if (bits <= 0) throw std::invalid_argument("root_enclosure: bits must be positive");
  if (sign(a) == 0) return RatInterval::point(0);
  if (sign(a) < 0) {
    if (n % 2 == 0) throw std::domain_error("root_enclosure: even root of a negative");
    RatInterval r = root_enclosure(-a, n, bits);
    return {-r.hi, -r.lo};
  }
  // s = floor(2^bits * a^(1/n)) via the integer n-th root of floor(a * 2^(n*bits)).
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), a.get_num().get_mpz_t(),
               static_cast<mp_bitcnt_t>(n) * static_cast<mp_bitcnt_t>(bits));
  mpz_class q = scaled / a.get_den();
  mpz_class s;
  mpz_root(s.get_mpz_t(), q.get_mpz_t(), n);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Rat lo(s, den), hi(s + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

RatInterval iroot(const RatInterval& x, unsigned n, int bits) {
  if (n % 2 == 0 && sign(x.lo) < 0)
    throw std::domain_error("iroot: even root of an interval below zero");
  return {root_enclosure(x.lo, n, bits).lo, root_enclosure(x.hi, n, bits).hi};
}

RatInterval eval_interval(const Poly& p, const std::map<std::string, RatInterval>& box) {
  RatInterval acc = RatInterval::point(0);
  for (auto& [e, c] : p.terms) {
    RatInterval t = RatInterval::point(1);
    for (size_t i = 0; i < p.vars.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = box.find(p.vars[i]);
      if (it == box.end())
        throw std::invalid_argument("eval_interval: unassigned variable " + p.vars[i]);
      t = imul(t, ipow(it->second, static_cast<unsigned>(e[i])));
    }
    acc = iadd(acc, iscale(t, c));
  }
  return acc;
}

}  // namespace cc4
