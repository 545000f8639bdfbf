#pragma once

#include <map>
#include <string>

#include "cc4/poly.hpp"

namespace cc4 {

// Closed rational interval. Endpoints are exact, so "outward rounding" is
// simply keeping the exact min/max of endpoint products.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
  static RatInterval point(const Rat& v) { return {v, v}; }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  // Definite sign of every point in the interval; 0 when it straddles.
  int definite_sign() const {
    if (sign(lo) > 0) return 1;
    if (sign(hi) < 0) return -1;
    return 0;
  }
};

RatInterval iadd(const RatInterval& a, const RatInterval& b);
RatInterval isub(const RatInterval& a, const RatInterval& b);
RatInterval imul(const RatInterval& a, const RatInterval& b);
RatInterval ipow(const RatInterval& a, unsigned e);
RatInterval iscale(const RatInterval& a, const Rat& c);

// Sound enclosure of p over the box; every variable of p must be assigned.
RatInterval eval_interval(const Poly& p, const std::map<std::string, RatInterval>& box);

// Enclosure of the real n-th root of a, width 2^-bits. For even n, a must be
// nonnegative; odd roots of negatives are mirrored.
RatInterval root_enclosure(const Rat& a, unsigned n, int bits);

// Sound range of the real n-th root over an interval. Even n requires a
// nonnegative interval.
RatInterval iroot(const RatInterval& x, unsigned n, int bits);

}  // namespace cc4
