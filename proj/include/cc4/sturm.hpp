#pragma once

#include <optional>
#include <vector>

#include "cc4/poly.hpp"

namespace cc4 {

// Dense univariate polynomial, coefficient of x^k at index k. The workhorse
// for Sturm counting and isolation; conversions to/from Poly at the edges.
using UPoly = std::vector<Rat>;

UPoly upoly_from(const Poly& p, const std::string& var);
Poly upoly_to_poly(const UPoly& u, const std::string& var);

int updeg(const UPoly& u);
Rat upeval(const UPoly& u, const Rat& x);
UPoly upderiv(const UPoly& u);
UPoly upmul(const UPoly& a, const UPoly& b);
// Integer-primitive scaling with positive leading coefficient.
UPoly upnormalize(const UPoly& u);
// Remainder of a by b over Q.
UPoly uprem(const UPoly& a, const UPoly& b);
// Quotient, throws if division is not exact.
UPoly updivexact(const UPoly& a, const UPoly& b);
UPoly upgcd(const UPoly& a, const UPoly& b);
UPoly upsquarefree(const UPoly& u);

// 1 + max |a_i| / |a_n|; every real root lies in (-B, B).
Rat cauchy_bound(const UPoly& u);

// Certified interval around one real root of a squarefree polynomial.
struct IsolatingInterval {
  Rat lo, hi;
  UPoly target;
  std::string var = "x";

  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

// Number of distinct real roots of squarefree u in (lo, hi); absent bounds
// mean -inf / +inf. Endpoint roots are deflated out exactly, so the open
// interval count is always what is returned.
int sturm_count(const UPoly& u, std::optional<Rat> lo, std::optional<Rat> hi);
int sturm_count(const Poly& p, const std::string& var, std::optional<Rat> lo,
                std::optional<Rat> hi);

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& u,
                                                  std::optional<Rat> lo,
                                                  std::optional<Rat> hi);

IsolatingInterval refine_root(const IsolatingInterval& iv, const Rat& width);

}  // namespace cc4
