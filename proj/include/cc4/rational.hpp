#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace cc4 {

// Arbitrary-precision rational in canonical form: positive denominator,
// gcd(|num|, den) = 1. mpq_class maintains exactly this after canonicalize().
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Accepts "a", "a/b", and decimal literals like "1.25" or "-0.5e-3".
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return abs(r); }

Rat rat_pow(const Rat& base, unsigned e);

// Power of two as a rational, e allowed negative (2^-40 etc).
Rat pow2(int e);

double to_double(const Rat& r);

// FNV-1a over a byte string; used for certificate step digests.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

}  // namespace cc4
