#include "cc4/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cc4 {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  // Plain integer or a/b goes straight to mpq.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    Rat r;
    if (r.set_str(s, 10) != 0)
      throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
  }
  // Decimal literal: mantissa shifted by the fractional length, then 10^exp.
  std::string t = s;
  int expo = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    expo = std::stoi(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  auto dpos = t.find('.');
  int frac = 0;
  if (dpos != std::string::npos) {
    frac = static_cast<int>(t.size() - dpos - 1);
    t.erase(dpos, 1);
  }
  mpz_class mant;
  if (mant.set_str(t, 10) != 0)
    throw std::invalid_argument("rat_parse: bad decimal '" + s + "'");
  Rat r(mant);
  int shift = expo - frac;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    r *= Rat(p10);
  else
    r /= Rat(p10);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat pow2(int e) {
  Rat r;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned>(-e));
  return r;
}

double to_double(const Rat& r) { return r.get_d(); }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  std::ostringstream os;
  os << std::hex << fnv1a(bytes);
  return os.str();
}

}  // namespace cc4
