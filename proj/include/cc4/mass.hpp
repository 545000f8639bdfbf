#pragma once

#include <array>
#include <optional>
#include <string>

#include "cc4/interval.hpp"
#include "cc4/sturm.hpp"

namespace cc4 {

// A real number that is either an exact rational or the unique root of a
// squarefree polynomial inside a certified isolating interval.
class ExactReal {
 public:
  ExactReal() : rat_(Rat(0)) {}
  ExactReal(Rat r) : rat_(std::move(r)) {}
  ExactReal(long n) : rat_(Rat(n)) {}
  explicit ExactReal(IsolatingInterval iv);

  bool is_rational() const { return rat_.has_value(); }
  const Rat& rational() const;
  const IsolatingInterval& root() const;

  // Enclosure no wider than `width`; exact point interval for rationals.
  RatInterval enclosure(const Rat& width) const;
  int sgn() const;
  double approx() const;
  std::string str() const;

 private:
  std::optional<Rat> rat_;
  std::optional<IsolatingInterval> alg_;
};

// Exact sign of a - b; decides equality of algebraic representations through
// the gcd of their defining polynomials.
int compare(const ExactReal& a, const ExactReal& b);

struct MassQuadruple {
  std::array<ExactReal, 4> m;

  static MassQuadruple of(Rat a, Rat b, Rat c, Rat d);
  bool all_nonzero() const;
  bool all_rational() const;
  // Interval assignment for the variables m1..m4.
  std::map<std::string, RatInterval> box(const Rat& width) const;
  std::string str() const;
};

// Normalized square-root coordinates: mu[i] = sqrt(|m_{i+1}| / |m_1|), so
// mu[0] == 1, together with the exact squares and the mass signs.
struct MuSigma {
  std::array<ExactReal, 4> mu;
  std::array<ExactReal, 4> musq;
  std::array<int, 4> sig;

  std::string str() const;
};

// Requires every mass nonzero; |m_1| must be rational when any mass is
// algebraic (that is the only case the toolkit needs).
MuSigma to_mu_sigma(const MassQuadruple& q);

// Inverse up to the overall scale |m_1|; exact for rational squares.
MassQuadruple from_mu_sigma(const MuSigma& ms, const Rat& m1_abs);

}  // namespace cc4
