#pragma once

#include "cc4/poly.hpp"

namespace cc4 {

// Sylvester resultant of p and q with respect to var, computed by the
// subresultant PRS (exact divisions only, no fraction field). Sign follows
// the Sylvester determinant: res(p,q) = lc(p)^deg(q) * prod q(root_i(p)).
// Throws if either input is zero or neither depends on var.
Poly resultant(const Poly& p, const Poly& q, const std::string& var);

// p / gcd(p, dp/dvar), scaled to integer primitive with positive leading
// coefficient. Same real roots as p, all simple.
Poly squarefree_part(const Poly& p, const std::string& var);

}  // namespace cc4
