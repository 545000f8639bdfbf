#pragma once

#include <map>
#include <string>
#include <vector>

#include "cc4/mass.hpp"
#include "cc4/poly.hpp"

namespace cc4 {

// Mass constraint families attached to the problematic diagram classes.
enum class Family {
  V_IA,   // equal pair masses
  V_IB,   // signed three-halves-power relation on one pair split
  V_I0,   // V_IB intersected with the vanishing-moment extra equation
  I_I,    // two-term cube-root sum (cubed to one polynomial)
  V_II,   // equal diagonal products
  V_II0,  // V_II intersected with the four-term cube-root sum
  I_II,   // four-term cube-root sum over the cycle edges
  V_III,  // reciprocal square-root sum over a triangle
  V_IV,   // vanishing triangle mass sum
  V_V,    // apex-base relation m_i^2 (m_j+m_k)^4 = m_j^3 m_k^3
  V_m0,   // vanishing total mass
  V_IA0,  // equal pairs with opposite pair masses
  V_ZW2,  // opposite pair sums zero with equal squared masses
};

std::string family_name(Family f);

// A family plus its canonical labeling. Pair labelings keep each pair sorted
// and the pair holding the smallest index first; triangles are sorted; the
// pointed form [i,jk] keeps the apex first and the base sorted.
struct ConstraintSetId {
  Family family;
  std::vector<int> labeling;

  static ConstraintSetId pair_sets(Family f, int i, int j, int p, int k);
  static ConstraintSetId triangle(Family f, int i, int j, int k);
  static ConstraintSetId pointed(Family f, int apex, int j, int k);
  static ConstraintSetId plain(Family f);

  std::string str() const;
  bool operator==(const ConstraintSetId& o) const {
    return family == o.family && labeling == o.labeling;
  }
  bool operator<(const ConstraintSetId& o) const {
    return family != o.family ? family < o.family : labeling < o.labeling;
  }
};

// One sign branch of a constraint set, radical ambiguities resolved into
// polynomial equations. Either over the mass variables m1..m4 (plus cube-root
// auxiliaries c..), or over the normalized coordinates u2,u3,u4 with u1 = 1.
struct SignedPolySystem {
  std::vector<std::string> vars;
  std::vector<Poly> equations;                         // each = 0
  std::vector<Poly> strict_negations;                  // each != 0
  std::vector<std::pair<Poly, int>> strict_inequalities;  // sign(poly) as given
  // Mass-sign products required for the branch: (i, j, s) means
  // sign(m_i * m_j) == s. Indices are 1-based; i == j constrains sign(m_i).
  std::vector<std::array<int, 3>> sign_products;
  std::vector<int> sigma_branch;
  std::string note;

  std::string str() const;
};

// All branches whose union is the constraint set.
std::vector<SignedPolySystem> constraint_system(const ConstraintSetId& id);

enum class Membership { In, Out, Boundary };

std::string membership_name(Membership m);

// Exact membership for rational quadruples; interval-refined for algebraic
// ones, returning Boundary when undecided at max_bits precision.
Membership membership(const ConstraintSetId& id, const MassQuadruple& q, int max_bits = 400);

// Diagram classes that survive the structural rules; the zero-total-mass
// catalog is disjoint from the nonzero one except for the fully edged shape.
enum class DiagramClass {
  I, II, III, IV, V, VI,                    // nonzero total mass
  I0, II0,                                  // zero total mass
  ZW2_PAR, ZW2_QUAD, ZW2_QUAD_CIRC,         // two opposite zw-edge shapes
  FE, FE_HALF, FE_FULL,                     // fully edged, by circling
};

std::string diagram_class_name(DiagramClass c);

struct DiagramConstraints {
  std::vector<ConstraintSetId> mass_sets;          // union semantics
  std::vector<ConstraintSetId> moment_zero_extra;  // additional sets when I = 0
  std::vector<std::vector<int>> forced_zero_sums;  // index sets with zero mass sum
  std::map<std::string, std::string> distance_orders;  // "r12" -> growth tag
  std::string note;
};

// Labeling format matches the class: {i,j,p,k} for pair classes, {i,j,k} for
// triangle classes, {apex,j,k} for the pointed class, {} otherwise.
DiagramConstraints diagram_constraints(DiagramClass c, const std::vector<int>& labeling,
                                       bool total_mass_zero);

// Exact sign of a polynomial in real radicals: each def binds a variable to
// the real degree-th root of a rational.
struct RadicalDef {
  std::string var;
  Rat radicand;
  unsigned degree;
};
int radical_sign(const Poly& expr, const std::vector<RadicalDef>& defs);

}  // namespace cc4
