#include "cc4/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cc4/rational.hpp"

namespace cc4 {

namespace {

constexpr int kPairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

}  // namespace

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i)
    if (kPairs[i][0] == a && kPairs[i][1] == b) return i;
  throw std::invalid_argument("pair_index: vertices must be distinct in 1..4");
}

bool Diagram::z_stroke(int a, int b) const { return z_strokes >> pair_index(a, b) & 1; }
bool Diagram::w_stroke(int a, int b) const { return w_strokes >> pair_index(a, b) & 1; }
void Diagram::set_z_stroke(int a, int b) { z_strokes |= 1 << pair_index(a, b); }
void Diagram::set_w_stroke(int a, int b) { w_strokes |= 1 << pair_index(a, b); }

int Diagram::z_degree(int v) const {
  int n = 0;
  for (int u = 1; u <= 4; ++u)
    if (u != v && z_stroke(u, v)) ++n;
  return n;
}

int Diagram::w_degree(int v) const {
  int n = 0;
  for (int u = 1; u <= 4; ++u)
    if (u != v && w_stroke(u, v)) ++n;
  return n;
}

std::string Diagram::str() const {
  std::ostringstream os;
  auto strokes = [&](uint8_t mask, char tag) {
    bool any = false;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) {
        os << (any ? "," : "") << tag << '(' << kPairs[i][0] << kPairs[i][1] << ')';
        any = true;
      }
    if (!any) os << tag << "()";
  };
  auto circles = [&](uint8_t mask, char tag) {
    os << ' ' << tag << "o{";
    for (int v = 1; v <= 4; ++v)
      if (mask >> (v - 1) & 1) os << v;
    os << '}';
  };
  strokes(z_strokes, 'z');
  os << ' ';
  strokes(w_strokes, 'w');
  circles(z_circles, 'z');
  circles(w_circles, 'w');
  return os.str();
}

Diagram relabel(const Diagram& d, const std::array<int, 4>& perm) {
  Diagram out;
  for (int i = 0; i < 6; ++i) {
    int a = perm[kPairs[i][0] - 1], b = perm[kPairs[i][1] - 1];
    if (d.z_strokes >> i & 1) out.set_z_stroke(a, b);
    if (d.w_strokes >> i & 1) out.set_w_stroke(a, b);
  }
  for (int v = 1; v <= 4; ++v) {
    if (d.z_circle(v)) out.set_z_circle(perm[v - 1]);
    if (d.w_circle(v)) out.set_w_circle(perm[v - 1]);
  }
  return out;
}

Diagram color_swap(const Diagram& d) {
  return Diagram{d.w_strokes, d.z_strokes, d.w_circles, d.z_circles};
}

Diagram canonical(const Diagram& d) {
  std::array<int, 4> perm = {1, 2, 3, 4};
  Diagram best = d;
  do {
    for (const Diagram& base : {relabel(d, perm), relabel(color_swap(d), perm)})
      if (base < best) best = base;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int c_number(const Diagram& d) {
  int c = 0;
  for (int v = 1; v <= 4; ++v) {
    int z = d.z_degree(v), w = d.w_degree(v);
    if (z > 0 && w > 0) c = std::max(c, z + w);
  }
  return c;
}

namespace {

struct UnionFind {
  std::array<int, 4> p;
  UnionFind() { std::iota(p.begin(), p.end(), 0); }
  int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Edge type on a pair: 0 none, 1 z, 2 w, 3 zw.
int edge_type(const Diagram& d, int a, int b) {
  return (d.z_stroke(a, b) ? 1 : 0) | (d.w_stroke(a, b) ? 2 : 0);
}

RuleVerdict pass(const std::string& rule) { return {rule, true, {}, ""}; }

RuleVerdict fail(const std::string& rule, std::vector<int> witness, std::string detail) {
  return {rule, false, std::move(witness), std::move(detail)};
}

RuleVerdict rule_I(const Diagram& d) {
  if (d.z_strokes == 0) return fail("I", {}, "no z-stroke in the diagram");
  if (d.w_strokes == 0) return fail("I", {}, "no w-stroke in the diagram");
  for (int v = 1; v <= 4; ++v) {
    if (d.z_degree(v) == 1 && !d.z_circle(v))
      return fail("I", {v}, "z-stroke end with neither a second z-stroke nor a z-circle");
    if (d.w_degree(v) == 1 && !d.w_circle(v))
      return fail("I", {v}, "w-stroke end with neither a second w-stroke nor a w-circle");
    if (d.z_circle(v) && d.z_degree(v) == 0)
      return fail("I", {v}, "isolated z-circle");
    if (d.w_circle(v) && d.w_degree(v) == 0)
      return fail("I", {v}, "isolated w-circle");
  }
  return pass("I");
}

Closeness closeness_of(const Diagram& d) {
  UnionFind z, w;
  for (int i = 0; i < 6; ++i) {
    int a = kPairs[i][0] - 1, b = kPairs[i][1] - 1;
    // A stroke bounds the opposite coordinate's separation by Estimate 2.
    if (d.w_strokes >> i & 1) z.unite(a, b);
    if (d.z_strokes >> i & 1) w.unite(a, b);
  }
  Closeness c;
  for (int v = 0; v < 4; ++v) {
    c.z_class[v] = z.find(v);
    c.w_class[v] = w.find(v);
  }
  return c;
}

RuleVerdict rule_II(const Diagram& d) {
  Closeness c = closeness_of(d);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      if (c.z_close(a, b) && d.z_circle(a) != d.z_circle(b))
        return fail("II", {a, b}, "z-close pair with unequal z-circling");
      if (c.w_close(a, b) && d.w_circle(a) != d.w_circle(b))
        return fail("II", {a, b}, "w-close pair with unequal w-circling");
    }
  return pass("II");
}

std::vector<std::vector<int>> stroke_components(uint8_t strokes) {
  UnionFind u;
  for (int i = 0; i < 6; ++i)
    if (strokes >> i & 1) u.unite(kPairs[i][0] - 1, kPairs[i][1] - 1);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < 4; ++v) by_root[u.find(v)].push_back(v + 1);
  std::vector<std::vector<int>> out;
  for (auto& [_, comp] : by_root) out.push_back(comp);
  return out;
}

RuleVerdict rule_IV(const Diagram& d) {
  for (int color = 0; color < 2; ++color) {
    uint8_t strokes = color ? d.w_strokes : d.z_strokes;
    for (const auto& comp : stroke_components(strokes)) {
      int circles = 0;
      for (int v : comp)
        if (color ? d.w_circle(v) : d.z_circle(v)) ++circles;
      if (circles == 1)
        return fail("IV", comp, std::string("lone ") + (color ? 'w' : 'z') +
                                    "-circle in its stroke component");
    }
  }
  return pass("IV");
}

RuleVerdict rule_VI(const Diagram& d) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = b + 1; c <= 4; ++c) {
        if (a == b || a == c) continue;
        if (d.zw_edge(a, b) && d.zw_edge(a, c) && !d.zw_edge(b, c))
          return fail("VI", {a, b, c}, "two consecutive zw-edges without the closing third");
      }
  return pass("VI");
}

RuleVerdict rule_IX(const Diagram& d) {
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = b + 1; c <= 4; ++c) {
        int ab = edge_type(d, a, b), bc = edge_type(d, b, c), ca = edge_type(d, c, a);
        if (ab && bc && ca && !(ab == bc && bc == ca))
          return fail("IX", {a, b, c}, "triangle with edges of different types");
      }
  return pass("IX");
}

RuleVerdict rule_X(const Diagram& d) {
  for (int p = 1; p <= 4; ++p) {
    std::vector<int> tri;
    for (int v = 1; v <= 4; ++v)
      if (v != p) tri.push_back(v);
    bool full = edge_type(d, tri[0], tri[1]) && edge_type(d, tri[1], tri[2]) &&
                edge_type(d, tri[0], tri[2]);
    if (!full) continue;
    int attach = 0;
    for (int v : tri)
      if (edge_type(d, p, v)) ++attach;
    if (attach < 2) continue;
    int want = edge_type(d, tri[0], tri[1]);
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        if (edge_type(d, a, b) != want)
          return fail("X", {a, b}, "fully edged sub-diagram with a missing or differently "
                                   "typed edge");
  }
  return pass("X");
}

RuleVerdict rule_XI(const Diagram& d) {
  static const int cycles[3][4] = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}};
  for (const auto& cy : cycles) {
    int t[4];
    bool all = true;
    for (int i = 0; i < 4; ++i) {
      t[i] = edge_type(d, cy[i], cy[(i + 1) % 4]);
      if (!t[i]) all = false;
    }
    if (all && (t[0] != t[2] || t[1] != t[3]))
      return fail("XI", {cy[0], cy[1], cy[2], cy[3]},
                  "quadrilateral with differently typed opposite edges");
  }
  return pass("XI");
}

RuleVerdict rule_XII_cor(const Diagram& d) {
  std::vector<int> w;
  for (int i = 0; i < 6; ++i)
    if ((d.z_strokes & d.w_strokes) >> i & 1) {
      w.push_back(kPairs[i][0]);
      w.push_back(kPairs[i][1]);
    }
  if (w.size() == 2) return fail("XII-corollary", w, "a zw-edge cannot be the only one");
  return pass("XII-corollary");
}

const char* kStructural[] = {"I", "II", "IV", "VI", "IX", "X", "XI", "XII-corollary"};

}  // namespace

Closeness closeness(const Diagram& d) { return closeness_of(d); }

RuleVerdict check_rule(const Diagram& d, const std::string& rule) {
  if (rule == "I") return rule_I(d);
  if (rule == "II") return rule_II(d);
  if (rule == "IV") return rule_IV(d);
  if (rule == "VI") return rule_VI(d);
  if (rule == "IX") return rule_IX(d);
  if (rule == "X") return rule_X(d);
  if (rule == "XI") return rule_XI(d);
  if (rule == "XII-corollary") return rule_XII_cor(d);
  if (rule == "III" || rule == "V" || rule == "VII" || rule == "VIII" || rule == "XII")
    throw std::invalid_argument("not a structural predicate: Rule " + rule);
  throw std::invalid_argument("unknown rule: " + rule);
}

std::vector<std::vector<int>> forced_zero_sums(const Diagram& d) {
  Closeness c = closeness_of(d);
  std::set<std::vector<int>> out;
  for (int color = 0; color < 2; ++color) {
    uint8_t strokes = color ? d.w_strokes : d.z_strokes;
    for (const auto& comp : stroke_components(strokes)) {
      if (comp.size() < 2) continue;
      bool all = true;
      for (size_t i = 0; i < comp.size() && all; ++i) {
        if (!(color ? d.w_circle(comp[i]) : d.z_circle(comp[i]))) all = false;
        for (size_t j = i + 1; j < comp.size() && all; ++j)
          if (!(color ? c.w_close(comp[i], comp[j]) : c.z_close(comp[i], comp[j])))
            all = false;
      }
      if (all) out.insert(comp);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Row reduction over Q; true if target is a linear combination of rows.
bool in_span(std::vector<std::array<Rat, 4>> rows, std::array<Rat, 4> t) {
  size_t lead = 0;
  for (int col = 0; col < 4 && lead < rows.size(); ++col) {
    size_t pivot = lead;
    while (pivot < rows.size() && sign(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sign(rows[r][col]) == 0) continue;
      Rat f = rows[r][col] / rows[lead][col];
      for (int k = 0; k < 4; ++k) rows[r][k] -= f * rows[lead][k];
    }
    if (sign(t[col]) != 0) {
      Rat f = t[col] / rows[lead][col];
      for (int k = 0; k < 4; ++k) t[k] -= f * rows[lead][k];
    }
    ++lead;
  }
  for (int k = 0; k < 4; ++k)
    if (sign(t[k]) != 0) return false;
  return true;
}

std::array<Rat, 4> sum_vector(const std::vector<int>& s) {
  std::array<Rat, 4> v{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (int i : s) v[i - 1] = 1;
  return v;
}

// A forced-sums system contradicts the flag when it pins the total mass to
// zero (nonzero flag) or some single mass to zero (masses are nonzero).
bool mass_contradiction(const std::vector<std::vector<int>>& sums, bool total_mass_zero,
                        std::string* why) {
  std::vector<std::array<Rat, 4>> rows;
  for (const auto& s : sums) rows.push_back(sum_vector(s));
  std::array<Rat, 4> ones{Rat(1), Rat(1), Rat(1), Rat(1)};
  if (!total_mass_zero) {
    if (in_span(rows, ones)) {
      *why = "forced sums pin the total mass to zero";
      return true;
    }
  } else {
    rows.push_back(ones);
  }
  for (int i = 0; i < 4; ++i) {
    std::array<Rat, 4> e{Rat(0), Rat(0), Rat(0), Rat(0)};
    e[i] = 1;
    if (in_span(rows, e)) {
      *why = "forced sums pin m" + std::to_string(i + 1) + " to zero";
      return true;
    }
  }
  return false;
}

Diagram zw_triangle() {
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(1, 3);
  d.set_w_stroke(1, 3);
  d.set_z_stroke(2, 3);
  d.set_w_stroke(2, 3);
  return d;
}

Diagram zw_quad() {
  Diagram d;
  d.set_z_stroke(1, 2);
  d.set_w_stroke(1, 2);
  d.set_z_stroke(2, 3);
  d.set_z_stroke(3, 4);
  d.set_w_stroke(3, 4);
  d.set_z_stroke(1, 4);
  for (int v = 1; v <= 4; ++v) d.set_w_circle(v);
  return d;
}

}  // namespace

const std::vector<ExclusionLemma>& exclusion_lemmas() {
  static const std::vector<ExclusionLemma> table = [] {
    std::vector<ExclusionLemma> t;
    {
      Diagram d = zw_triangle();
      for (int v = 1; v <= 3; ++v) d.set_z_circle(v);
      t.push_back({"one-color-circled triangle", d, false,
                   "the pendant-coordinate bookkeeping makes the moment of inertia "
                   "unbounded along such a sequence"});
    }
    {
      Diagram d;
      d.set_z_stroke(1, 2);
      d.set_w_stroke(1, 2);
      d.set_z_stroke(2, 3);
      d.set_z_stroke(3, 4);
      d.set_w_stroke(3, 4);
      d.z_circles = d.w_circles = 0b1111;
      t.push_back({"double-stroke-ended chain", d, true,
                   "the end pairs' maximal-order terms cannot balance when the total "
                   "mass vanishes"});
    }
    {
      Diagram d = zw_quad();
      d.set_z_circle(1);
      d.set_z_circle(2);
      t.push_back({"quadrilateral with one circled pair", d, true,
                   "the circled pair would dominate every z-coordinate, against the "
                   "equal-order requirement on the cycle"});
    }
    {
      Diagram d = zw_triangle();
      t.push_back({"uncircled triangle with a free vertex", d, true,
                   "balancing the free vertex forces the triangle mass sum to vanish, "
                   "leaving the fourth mass zero"});
    }
    {
      Diagram d = zw_triangle();
      d.set_w_stroke(1, 4);
      d.w_circles = 0b1111;
      t.push_back({"circled triangle with a pendant stroke", d, true,
                   "the pendant stroke repeats the free-vertex balance and forces the "
                   "triangle mass sum to vanish"});
    }
    return t;
  }();
  return table;
}

std::string Classification::str() const {
  switch (status) {
    case Status::Survivor:
      return "problematic " + diagram_class_name(cls);
    case Status::RuleExcluded:
      return "excluded by Rule " + verdict.rule + ": " + verdict.detail;
    case Status::MassExcluded:
      return "excluded: " + detail;
    case Status::LemmaExcluded:
      return "excluded by lemma: " + lemma;
  }
  return "?";
}

namespace {

std::vector<int> zw_pairs_of(const Diagram& d) {
  std::vector<int> out;
  for (int i = 0; i < 6; ++i)
    if ((d.z_strokes & d.w_strokes) >> i & 1) out.push_back(i);
  return out;
}

int popcount4(uint8_t m) { return __builtin_popcount(m & 0xf); }

Classification survivor(DiagramClass cls, std::vector<int> labeling) {
  Classification c;
  c.status = Classification::Status::Survivor;
  c.cls = cls;
  c.labeling = std::move(labeling);
  return c;
}

// Matches a rule-clean, mass-consistent, lemma-free diagram against the
// problematic catalog. Anything unmatched is a genuine discrepancy.
Classification match_survivor(const Diagram& d, bool total_mass_zero) {
  auto zw = zw_pairs_of(d);
  int strokes = __builtin_popcount(d.z_strokes) + __builtin_popcount(d.w_strokes);

  if (zw.size() == 6) {
    bool zc = d.z_circles == 0b1111, wc = d.w_circles == 0b1111;
    if (!d.z_circles && !d.w_circles)
      return survivor(total_mass_zero ? DiagramClass::FE : DiagramClass::VI, {});
    if (total_mass_zero && zc && wc) return survivor(DiagramClass::FE_FULL, {});
    if (total_mass_zero && (zc != wc)) return survivor(DiagramClass::FE_HALF, {});
  }

  if (zw.size() == 3) {
    // Fully zw-edged triangle; the rules leave the triangle alone or with one
    // pendant stroke.
    std::set<int> tri_set;
    for (int i : zw) {
      tri_set.insert(kPairs[i][0]);
      tri_set.insert(kPairs[i][1]);
    }
    std::vector<int> tri(tri_set.begin(), tri_set.end());
    int p = 10 - tri[0] - tri[1] - tri[2];
    if (strokes == 6) {
      if (!d.z_circles && !d.w_circles && !total_mass_zero)
        return survivor(DiagramClass::III,
                        ConstraintSetId::triangle(Family::V_III, tri[0], tri[1], tri[2])
                            .labeling);
    }
    if (strokes == 6 && popcount4(d.z_circles) == 3 && popcount4(d.w_circles) == 3 &&
        !total_mass_zero)
      return survivor(DiagramClass::IV, ConstraintSetId::triangle(Family::V_IV, tri[0],
                                                                  tri[1], tri[2])
                                            .labeling);
    if (strokes == 7 && !total_mass_zero) {
      for (int apex : tri)
        if (d.edge(apex, p)) {
          std::vector<int> base;
          for (int v : tri)
            if (v != apex) base.push_back(v);
          return survivor(DiagramClass::V,
                          ConstraintSetId::pointed(Family::V_V, apex, base[0], base[1])
                              .labeling);
        }
    }
  }

  if (zw.size() == 2 && strokes == 4) {
    // Two parallel zw-edges.
    int a = kPairs[zw[0]][0], b = kPairs[zw[0]][1];
    int p = kPairs[zw[1]][0], k = kPairs[zw[1]][1];
    if (total_mass_zero)
      return survivor(DiagramClass::ZW2_PAR,
                      ConstraintSetId::pair_sets(Family::V_ZW2, a, b, p, k).labeling);
  }

  if (zw.size() == 2 && strokes == 6 && total_mass_zero) {
    // Quadrilateral with two opposite zw-edges; the mono-colored circles vary.
    int a = kPairs[zw[0]][0], b = kPairs[zw[0]][1];
    int p = kPairs[zw[1]][0], k = kPairs[zw[1]][1];
    uint8_t mono_circles =
        __builtin_popcount(d.z_strokes) > __builtin_popcount(d.w_strokes) ? d.z_circles
                                                                          : d.w_circles;
    auto labeling = ConstraintSetId::pair_sets(Family::V_ZW2, a, b, p, k).labeling;
    if (popcount4(mono_circles) == 0) return survivor(DiagramClass::ZW2_QUAD, labeling);
    if (popcount4(mono_circles) == 4)
      return survivor(DiagramClass::ZW2_QUAD_CIRC, labeling);
  }

  if (zw.empty() && strokes == 2) {
    // One z-stroke and one w-stroke on disjoint pairs.
    int zi = -1, wi = -1;
    for (int i = 0; i < 6; ++i) {
      if (d.z_strokes >> i & 1) zi = i;
      if (d.w_strokes >> i & 1) wi = i;
    }
    auto labeling = ConstraintSetId::pair_sets(Family::V_IB, kPairs[zi][0], kPairs[zi][1],
                                               kPairs[wi][0], kPairs[wi][1])
                        .labeling;
    return survivor(total_mass_zero ? DiagramClass::I0 : DiagramClass::I, labeling);
  }

  if (zw.empty() && strokes == 4) {
    // Alternating four-cycle; the diagonals are the two edgeless pairs.
    std::vector<std::array<int, 2>> diag;
    for (int i = 0; i < 6; ++i)
      if (!(d.z_strokes >> i & 1) && !(d.w_strokes >> i & 1))
        diag.push_back({kPairs[i][0], kPairs[i][1]});
    if (diag.size() == 2) {
      auto labeling = ConstraintSetId::pair_sets(Family::V_II, diag[0][0], diag[0][1],
                                                 diag[1][0], diag[1][1])
                          .labeling;
      return survivor(total_mass_zero ? DiagramClass::II0 : DiagramClass::II, labeling);
    }
  }

  throw std::logic_error("diagram survives the rules but matches no catalog class: " +
                         d.str());
}

Classification classify_clean(const Diagram& d, bool total_mass_zero) {
  auto sums = forced_zero_sums(d);
  std::string why;
  if (mass_contradiction(sums, total_mass_zero, &why)) {
    Classification c;
    c.status = Classification::Status::MassExcluded;
    c.detail = why;
    return c;
  }
  Diagram cd = canonical(d);
  for (const auto& lem : exclusion_lemmas())
    if (lem.zero_total_mass == total_mass_zero && canonical(lem.shape) == cd) {
      Classification c;
      c.status = Classification::Status::LemmaExcluded;
      c.lemma = lem.name;
      c.detail = lem.rationale;
      return c;
    }
  return match_survivor(d, total_mass_zero);
}

// Admissible circlings of a stroke shape, or the verdict that blocks them.
bool close_circles(const Diagram& shape, std::vector<Diagram>* out, RuleVerdict* bad) {
  Closeness cl = closeness_of(shape);
  // Per color: class state -1 undecided, 0 uncircled, 1 circled.
  std::array<std::map<int, int>, 2> state;
  for (int color = 0; color < 2; ++color)
    for (int v = 1; v <= 4; ++v) {
      int cls = color ? cl.w_class[v - 1] : cl.z_class[v - 1];
      int deg = color ? shape.w_degree(v) : shape.z_degree(v);
      int want = deg == 0 ? 0 : deg == 1 ? 1 : -1;
      auto [it, fresh] = state[color].emplace(cls, want);
      if (fresh) continue;
      if (want == -1 || it->second == want) continue;
      if (it->second == -1) {
        it->second = want;
        continue;
      }
      *bad = fail("II", {v}, std::string(1, color ? 'w' : 'z') +
                                 "-closeness forces a circle on a stroke-free vertex");
      return false;
    }
  std::array<std::vector<int>, 2> free_classes;
  for (int color = 0; color < 2; ++color)
    for (auto& [cls, st] : state[color])
      if (st == -1) free_classes[color].push_back(cls);
  size_t nz = free_classes[0].size(), nw = free_classes[1].size();
  for (size_t bits = 0; bits < (size_t(1) << (nz + nw)); ++bits) {
    Diagram d = shape;
    for (int color = 0; color < 2; ++color)
      for (int v = 1; v <= 4; ++v) {
        int cls = color ? cl.w_class[v - 1] : cl.z_class[v - 1];
        int st = state[color].at(cls);
        if (st == -1) {
          const auto& fc = free_classes[color];
          size_t idx = std::find(fc.begin(), fc.end(), cls) - fc.begin();
          st = bits >> (color ? nz + idx : idx) & 1;
        }
        if (st == 1) color ? d.set_w_circle(v) : d.set_z_circle(v);
      }
    if (!rule_IV(d).pass) continue;
    out->push_back(d);
  }
  if (out->empty()) {
    *bad = fail("IV", {}, "no circling satisfies the circle-count requirement");
    return false;
  }
  return true;
}

}  // namespace

Classification classify(const Diagram& d, bool total_mass_zero) {
  for (const char* r : kStructural) {
    RuleVerdict v = check_rule(d, r);
    if (!v.pass) {
      Classification c;
      c.status = Classification::Status::RuleExcluded;
      c.verdict = v;
      return c;
    }
  }
  return classify_clean(d, total_mass_zero);
}

std::vector<Candidate> enumerate_candidates(bool total_mass_zero) {
  std::vector<Candidate> out;
  std::set<uint32_t> seen;
  for (int z = 1; z < 64; ++z)
    for (int w = 1; w < 64; ++w) {
      Diagram shape{uint8_t(z), uint8_t(w), 0, 0};
      if (!(canonical(shape) == shape)) continue;
      Candidate base;
      base.c = c_number(shape);
      bool broke = false;
      for (const char* r : {"VI", "IX", "X", "XI", "XII-corollary"}) {
        RuleVerdict v = check_rule(shape, r);
        if (!v.pass) {
          base.d = shape;
          base.cls.status = Classification::Status::RuleExcluded;
          base.cls.verdict = v;
          out.push_back(base);
          broke = true;
          break;
        }
      }
      if (broke) continue;
      std::vector<Diagram> variants;
      RuleVerdict bad;
      if (!close_circles(shape, &variants, &bad)) {
        base.d = shape;
        base.cls.status = Classification::Status::RuleExcluded;
        base.cls.verdict = bad;
        out.push_back(base);
        continue;
      }
      for (const Diagram& v : variants) {
        Diagram cv = canonical(v);
        if (!seen.insert(cv.code()).second) continue;
        Candidate c;
        c.d = cv;
        c.c = c_number(cv);
        c.forced_sums = forced_zero_sums(cv);
        c.cls = classify_clean(cv, total_mass_zero);
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.c != b.c) return a.c < b.c;
    return a.d.code() < b.d.code();
  });
  return out;
}

std::vector<Candidate> survivors(bool total_mass_zero) {
  std::vector<Candidate> out;
  for (const auto& c : enumerate_candidates(total_mass_zero))
    if (c.cls.status == Classification::Status::Survivor) out.push_back(c);
  return out;
}

}  // namespace cc4
