#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cc4/constraints.hpp"

namespace cc4 {

// Bicolored stroke/circle diagram on the fixed vertex set {1,2,3,4}.
// Strokes and circles are bitmasks; pair bit order is
// (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
struct Diagram {
  uint8_t z_strokes = 0;
  uint8_t w_strokes = 0;
  uint8_t z_circles = 0;
  uint8_t w_circles = 0;

  uint32_t code() const {
    return uint32_t(z_strokes) | uint32_t(w_strokes) << 6 | uint32_t(z_circles) << 12 |
           uint32_t(w_circles) << 16;
  }
  bool operator==(const Diagram& o) const { return code() == o.code(); }
  bool operator<(const Diagram& o) const { return code() < o.code(); }

  bool z_stroke(int a, int b) const;
  bool w_stroke(int a, int b) const;
  bool edge(int a, int b) const { return z_stroke(a, b) || w_stroke(a, b); }
  bool zw_edge(int a, int b) const { return z_stroke(a, b) && w_stroke(a, b); }
  bool z_circle(int v) const { return z_circles >> (v - 1) & 1; }
  bool w_circle(int v) const { return w_circles >> (v - 1) & 1; }
  void set_z_stroke(int a, int b);
  void set_w_stroke(int a, int b);
  void set_z_circle(int v) { z_circles |= 1 << (v - 1); }
  void set_w_circle(int v) { w_circles |= 1 << (v - 1); }

  int z_degree(int v) const;
  int w_degree(int v) const;
  std::string str() const;
};

int pair_index(int a, int b);

// Vertex relabeling; perm maps old vertex v to perm[v-1].
Diagram relabel(const Diagram& d, const std::array<int, 4>& perm);
Diagram color_swap(const Diagram& d);
// Lexicographically minimal encoding over S4 x {identity, color swap}.
Diagram canonical(const Diagram& d);

struct RuleVerdict {
  std::string rule;
  bool pass = true;
  std::vector<int> witness;  // vertices involved in a failure
  std::string detail;
};

// Structural rules: "I", "II", "IV", "VI", "IX", "X", "XI", "XII-corollary".
// Throws invalid_argument for rules whose content is analytic.
RuleVerdict check_rule(const Diagram& d, const std::string& rule);

// Maximal number of strokes at a vertex carrying both colors; 0 if none.
int c_number(const Diagram& d);

// Pairwise closeness provable from strokes: a c-stroke bounds the opposite
// coordinate's separation, so it makes its ends close in the other color.
// Returned per color as the union-find class id of each vertex.
struct Closeness {
  std::array<int, 4> z_class;
  std::array<int, 4> w_class;
  bool z_close(int a, int b) const { return z_class[a - 1] == z_class[b - 1]; }
  bool w_close(int a, int b) const { return w_class[a - 1] == w_class[b - 1]; }
};
Closeness closeness(const Diagram& d);

// Mass sums forced to zero: a stroke-connected component whose vertices are
// all circled and pairwise provably close in that color.
std::vector<std::vector<int>> forced_zero_sums(const Diagram& d);

struct ExclusionLemma {
  std::string name;
  Diagram shape;          // matched up to relabeling and color swap
  bool zero_total_mass;   // lemma applies only under this flag
  std::string rationale;
};
const std::vector<ExclusionLemma>& exclusion_lemmas();

struct Classification {
  enum class Status { Survivor, RuleExcluded, MassExcluded, LemmaExcluded };
  Status status = Status::Survivor;
  DiagramClass cls = DiagramClass::I;  // Survivor only
  std::vector<int> labeling;           // Survivor only
  RuleVerdict verdict;                 // RuleExcluded only
  std::string lemma;                   // LemmaExcluded only
  std::string detail;
  std::string str() const;
};

// Requires a diagram passing the structural rules; matches it against the
// problematic catalog under the given total-mass flag.
Classification classify(const Diagram& d, bool total_mass_zero);

struct Candidate {
  Diagram d;  // canonical form, circles closed
  int c = 0;
  std::vector<std::vector<int>> forced_sums;
  Classification cls;
};

// All diagrams up to relabeling and color swap: stroke shapes failing a
// structural rule (reported with witness), and every admissible circling of
// the rest, classified under the flag.
std::vector<Candidate> enumerate_candidates(bool total_mass_zero);

// Survivors per C stratum for the flag.
std::vector<Candidate> survivors(bool total_mass_zero);

}  // namespace cc4
