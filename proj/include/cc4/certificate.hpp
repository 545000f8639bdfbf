#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cc4/constraints.hpp"
#include "cc4/mass.hpp"

namespace cc4 {

// FNV-1a over the canonical text form; the digest currency of all traces.
uint64_t text_digest(const std::string& s);
uint64_t poly_digest(const Poly& p);
uint64_t system_digest(const SignedPolySystem& s);

// Open search range (lo, hi) for one variable; absent hi means unbounded
// above, resolved through root bounds on the eliminants.
struct VarRange {
  Rat lo = Rat(0);
  std::optional<Rat> hi;
};
using Region = std::map<std::string, VarRange>;

// One replayable computation step. `operands` are digests of previously
// known polynomials (inputs, defines, or earlier results); `result_text` is
// the canonical form of the produced object so a verifier can rebuild the
// table, and `result` is its digest.
struct TraceStep {
  std::string op;  // define | resultant | gcd | content | squarefree |
                   // substitute | derivative | sturm | positivity | refute-box
  std::string var;
  std::vector<uint64_t> operands;
  uint64_t result = 0;
  std::string result_text;
  std::string detail;
};

struct SolutionRecord {
  std::map<std::string, ExactReal> values;
  std::vector<int> sigma;
  int branch = -1;  // index into Certificate::inputs
  std::string str() const;
};

enum class Verdict { Empty, Solutions, DegreeReport, Monotone, NotMonotone };
std::string verdict_name(Verdict v);

struct Certificate {
  std::string case_id;
  std::vector<SignedPolySystem> inputs;
  std::vector<uint64_t> input_digests;
  std::vector<TraceStep> trace;
  std::vector<SolutionRecord> roots;
  Verdict verdict = Verdict::Empty;
  int degree = -1;                      // DegreeReport payload
  std::optional<int> reference_degree;  // published figure, when one exists
  int direction = 0;                    // Monotone: +1 increasing, -1 decreasing
  std::string note;

  std::string to_json() const;
  std::string str() const;
};

Certificate certificate_from_json(const std::string& text);

struct VerifyResult {
  bool pass = true;
  std::string failure;  // first divergent step or check
};

// Independent replay: rebuilds the digest table from the inputs, recomputes
// every trace operation, and re-checks solutions (equations to
// interval-certified zero at width 2^-200, strict conditions excluding zero)
// and Empty claims.
VerifyResult verify_certificate(const Certificate& c);

// Verdict Empty only when every sign branch is refuted: a positivity
// argument, an eliminant with no roots in the region, or interval refutation
// of every candidate root box down to width 2^-400. Surviving boxes are
// returned as Solutions, never dropped.
Certificate certify_empty(const std::string& case_id,
                          const std::vector<SignedPolySystem>& systems,
                          const Region& region);

// Strict monotonicity of numer/denom on (range.lo, range.hi): denominator
// certified nonvanishing, derivative numerator certified rootless, direction
// from a sample sign. A derivative-numerator root inside yields NotMonotone
// with its isolating interval recorded in the first root entry.
Certificate certify_monotone(const Poly& numer, const Poly& denom,
                             const std::string& var, const VarRange& range);

// Building blocks shared with the case registry; each records its steps.

// Pairwise resultants of eqs with respect to var, combined by gcd, content
// in the remaining variables stripped, squarefree part taken. Throws when
// elimination degenerates to zero.
Poly resultant_eliminate(const std::vector<Poly>& eqs, const std::string& var,
                         std::vector<TraceStep>* trace);

// Registers a polynomial introduced by hand (a substitution image, a derived
// relation) so later steps can reference it by digest.
uint64_t trace_define(const Poly& p, const std::string& why,
                      std::vector<TraceStep>* trace);

// Strict positivity of p when every variable exceeds its stated lower bound:
// shift v -> lo + v and check all coefficients nonnegative, not all zero.
bool shift_positive(const Poly& p, const std::map<std::string, Rat>& lower,
                    std::vector<TraceStep>* trace);

// Free-form informational step with the digest discipline of the others.
uint64_t trace_note(const std::string& op, const std::string& var,
                    const std::vector<uint64_t>& operands, const std::string& text,
                    const std::string& detail, std::vector<TraceStep>* trace);

// Recorded single resultant, for case-level derivations outside the pipeline.
Poly trace_resultant(const Poly& a, const Poly& b, const std::string& var,
                     std::vector<TraceStep>* trace);

// Recorded exact division a / b; the verifier reproves divisibility.
Poly trace_divexact(const Poly& a, const Poly& b, const std::string& var,
                    std::vector<TraceStep>* trace);

// Squarefree part, root count on the range, and one verified isolating
// interval per root (refined to the requested width), all recorded.
std::vector<IsolatingInterval> trace_roots(const Poly& p, const std::string& var,
                                           const VarRange& range, const Rat& width,
                                           std::vector<TraceStep>* trace);

}  // namespace cc4
