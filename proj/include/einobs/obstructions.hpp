#pragma once

// Einstein-metric obstructions evaluated in exact arithmetic. Every verdict
// carries the inequality instance that was decided.

#include <optional>
#include <string>
#include <vector>

#include "einobs/manifold.hpp"
#include "einobs/spinc.hpp"

namespace einobs {

enum class Rule { kHitchinThorpe, kGromov, kLeBrun, kLeBrunGeneralized };
enum class VerdictStatus { kObstructed, kNotDetermined, kBorderlineException, kHypothesisUnmet };
enum class Relation { kLess, kLessEqual, kEqual, kGreaterEqual, kGreater };

const char* to_string(Rule rule);
const char* to_string(VerdictStatus status);
const char* to_string(Relation relation);

bool holds(const Rational& lhs, Relation rel, const Rational& rhs);

// "lhs rel rhs", recorded so that it holds exactly.
struct Certificate {
  Rational lhs;
  Rational rhs;
  Relation relation;
  std::string lhs_meaning;
  std::string rhs_meaning;
};

struct Verdict {
  Rule rule;
  VerdictStatus status;
  std::optional<Certificate> certificate;
  std::string notes;
};

// Obstructed iff 2e < 3|sigma|. Equality is BorderlineException: the
// equality case still admits flat, K3, Enriques and Enriques-quotient
// Einstein manifolds. (The usual statement writes "e = 3/2 |sigma|" there.)
Verdict hitchin_thorpe(const Invariants& inv);

inline constexpr unsigned kGromovStartBits = 64;
inline constexpr unsigned kGromovCapBits = 4096;

// Obstructed iff e < |M| / (2592 pi^2), with |M| the simplicial volume.
// pi^2 is bracketed at start_bits and doubled until the strict comparison
// is decided. Throws std::logic_error if undecided at the cap.
Verdict gromov(const Invariants& inv, const Rational& simplicial_volume,
               unsigned start_bits = kGromovStartBits);

// Kahler base with 2e+3sigma > 0 and a B-class: M # k ~CP2 is obstructed
// when 57k >= 25(2e+3sigma). Throws HypothesisUnmet.
Verdict lebrun(const Invariants& base_inv, SwStatus base_status, const Integer& k);

// M # k ~CP2 # l(S1xS3) obstructed when 57(k+4l) >= 25(2e+3sigma).
Verdict lebrun_generalized(const Invariants& base_inv, SwStatus base_status, const Integer& k,
                           const Integer& l);

// Runs every rule. Rules whose inputs are missing or whose hypotheses fail
// come back as HypothesisUnmet verdicts with an explanation in notes.
// `base_spinc` describes the spin^c structure of the Kahler base M when the
// expression has the shape M # k ~CP2 # l(S1xS3).
std::vector<Verdict> evaluate_all(const ManifoldExpr& expr,
                                  const std::optional<SpinCDescriptor>& base_spinc,
                                  const std::optional<Rational>& simplicial_volume);

}  // namespace einobs
