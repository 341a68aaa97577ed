#pragma once

// Constructive realization of an admissible (e, sigma) = (m, n) by
// manifolds Chen(x,y) # k ~CP2 # l(S1xS3) that carry no Einstein metric.
//
// With x'0 = (m+n)/2 and y0 = 2m+3n the exact relations are
//   x = (x'0 + l)/2,   k = y - 8x - n,   y = y0 + k + 4l,
// and the generalized LeBrun hypothesis 57(k+4l) >= 25y is checked directly
// on the computed numbers.

#include <cstdint>
#include <string>
#include <vector>

#include "einobs/geography.hpp"
#include "einobs/obstructions.hpp"
#include "einobs/spinc.hpp"

namespace einobs {

struct Witness {
  Integer chen_x;
  Integer chen_y;
  Integer k;
  Integer l;
  ManifoldExpr expr;
  Invariants invariants;
  SpinCDescriptor base_spinc;
  SpinCDescriptor spinc;
  std::vector<Verdict> verdicts;
  Integer chen_C_used;
};

inline constexpr std::uint64_t kDefaultProbeCap = 1'000'000;

// `count` witnesses with strictly increasing l (hence pairwise distinct b1).
// Throws NotAdmissible, or SearchExhausted once `probe_cap` probes are spent.
std::vector<Witness> solve(const Integer& m, const Integer& n, std::size_t count, const Region& region,
                           std::uint64_t probe_cap = kDefaultProbeCap);
std::vector<Witness> solve(const Integer& m, const Integer& n, std::size_t count, const ChenParams& p,
                           std::uint64_t probe_cap = kDefaultProbeCap);

// Least l (with x'0 + l even, l >= 1) whose x admits an integer y meeting
// every constraint. Bisects over the convex constraint functions instead of
// scanning l from zero.
Integer feasible_l_start(const Integer& m, const Integer& n, const Region& region,
                         std::uint64_t probe_cap = kDefaultProbeCap);
Integer feasible_l_start(const Integer& m, const Integer& n, const ChenParams& p,
                         std::uint64_t probe_cap = kDefaultProbeCap);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;
  explicit operator bool() const { return ok; }
};

// Recomputes the witness from its expression alone: connected-sum
// invariants, region membership, the spin^c chain and the obstruction.
VerifyResult verify(const Witness& w, const Integer& m, const Integer& n, const Region& region);
VerifyResult verify(const Witness& w, const Integer& m, const Integer& n, const ChenParams& p);

}  // namespace einobs
