#pragma once

// Integer line searches over predicates of the form "h(x) > 0" where h is
// convex, so {x >= from : h(x) <= 0} is an interval that starts at `from`.

#include <cstdint>
#include <functional>
#include <optional>

#include "einobs/arith.hpp"

namespace einobs {

// Enclosure of h(x) at a given working precision.
using Enclosure = std::function<Interval(const Integer& x, unsigned bits)>;

// True when h(x) > 0 is certified, refining from start_bits by doubling up
// to cap_bits. Undecided at the cap counts as false.
bool certified_positive(const Enclosure& h, const Integer& x, unsigned start_bits, unsigned cap_bits);

struct SearchBudget {
  std::uint64_t probes = 0;
  std::uint64_t cap = 1'000'000;
  bool exhausted() const { return probes >= cap; }
};

// Least x' > from with pred(x') given !pred(from) and the interval shape
// above. Doubles the step to bracket a true point, then bisects. nullopt if
// no bracket is found within the budget.
std::optional<Integer> first_true_after(const Integer& from,
                                        const std::function<bool(const Integer&)>& pred,
                                        SearchBudget& budget);

}  // namespace einobs
