#include "einobs/convex_search.hpp"

namespace einobs {

bool certified_positive(const Enclosure& h, const Integer& x, unsigned start_bits, unsigned cap_bits) {
  unsigned bits = start_bits;
  for (;;) {
    const Interval v = h(x, bits);
    if (v.lo > 0) return true;
    if (v.hi <= 0) return false;
    if (bits >= cap_bits) return false;
    bits = bits * 2 > cap_bits ? cap_bits : bits * 2;
  }
}

std::optional<Integer> first_true_after(const Integer& from,
                                        const std::function<bool(const Integer&)>& pred,
                                        SearchBudget& budget) {
  Integer lo = from;  // pred(lo) false
  Integer step = 1;
  Integer hi;
  for (;;) {
    if (budget.exhausted()) return std::nullopt;
    hi = from + step;
    ++budget.probes;
    if (pred(hi)) break;
    lo = hi;
    // 2^200 steps is far past any region this library is pointed at.
    if (mpz_sizeinbase(step.get_mpz_t(), 2) > 200) return std::nullopt;
    step *= 2;
  }
  while (hi - lo > 1) {
    if (budget.exhausted()) return std::nullopt;
    const Integer mid = (lo + hi) / 2;
    ++budget.probes;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace einobs
