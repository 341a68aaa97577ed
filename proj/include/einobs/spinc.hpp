#pragma once

// Bookkeeping for a single spin^c structure: c1^2, formal dimension of the
// Seiberg-Witten moduli space, and what is known about its SW / B-class
// status as the manifold is blown up or summed with copies of S1 x S3.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "einobs/manifold.hpp"

namespace einobs {

enum class SwStatus {
  kUnknown,
  kNontrivialSW,
  // Moduli space represents a nontrivial bordism class.
  kBClass,
  kBClassTrivialSW,
};

const char* to_string(SwStatus status);

// NontrivialSW or either B-class status: enough for irreducible solutions
// for every metric.
bool is_b_class_or_better(SwStatus status);

class SpinCDescriptor {
 public:
  SpinCDescriptor(Integer c1_sq, SwStatus status, std::vector<std::string> provenance = {});

  const Integer& c1_sq() const { return c1_sq_; }
  SwStatus status() const { return status_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  const std::optional<Integer>& holonomy_count() const { return holonomy_count_; }
  // Number of S1 x S3 summands added since the last NontrivialSW state.
  const std::optional<Integer>& s1s3_sums() const { return s1s3_sums_; }

 private:
  friend SpinCDescriptor canonical_spinc_of_kahler(const Invariants&, const Integer&, bool);
  friend std::pair<SpinCDescriptor, Invariants> blow_up(const SpinCDescriptor&, const Invariants&,
                                                        const Integer&);
  friend std::pair<SpinCDescriptor, Invariants> s1s3_sum(const SpinCDescriptor&, const Invariants&,
                                                         const Integer&);

  Integer c1_sq_;
  SwStatus status_;
  std::vector<std::string> provenance_;
  std::optional<Integer> holonomy_count_;
  std::optional<Integer> s1s3_sums_;
};

// d = (c1^2 - (2e + 3 sigma)) / 4. Throws NonIntegralDimension unless the
// numerator is divisible by 4.
Integer formal_dimension(const Integer& c1_sq, const Invariants& inv);

// Canonical class of a Kahler surface. With deg K > 0 the moduli space for
// the canonical class is a single point, so the SW invariant is nonzero.
SpinCDescriptor canonical_spinc_of_kahler(const Invariants& inv, const Integer& c1_sq,
                                          bool deg_k_positive);

// M # k ~CP2: c1 gains sum E_j, so c1^2 drops by k; status preserved.
std::pair<SpinCDescriptor, Invariants> blow_up(const SpinCDescriptor& d, const Invariants& inv,
                                               const Integer& k);

// M # l (S1 x S3), l >= 1: c1^2 unchanged, d grows by l.
std::pair<SpinCDescriptor, Invariants> s1s3_sum(const SpinCDescriptor& d, const Invariants& inv,
                                                const Integer& l);

// Lower bound for (c1^+)^2 of c_{k,l} over a Kahler base: (2e + 3 sigma)(M).
struct C1PlusSquaredBound {
  Integer at_least;
  std::string certificate;
};
C1PlusSquaredBound c1plus_sq_lower_bound(const Invariants& base_inv);

}  // namespace einobs
