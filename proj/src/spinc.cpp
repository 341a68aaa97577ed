#include "einobs/spinc.hpp"

#include "einobs/error.hpp"

namespace einobs {

const char* to_string(SwStatus status) {
  switch (status) {
    case SwStatus::kUnknown: return "Unknown";
    case SwStatus::kNontrivialSW: return "NontrivialSW";
    case SwStatus::kBClass: return "BClass";
    case SwStatus::kBClassTrivialSW: return "BClassTrivialSW";
  }
  return "Unknown";
}

bool is_b_class_or_better(SwStatus status) { return status != SwStatus::kUnknown; }

SpinCDescriptor::SpinCDescriptor(Integer c1_sq, SwStatus status, std::vector<std::string> provenance)
    : c1_sq_(std::move(c1_sq)), status_(status), provenance_(std::move(provenance)) {
  if (status_ == SwStatus::kNontrivialSW) s1s3_sums_ = Integer(0);
}

Integer formal_dimension(const Integer& c1_sq, const Invariants& inv) {
  const Integer num = c1_sq - inv.two_e_plus_3sigma();
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 4)) {
    throw Error(ErrorKind::kNonIntegralDimension, "spinc.formal_dimension",
                "c1^2 - (2e+3sigma) = " + num.get_str() + " is not divisible by 4");
  }
  return num / 4;
}

SpinCDescriptor canonical_spinc_of_kahler(const Invariants& inv, const Integer& c1_sq,
                                          bool deg_k_positive) {
  if (c1_sq != inv.two_e_plus_3sigma()) {
    throw Error(ErrorKind::kCanonicalMismatch, "spinc.canonical",
                "c1^2 = " + c1_sq.get_str() + " but 2e+3sigma = " + inv.two_e_plus_3sigma().get_str());
  }
  if (deg_k_positive) {
    return SpinCDescriptor(c1_sq, SwStatus::kNontrivialSW, {"canonical class, deg K>0, #M=1"});
  }
  return SpinCDescriptor(c1_sq, SwStatus::kUnknown,
                         {"canonical class, deg K<=0: only reducible solutions, no SW conclusion"});
}

std::pair<SpinCDescriptor, Invariants> blow_up(const SpinCDescriptor& d, const Invariants& inv,
                                               const Integer& k) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "spinc.blow_up", "k must be nonnegative");
  if (k == 0) return {d, inv};
  SpinCDescriptor out = d;
  out.c1_sq_ -= k;
  out.provenance_.push_back("blow-up x" + k.get_str() + ": c1 += E_1+...+E_k, c1^2 -= " +
                            k.get_str() + " (Kahler base assumed by caller)");
  return {out, mkl_invariants(inv, k, 0)};
}

std::pair<SpinCDescriptor, Invariants> s1s3_sum(const SpinCDescriptor& d, const Invariants& inv,
                                                const Integer& l) {
  if (l < 1) throw Error(ErrorKind::kInvalidArgument, "spinc.s1s3_sum", "l must be positive");
  SpinCDescriptor out = d;
  const std::string tag = "# " + l.get_str() + "(S1xS3): c1^2 unchanged, d += " + l.get_str();
  switch (d.status_) {
    case SwStatus::kUnknown:
      out.provenance_.push_back(tag + "; no status rule applies");
      break;
    case SwStatus::kNontrivialSW:
    case SwStatus::kBClass:
    case SwStatus::kBClassTrivialSW: {
      if (!d.s1s3_sums_) {
        // B-class of unrecorded origin: only B-class survives.
        out.status_ = SwStatus::kBClass;
        out.holonomy_count_.reset();
        out.provenance_.push_back(tag + "; B-class input kept as B-class (rule for non-SW origin)");
        break;
      }
      const Integer total = *d.s1s3_sums_ + l;
      out.s1s3_sums_ = total;
      if (total == 1) {
        out.status_ = SwStatus::kBClass;
        out.holonomy_count_ = Integer(1);
        out.provenance_.push_back(tag + "; SW != 0 summed once: B-class, SW_theta = 1");
      } else if (total == 2) {
        out.status_ = SwStatus::kBClassTrivialSW;
        out.holonomy_count_.reset();
        out.provenance_.push_back(tag + "; SW != 0 summed twice: B-class with trivial SW invariant");
      } else {
        out.status_ = SwStatus::kBClass;
        out.holonomy_count_.reset();
        out.provenance_.push_back(tag + "; l>=3: B-class by iterating the single-sum rule");
      }
      break;
    }
  }
  return {out, mkl_invariants(inv, 0, l)};
}

C1PlusSquaredBound c1plus_sq_lower_bound(const Invariants& base_inv) {
  const Integer bound = base_inv.two_e_plus_3sigma();
  return {bound, "(c1+)^2 >= (2e+3sigma)(M) = " + bound.get_str() + " for every c_{k,l}"};
}

}  // namespace einobs
