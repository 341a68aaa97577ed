#include "einobs/obstructions.hpp"

#include <stdexcept>

#include "einobs/error.hpp"

namespace einobs {

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::kHitchinThorpe: return "HitchinThorpe";
    case Rule::kGromov: return "Gromov";
    case Rule::kLeBrun: return "LeBrun";
    case Rule::kLeBrunGeneralized: return "LeBrunGeneralized";
  }
  return "";
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kObstructed: return "Obstructed";
    case VerdictStatus::kNotDetermined: return "NotDetermined";
    case VerdictStatus::kBorderlineException: return "BorderlineException";
    case VerdictStatus::kHypothesisUnmet: return "HypothesisUnmet";
  }
  return "";
}

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::kLess: return "<";
    case Relation::kLessEqual: return "<=";
    case Relation::kEqual: return "=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kGreater: return ">";
  }
  return "";
}

bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLess: return lhs < rhs;
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
    case Relation::kGreater: return lhs > rhs;
  }
  return false;
}

Verdict hitchin_thorpe(const Invariants& inv) {
  const Integer lhs = 2 * inv.e;
  const Integer rhs = 3 * abs(inv.sigma);
  Certificate cert{Rational(lhs), Rational(rhs), Relation::kEqual, "2e", "3|sigma|"};
  if (lhs < rhs) {
    cert.relation = Relation::kLess;
    return {Rule::kHitchinThorpe, VerdictStatus::kObstructed, cert, "2e < 3|sigma|"};
  }
  if (lhs == rhs) {
    return {Rule::kHitchinThorpe, VerdictStatus::kBorderlineException, cert,
            "equality case: no Einstein metric unless flat, K3, Enriques, or an Enriques "
            "quotient by a free antiholomorphic involution"};
  }
  cert.relation = Relation::kGreater;
  return {Rule::kHitchinThorpe, VerdictStatus::kNotDetermined, cert, "inequality satisfied"};
}

Verdict gromov(const Invariants& inv, const Rational& simplicial_volume, unsigned start_bits) {
  if (simplicial_volume < 0) {
    throw Error(ErrorKind::kInvalidArgument, "obstructions.gromov",
                "simplicial volume must be nonnegative");
  }
  // e < |M| / (2592 pi^2)  <=>  2592 pi^2 e < |M|.
  const Rational& vol = simplicial_volume;
  const std::string lhs_meaning = "2592*pi^2*e";
  if (inv.e == 0) {
    const bool obstructed = 0 < vol;
    Certificate cert{Rational(0), vol, obstructed ? Relation::kLess : Relation::kEqual, lhs_meaning,
                     "simplicial volume"};
    return {Rule::kGromov, obstructed ? VerdictStatus::kObstructed : VerdictStatus::kNotDetermined,
            cert, "e = 0, decided exactly"};
  }
  unsigned bits = start_bits < 2 ? 2 : start_bits;
  for (;;) {
    const Interval pi2 = pi_squared(bits);
    const Interval lhs = Rational(2592 * inv.e) * pi2;
    const std::string note = "pi^2 in [" + to_string(pi2.lo) + ", " + to_string(pi2.hi) + "] at " +
                             std::to_string(bits) + " bits";
    if (lhs.hi < vol) {
      return {Rule::kGromov, VerdictStatus::kObstructed,
              Certificate{lhs.hi, vol, Relation::kLess, "upper bound of " + lhs_meaning,
                          "simplicial volume"},
              note};
    }
    if (lhs.lo >= vol) {
      return {Rule::kGromov, VerdictStatus::kNotDetermined,
              Certificate{lhs.lo, vol, Relation::kGreaterEqual, "lower bound of " + lhs_meaning,
                          "simplicial volume"},
              note};
    }
    if (bits >= kGromovCapBits) {
      throw std::logic_error("gromov comparison undecided at precision cap");
    }
    bits = bits * 2 > kGromovCapBits ? kGromovCapBits : bits * 2;
  }
}

namespace {

void check_lebrun_hypotheses(const char* rule, const Invariants& base_inv, SwStatus base_status) {
  if (base_inv.two_e_plus_3sigma() <= 0) {
    throw Error(ErrorKind::kHypothesisUnmet, rule,
                "requires 2e+3sigma > 0 on the base, got " + base_inv.two_e_plus_3sigma().get_str());
  }
  if (!is_b_class_or_better(base_status)) {
    throw Error(ErrorKind::kHypothesisUnmet, rule,
                std::string("requires a B-class spin^c structure on the base, status is ") +
                    to_string(base_status));
  }
}

Verdict threshold_verdict(Rule rule, const Integer& count, const Integer& c1sq_base,
                          const std::string& count_meaning) {
  const Integer lhs = 57 * count;
  const Integer rhs = 25 * c1sq_base;
  const bool obstructed = lhs >= rhs;
  return {rule, obstructed ? VerdictStatus::kObstructed : VerdictStatus::kNotDetermined,
          Certificate{Rational(lhs), Rational(rhs),
                      obstructed ? Relation::kGreaterEqual : Relation::kLess, "57*(" + count_meaning + ")",
                      "25*(2e+3sigma)(M)"},
          obstructed ? "no Einstein metric" : "threshold not reached"};
}

}  // namespace

Verdict lebrun(const Invariants& base_inv, SwStatus base_status, const Integer& k) {
  check_lebrun_hypotheses("obstructions.lebrun", base_inv, base_status);
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "obstructions.lebrun", "k must be nonnegative");
  return threshold_verdict(Rule::kLeBrun, k, base_inv.two_e_plus_3sigma(), "k");
}

Verdict lebrun_generalized(const Invariants& base_inv, SwStatus base_status, const Integer& k,
                           const Integer& l) {
  check_lebrun_hypotheses("obstructions.lebrun_generalized", base_inv, base_status);
  if (k < 0 || l < 0) {
    throw Error(ErrorKind::kInvalidArgument, "obstructions.lebrun_generalized",
                "k and l must be nonnegative");
  }
  return threshold_verdict(Rule::kLeBrunGeneralized, k + 4 * l, base_inv.two_e_plus_3sigma(),
                           "k+4l");
}

namespace {

Verdict unmet(Rule rule, std::string why) {
  return {rule, VerdictStatus::kHypothesisUnmet, std::nullopt, std::move(why)};
}

}  // namespace

std::vector<Verdict> evaluate_all(const ManifoldExpr& expr,
                                  const std::optional<SpinCDescriptor>& base_spinc,
                                  const std::optional<Rational>& simplicial_volume) {
  const Invariants inv = connected_sum_invariants(expr);
  std::vector<Verdict> out;
  out.push_back(hitchin_thorpe(inv));

  if (simplicial_volume) {
    out.push_back(gromov(inv, *simplicial_volume));
  } else {
    out.push_back(unmet(Rule::kGromov, "no simplicial volume supplied"));
  }

  const auto mkl = decompose_mkl(expr);
  if (!mkl) {
    const std::string why = "expression is not of the form M # k ~CP2 # l(S1xS3)";
    out.push_back(unmet(Rule::kLeBrun, why));
    out.push_back(unmet(Rule::kLeBrunGeneralized, why));
    return out;
  }
  if (!base_spinc) {
    const std::string why = "no spin^c descriptor for the base";
    out.push_back(unmet(Rule::kLeBrun, why));
    out.push_back(unmet(Rule::kLeBrunGeneralized, why));
    return out;
  }
  const Invariants base_inv = block_invariants(mkl->base);
  const SwStatus status = base_spinc->status();
  auto guarded = [&](Rule rule, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kHypothesisUnmet) throw;
      out.push_back(unmet(rule, err.what()));
    }
  };
  if (mkl->l == 0) {
    guarded(Rule::kLeBrun, [&] { return lebrun(base_inv, status, mkl->k); });
  } else {
    out.push_back(unmet(Rule::kLeBrun, "S1xS3 summands present; plain rule needs l = 0"));
  }
  guarded(Rule::kLeBrunGeneralized,
          [&] { return lebrun_generalized(base_inv, status, mkl->k, mkl->l); });
  return out;
}

}  // namespace einobs
