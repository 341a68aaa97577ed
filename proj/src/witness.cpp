#include "einobs/witness.hpp"

#include <optional>
#include <stdexcept>

#include "einobs/convex_search.hpp"
#include "einobs/error.hpp"
#include "einobs/parser.hpp"

namespace einobs {
namespace {

struct Target {
  Integer m;
  Integer n;
  Integer x0;  // (m + n) / 2
  Integer y0;  // 2m + 3n
  std::optional<Rational> y_floor;  // 57 y0 / 32 when y0 > 0
};

Target make_target(const Integer& m, const Integer& n) {
  if (!is_admissible(m, n)) {
    throw Error(ErrorKind::kNotAdmissible, "witness.solve",
                "(" + m.get_str() + ", " + n.get_str() + ") is not admissible: m - n is odd");
  }
  Target t{m, n, (m + n) / 2, 2 * m + 3 * n, std::nullopt};
  if (t.y0 > 0) {
    t.y_floor = Rational(57 * t.y0, 32);
    t.y_floor->canonicalize();
  }
  return t;
}

struct Candidate {
  Integer x;
  Integer y;
};

class Search {
 public:
  Search(const Target& target, const Region& region, std::uint64_t probe_cap)
      : t_(target), region_(region) {
    budget_.cap = probe_cap;
  }

  // Smallest admissible x: x > C, x >= 1 and l = 2x - x'0 >= 1.
  Integer first_x() const {
    Integer x = region_.threshold() + 1;
    if (x < 1) x = 1;
    Integer by_l;
    const Integer num = t_.x0 + 1;
    mpz_cdiv_q_ui(by_l.get_mpz_t(), num.get_mpz_t(), 2);
    return by_l > x ? by_l : x;
  }

  Candidate next(Integer x) {
    std::vector<Enclosure> constraints;
    // Nonempty real window.
    constraints.push_back([&](const Integer& at, unsigned bits) {
      const BoundPair b = region_.bounds(at, bits);
      return b.upper - b.lower;
    });
    // Room for k >= 0: upper > 8x + n.
    constraints.push_back([&](const Integer& at, unsigned bits) {
      return region_.bounds(at, bits).upper - Rational(8 * at + t_.n);
    });
    // Room for 32 y >= 57 y0.
    if (t_.y_floor) {
      constraints.push_back([&](const Integer& at, unsigned bits) {
        return region_.bounds(at, bits).upper - *t_.y_floor;
      });
    }

    for (;;) {
      bool jumped = false;
      for (const auto& h : constraints) {
        auto positive = [&](const Integer& at) {
          return certified_positive(h, at, region_.precision_bits(), region_.precision_cap());
        };
        if (positive(x)) continue;
        const auto after = first_true_after(x, positive, budget_);
        if (!after) exhausted(x);
        x = *after;
        jumped = true;
        break;
      }
      if (jumped) continue;

      last_x_ = x;
      if (++budget_.probes > budget_.cap) exhausted(x);
      const IntRange window = y_window(x, region_);
      if (!window.empty()) {
        Integer y = window.lo;
        const Integer k_floor = 8 * x + t_.n;
        if (k_floor > y) y = k_floor;
        if (t_.y_floor) {
          const Integer c = ceil(*t_.y_floor);
          if (c > y) y = c;
        }
        if (y <= window.hi) return {x, y};
      }
      x += 1;
    }
  }

  Integer l_of(const Integer& x) const { return 2 * x - t_.x0; }

 private:
  [[noreturn]] void exhausted(const Integer& x) const {
    const Integer& last = last_x_ ? *last_x_ : x;
    throw Error(ErrorKind::kSearchExhausted, "witness.solve",
                "probe cap " + std::to_string(budget_.cap) + " reached; last l tried " +
                    l_of(last).get_str());
  }

  const Target& t_;
  const Region& region_;
  SearchBudget budget_;
  std::optional<Integer> last_x_;
};

Witness build_witness(const Target& t, const Candidate& c, const Region& region) {
  const Integer k = c.y - 8 * c.x - t.n;
  const Integer l = 2 * c.x - t.x0;
  const BuildingBlock base = ChenSurface{c.x, c.y, true};
  const Invariants base_inv = block_invariants(base);
  const Invariants inv = mkl_invariants(base_inv, k, l);
  if (inv.e != t.m || inv.sigma != t.n) {
    throw std::logic_error("witness arithmetic does not realize the target pair");
  }

  const SpinCDescriptor base_spinc = canonical_spinc_of_kahler(base_inv, c.y, true);
  const auto blown = blow_up(base_spinc, base_inv, k);
  const auto summed = s1s3_sum(blown.first, blown.second, l);

  std::vector<Verdict> verdicts;
  verdicts.push_back(hitchin_thorpe(inv));
  verdicts.push_back(lebrun_generalized(base_inv, base_spinc.status(), k, l));
  if (verdicts.back().status != VerdictStatus::kObstructed) {
    throw std::logic_error("witness selected without an obstructed LeBrun verdict");
  }
  return Witness{c.x,   c.y,        k,           l,        mkl_expr(base, k, l),
                 inv,   base_spinc, summed.first, verdicts, region.threshold()};
}

}  // namespace

std::vector<Witness> solve(const Integer& m, const Integer& n, std::size_t count, const Region& region,
                           std::uint64_t probe_cap) {
  const Target t = make_target(m, n);
  if (count == 0) throw Error(ErrorKind::kInvalidArgument, "witness.solve", "count must be positive");
  Search search(t, region, probe_cap);
  std::vector<Witness> out;
  Integer x = search.first_x();
  while (out.size() < count) {
    const Candidate c = search.next(x);
    out.push_back(build_witness(t, c, region));
    x = c.x + 1;
  }
  return out;
}

std::vector<Witness> solve(const Integer& m, const Integer& n, std::size_t count, const ChenParams& p,
                           std::uint64_t probe_cap) {
  return solve(m, n, count, chen_region(p), probe_cap);
}

Integer feasible_l_start(const Integer& m, const Integer& n, const Region& region,
                         std::uint64_t probe_cap) {
  const Target t = make_target(m, n);
  Search search(t, region, probe_cap);
  return search.l_of(search.next(search.first_x()).x);
}

Integer feasible_l_start(const Integer& m, const Integer& n, const ChenParams& p,
                         std::uint64_t probe_cap) {
  return feasible_l_start(m, n, chen_region(p), probe_cap);
}

VerifyResult verify(const Witness& w, const Integer& m, const Integer& n, const Region& region) {
  VerifyResult r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.reasons.push_back(std::move(why));
  };

  const auto shape = decompose_mkl(w.expr);
  const ChenSurface* chen = shape ? std::get_if<ChenSurface>(&shape->base) : nullptr;
  if (!chen) {
    fail("expression '" + format(w.expr) + "' is not Chen(x,y) # k ~CP2 # l(S1xS3)");
    return r;
  }
  if (chen->x != w.chen_x || chen->y != w.chen_y) fail("chen_x/chen_y disagree with expression");
  if (shape->k != w.k) fail("k disagrees with expression");
  if (shape->l != w.l) fail("l disagrees with expression");
  const Integer& x = chen->x;
  const Integer& y = chen->y;
  const Integer& k = shape->k;
  const Integer& l = shape->l;

  const Invariants inv = connected_sum_invariants(w.expr);
  if (inv.e != m) fail("e mismatch: expected " + m.get_str() + ", got " + inv.e.get_str());
  if (inv.sigma != n) fail("sigma mismatch: expected " + n.get_str() + ", got " + inv.sigma.get_str());
  if (!same_numbers(inv, w.invariants)) fail("recorded invariants disagree with recomputation");
  if (inv.b1 != l) fail("b1 certificate: b1 = " + inv.b1.get_str() + " but l = " + l.get_str());

  if (m + n != 4 * x - 2 * l) fail("m + n != 4x - 2l");
  if (k + 4 * l != y - (2 * m + 3 * n)) fail("k + 4l != y - (2m + 3n)");

  const RegionDecision where = in_region(x, y, region);
  if (where.kind != RegionDecisionKind::kInside) {
    fail(std::string("region check: (x, y) is ") + to_string(where.kind) + " at C = " +
         region.threshold().get_str());
  }
  if (w.chen_C_used != region.threshold()) fail("chen_C_used differs from the region threshold");

  const Invariants base_inv = block_invariants(*chen);
  const SpinCDescriptor base = canonical_spinc_of_kahler(base_inv, base_inv.two_e_plus_3sigma(), true);
  if (l < 1) {
    fail("l must be at least 1 for the B-class chain");
    return r;
  }
  const auto blown = blow_up(base, base_inv, k);
  const auto [spinc, final_inv] = s1s3_sum(blown.first, blown.second, l);
  if (spinc.status() != SwStatus::kBClass && spinc.status() != SwStatus::kBClassTrivialSW) {
    fail(std::string("spin^c status after the chain is ") + to_string(spinc.status()));
  }
  if (!same_numbers(final_inv, inv)) fail("spin^c chain invariants disagree with the expression");
  try {
    if (formal_dimension(spinc.c1_sq(), final_inv) != formal_dimension(base.c1_sq(), base_inv) + l) {
      fail("formal dimension did not grow by l");
    }
  } catch (const Error& e) {
    fail(e.what());
  }

  try {
    const Verdict v = lebrun_generalized(base_inv, base.status(), k, l);
    if (v.status != VerdictStatus::kObstructed) fail("generalized LeBrun verdict is not Obstructed");
    if (57 * (k + 4 * l) < 25 * y) fail("57(k + 4l) < 25y");
  } catch (const Error& e) {
    fail(e.what());
  }
  return r;
}

VerifyResult verify(const Witness& w, const Integer& m, const Integer& n, const ChenParams& p) {
  return verify(w, m, n, chen_region(p));
}

}  // namespace einobs
