#include "einobs/manifold.hpp"

#include <algorithm>

#include "einobs/error.hpp"

namespace einobs {

bool is_valid_custom_name(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '.' || c == '-'; });
}

Custom::Custom(std::string name, Integer e, Integer sigma, Integer b1)
    : name_(std::move(name)), e_(std::move(e)), sigma_(std::move(sigma)), b1_(std::move(b1)) {
  if (!is_valid_custom_name(name_)) {
    throw Error(ErrorKind::kInvalidArgument, "manifold.custom", "invalid block name '" + name_ + "'");
  }
  if (b1_ < 0) {
    throw Error(ErrorKind::kInvalidArgument, "manifold.custom", "b1 must be nonnegative");
  }
  if (mpz_odd_p(Integer(e_ + sigma_).get_mpz_t())) {
    throw Error(ErrorKind::kParityViolation, "manifold.custom",
                "e + sigma must be even for " + name_ + " (e=" + e_.get_str() +
                    ", sigma=" + sigma_.get_str() + ")");
  }
}

bool operator==(const ChenSurface& a, const ChenSurface& b) { return a.x == b.x && a.y == b.y; }

bool operator==(const Custom& a, const Custom& b) {
  return a.name() == b.name() && a.e() == b.e() && a.sigma() == b.sigma() && a.b1() == b.b1();
}

bool block_equal(const BuildingBlock& a, const BuildingBlock& b) { return a == b; }

bool block_less(const BuildingBlock& a, const BuildingBlock& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ca = std::get_if<ChenSurface>(&a)) {
    const auto& cb = std::get<ChenSurface>(b);
    if (ca->x != cb.x) return ca->x < cb.x;
    return ca->y < cb.y;
  }
  if (const auto* ua = std::get_if<Custom>(&a)) {
    const auto& ub = std::get<Custom>(b);
    if (ua->name() != ub.name()) return ua->name() < ub.name();
    if (ua->e() != ub.e()) return ua->e() < ub.e();
    if (ua->sigma() != ub.sigma()) return ua->sigma() < ub.sigma();
    return ua->b1() < ub.b1();
  }
  return false;
}

ManifoldExpr::ManifoldExpr(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "manifold.expr", "empty connected sum");
  }
  for (const auto& s : summands_) {
    if (s.multiplicity <= 0) {
      throw Error(ErrorKind::kZeroMultiplicity, "manifold.expr", "multiplicity must be positive");
    }
  }
}

ManifoldExpr::ManifoldExpr(BuildingBlock block) : ManifoldExpr({Summand{std::move(block), 1}}) {}

Integer ManifoldExpr::block_count() const {
  Integer n = 0;
  for (const auto& s : summands_) n += s.multiplicity;
  return n;
}

std::vector<Summand> ManifoldExpr::multiset() const {
  std::vector<Summand> out = summands_;
  std::stable_sort(out.begin(), out.end(),
                   [](const Summand& a, const Summand& b) { return block_less(a.block, b.block); });
  std::vector<Summand> merged;
  for (auto& s : out) {
    if (!merged.empty() && block_equal(merged.back().block, s.block)) {
      merged.back().multiplicity += s.multiplicity;
    } else {
      merged.push_back(std::move(s));
    }
  }
  return merged;
}

bool same_numbers(const Invariants& a, const Invariants& b) {
  return a.e == b.e && a.sigma == b.sigma && a.b1 == b.b1;
}

namespace {

Invariants simple(long e, long sigma, long b1) {
  Invariants inv{Integer(e), Integer(sigma), Integer(b1), std::nullopt};
  return inv;
}

void attach_b2(Invariants& inv) {
  if (inv.b1 != 0) return;
  // b1 = b3 = 0, so b2 = e - 2.
  const Integer b2 = inv.e - 2;
  inv.b2 = B2Split{(b2 + inv.sigma) / 2, (b2 - inv.sigma) / 2};
}

}  // namespace

Invariants block_invariants(const BuildingBlock& block) {
  Invariants inv = std::visit(
      [](const auto& b) -> Invariants {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ChenSurface>) {
          // chi_h = (e + sigma)/4 and c1^2 = 2e + 3sigma, inverted.
          return Invariants{12 * b.x - b.y, b.y - 8 * b.x, Integer(0), std::nullopt};
        } else if constexpr (std::is_same_v<T, K3>) {
          return simple(24, -16, 0);
        } else if constexpr (std::is_same_v<T, CP2>) {
          return simple(3, 1, 0);
        } else if constexpr (std::is_same_v<T, CP2Bar>) {
          return simple(3, -1, 0);
        } else if constexpr (std::is_same_v<T, S1xS3>) {
          return simple(0, 0, 1);
        } else if constexpr (std::is_same_v<T, S4>) {
          return simple(2, 0, 0);
        } else {
          return Invariants{b.e(), b.sigma(), b.b1(), std::nullopt};
        }
      },
      block);
  attach_b2(inv);
  return inv;
}

Invariants connected_sum_invariants(const ManifoldExpr& expr) {
  Invariants total{Integer(0), Integer(0), Integer(0), std::nullopt};
  for (const auto& s : expr.summands()) {
    const Invariants b = block_invariants(s.block);
    total.e += s.multiplicity * b.e;
    total.sigma += s.multiplicity * b.sigma;
    total.b1 += s.multiplicity * b.b1;
  }
  const Integer n = expr.block_count();
  total.e -= 2 * (n - 1);
  if (n == 1) attach_b2(total);
  return total;
}

bool is_admissible(const Integer& m, const Integer& n) {
  return mpz_even_p(Integer(m - n).get_mpz_t()) != 0;
}

Invariants mkl_invariants(const Invariants& base, const Integer& k, const Integer& l) {
  if (k < 0 || l < 0) {
    throw Error(ErrorKind::kInvalidArgument, "manifold.mkl", "k and l must be nonnegative");
  }
  Invariants out{base.e + k - 2 * l, base.sigma - k, base.b1 + l, std::nullopt};
  if (k == 0 && l == 0) out.b2 = base.b2;
  return out;
}

ManifoldExpr mkl_expr(const BuildingBlock& base, const Integer& k, const Integer& l) {
  std::vector<Summand> summands{{base, 1}};
  if (k > 0) summands.push_back({CP2Bar{}, k});
  if (l > 0) summands.push_back({S1xS3{}, l});
  return ManifoldExpr(std::move(summands));
}

std::optional<MklDecomposition> decompose_mkl(const ManifoldExpr& expr) {
  std::optional<BuildingBlock> base;
  Integer k = 0;
  Integer l = 0;
  for (const auto& s : expr.multiset()) {
    if (std::holds_alternative<CP2Bar>(s.block)) {
      k += s.multiplicity;
    } else if (std::holds_alternative<S1xS3>(s.block)) {
      l += s.multiplicity;
    } else if (std::holds_alternative<S4>(s.block)) {
      continue;
    } else {
      if (base || s.multiplicity != 1) return std::nullopt;
      base = s.block;
    }
  }
  if (!base) return std::nullopt;
  return MklDecomposition{*base, k, l};
}

std::string block_name(const BuildingBlock& block) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ChenSurface>) {
          return "Chen(" + b.x.get_str() + "," + b.y.get_str() + ")";
        } else if constexpr (std::is_same_v<T, K3>) {
          return "K3";
        } else if constexpr (std::is_same_v<T, CP2>) {
          return "CP2";
        } else if constexpr (std::is_same_v<T, CP2Bar>) {
          return "~CP2";
        } else if constexpr (std::is_same_v<T, S1xS3>) {
          return "S1xS3";
        } else if constexpr (std::is_same_v<T, S4>) {
          return "S4";
        } else {
          return "Custom(" + b.name() + "," + b.e().get_str() + "," + b.sigma().get_str() + "," +
                 b.b1().get_str() + ")";
        }
      },
      block);
}

}  // namespace einobs
