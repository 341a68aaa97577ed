#pragma once

// Characteristic-number arithmetic for closed oriented 4-manifolds built as
// connected sums of known building blocks.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "einobs/arith.hpp"

namespace einobs {

// Simply connected minimal surface of general type with holomorphic Euler
// characteristic x and c1^2 = y. Any integer pair is accepted; region_checked
// is set only by the geography module after an Inside decision.
struct ChenSurface {
  Integer x;
  Integer y;
  bool region_checked = false;
};
struct CP2 {};
struct CP2Bar {};
struct S1xS3 {};
struct K3 {};
struct S4 {};
// User-declared block. The constructor enforces the e + sigma parity law
// and a name that the expression grammar can reproduce.
class Custom {
 public:
  Custom(std::string name, Integer e, Integer sigma, Integer b1);

  const std::string& name() const { return name_; }
  const Integer& e() const { return e_; }
  const Integer& sigma() const { return sigma_; }
  const Integer& b1() const { return b1_; }

 private:
  std::string name_;
  Integer e_;
  Integer sigma_;
  Integer b1_;
};

bool is_valid_custom_name(const std::string& name);

// Alternative order is the canonical print order.
using BuildingBlock = std::variant<ChenSurface, K3, CP2, CP2Bar, S1xS3, S4, Custom>;

// Equality and ordering ignore ChenSurface::region_checked.
bool operator==(const ChenSurface& a, const ChenSurface& b);
bool operator==(const Custom& a, const Custom& b);
inline bool operator==(CP2, CP2) { return true; }
inline bool operator==(CP2Bar, CP2Bar) { return true; }
inline bool operator==(S1xS3, S1xS3) { return true; }
inline bool operator==(K3, K3) { return true; }
inline bool operator==(S4, S4) { return true; }

// Strict weak order: variant index first, then parameters.
bool block_less(const BuildingBlock& a, const BuildingBlock& b);
bool block_equal(const BuildingBlock& a, const BuildingBlock& b);

struct Summand {
  BuildingBlock block;
  Integer multiplicity;
};

// Connected sum of summands in the order written. Never empty; every
// multiplicity is positive.
class ManifoldExpr {
 public:
  explicit ManifoldExpr(std::vector<Summand> summands);
  explicit ManifoldExpr(BuildingBlock block);

  const std::vector<Summand>& summands() const { return summands_; }
  Integer block_count() const;

  // Same blocks merged and sorted in canonical order.
  std::vector<Summand> multiset() const;

 private:
  std::vector<Summand> summands_;
};

struct B2Split {
  Integer plus;
  Integer minus;
};

struct Invariants {
  Integer e;
  Integer sigma;
  Integer b1;
  // Present only for a single block with b1 = 0.
  std::optional<B2Split> b2;

  Integer two_e_plus_3sigma() const { return 2 * e + 3 * sigma; }
  Rational chi_h() const {
    Rational q(e + sigma, 4);
    q.canonicalize();
    return q;
  }
};

bool same_numbers(const Invariants& a, const Invariants& b);

Invariants block_invariants(const BuildingBlock& block);

// e = sum(e_i) - 2(n - 1), sigma and b1 additive, n = total block count.
Invariants connected_sum_invariants(const ManifoldExpr& expr);

bool is_admissible(const Integer& m, const Integer& n);

// Closed form for M # k ~CP2 # l (S1 x S3).
Invariants mkl_invariants(const Invariants& base, const Integer& k, const Integer& l);

ManifoldExpr mkl_expr(const BuildingBlock& base, const Integer& k, const Integer& l);

// Recognizes M # k ~CP2 # l (S1xS3) (S4 summands ignored) where M is the
// unique remaining block with multiplicity one.
struct MklDecomposition {
  BuildingBlock base;
  Integer k;
  Integer l;
};
std::optional<MklDecomposition> decompose_mkl(const ManifoldExpr& expr);

std::string block_name(const BuildingBlock& block);

}  // namespace einobs
