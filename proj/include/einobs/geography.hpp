#pragma once

// Existence region for simply connected minimal surfaces of general type in
// the (chi_h, c1^2) = (x, y) plane:
//
//   (352/89) x + 140.2 x^(2/3) < y < (18644/2129) x - 365.7 x^(2/3),  x > C.
//
// Bounds are bracketed by rational intervals; every decision refines the
// working precision by doubling until it is certified or the cap is hit.

#include <optional>
#include <string>

#include "einobs/arith.hpp"
#include "einobs/manifold.hpp"

namespace einobs {

struct ChenParams {
  Integer C = 1;
  unsigned precision_bits = 64;
  unsigned precision_cap = 4096;
};

void validate(const ChenParams& p);

struct BoundPair {
  Interval lower;
  Interval upper;
};

enum class RegionDecisionKind { kInside, kOutside, kIndeterminate };

struct RegionDecision {
  RegionDecisionKind kind;
  // Precision at which the decision was made (the cap when indeterminate).
  unsigned precision_reached;
};

const char* to_string(RegionDecisionKind kind);

// Closed integer interval, empty when lo > hi.
struct IntRange {
  Integer lo;
  Integer hi;
  bool empty() const { return lo > hi; }
  static IntRange none() { return {Integer(1), Integer(0)}; }
};

// A region lower(x) < y < upper(x), x > threshold(). Implementations must
// keep upper(x) and upper(x) - lower(x) convex in x; the witness search
// relies on that to jump over infeasible stretches.
class Region {
 public:
  virtual ~Region() = default;

  virtual BoundPair bounds(const Integer& x, unsigned bits) const = 0;
  virtual const Integer& threshold() const = 0;
  virtual unsigned precision_bits() const = 0;
  virtual unsigned precision_cap() const = 0;
  virtual std::string describe() const = 0;
};

// lower(x) = a x + b x^(2/3), upper(x) = c x - d x^(2/3) with b, d >= 0.
class PowerLawRegion : public Region {
 public:
  struct Coefficients {
    Rational lower_linear;
    Rational lower_power;
    Rational upper_linear;
    Rational upper_power;
  };

  PowerLawRegion(Coefficients coefficients, ChenParams params);

  BoundPair bounds(const Integer& x, unsigned bits) const override;
  const Integer& threshold() const override { return params_.C; }
  unsigned precision_bits() const override { return params_.precision_bits; }
  unsigned precision_cap() const override { return params_.precision_cap; }
  std::string describe() const override;

  const Coefficients& coefficients() const { return coefficients_; }

 private:
  Coefficients coefficients_;
  ChenParams params_;
};

// The four exact coefficients 352/89, 701/5, 18644/2129, 3657/10.
const PowerLawRegion::Coefficients& chen_coefficients();

PowerLawRegion chen_region(const ChenParams& p = {});

// Enclosures of both bounds at the given precision. Requires x >= 1.
BoundPair bounds(const Integer& x, const ChenParams& p);

RegionDecision in_region(const Integer& x, const Integer& y, const Region& region);
RegionDecision in_region(const Integer& x, const Integer& y, const ChenParams& p);

// Integers y certified strictly between the bounds; empty when x <= C.
// Endpoints that stay uncertain at the cap are excluded.
IntRange y_window(const Integer& x, const Region& region);
IntRange y_window(const Integer& x, const ChenParams& p);

// Least x > C with a nonempty y_window.
Integer min_feasible_x(const Region& region);
Integer min_feasible_x(const ChenParams& p);

// Chen block tagged region_checked when in_region is Inside.
ChenSurface checked_chen_surface(const Integer& x, const Integer& y, const ChenParams& p);

enum class GeographyFormat { kCsv, kSvg };

// CSV columns x,lower,upper,window_nonempty (20 significant digits) or an
// SVG plot of both boundary curves with the region shaded.
std::string emit_geography(const Integer& x_min, const Integer& x_max, const Integer& step,
                           GeographyFormat format, const Region& region);
std::string emit_geography(const Integer& x_min, const Integer& x_max, const Integer& step,
                           GeographyFormat format, const ChenParams& p);

// Writes `document` to `path`; throws Error(kIo) on failure.
void write_document(const std::string& path, const std::string& document);

}  // namespace einobs
