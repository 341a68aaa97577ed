#include "einobs/geography.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "einobs/convex_search.hpp"
#include "einobs/error.hpp"

namespace einobs {

namespace {

unsigned next_bits(unsigned bits, unsigned cap) { return bits * 2 > cap ? cap : bits * 2; }

void require_x(const Integer& x) {
  if (x < 1) {
    throw Error(ErrorKind::kInvalidArgument, "geography.bounds", "x must be >= 1, got " + x.get_str());
  }
}

}  // namespace

void validate(const ChenParams& p) {
  if (p.C < 0) throw Error(ErrorKind::kInvalidArgument, "geography.params", "C must be nonnegative");
  if (p.precision_bits < 2 || p.precision_cap < 2) {
    throw Error(ErrorKind::kInvalidArgument, "geography.params", "precision must be at least 2 bits");
  }
  if (p.precision_bits > p.precision_cap) {
    throw Error(ErrorKind::kInvalidArgument, "geography.params",
                "precision_bits exceeds precision_cap");
  }
}

const char* to_string(RegionDecisionKind kind) {
  switch (kind) {
    case RegionDecisionKind::kInside: return "Inside";
    case RegionDecisionKind::kOutside: return "Outside";
    case RegionDecisionKind::kIndeterminate: return "Indeterminate";
  }
  return "";
}

PowerLawRegion::PowerLawRegion(Coefficients coefficients, ChenParams params)
    : coefficients_(std::move(coefficients)), params_(std::move(params)) {
  validate(params_);
  if (coefficients_.lower_power < 0 || coefficients_.upper_power < 0) {
    throw Error(ErrorKind::kInvalidArgument, "geography.region",
                "x^(2/3) coefficients must be nonnegative");
  }
}

BoundPair PowerLawRegion::bounds(const Integer& x, unsigned bits) const {
  require_x(x);
  const Interval t = cube_root_squared(x, bits);
  const Rational xr(x);
  const auto& c = coefficients_;
  return {c.lower_power * t + Rational(c.lower_linear * xr),
          Rational(-c.upper_power) * t + Rational(c.upper_linear * xr)};
}

std::string PowerLawRegion::describe() const {
  const auto& c = coefficients_;
  return to_string(c.lower_linear) + "*x + " + to_string(c.lower_power) + "*x^(2/3) < y < " +
         to_string(c.upper_linear) + "*x - " + to_string(c.upper_power) + "*x^(2/3), x > " +
         params_.C.get_str();
}

const PowerLawRegion::Coefficients& chen_coefficients() {
  // 140.2 and 365.7 read as the exact decimals they are.
  static const PowerLawRegion::Coefficients kChen{
      Rational(352, 89), Rational(701, 5), Rational(18644, 2129), Rational(3657, 10)};
  return kChen;
}

PowerLawRegion chen_region(const ChenParams& p) { return PowerLawRegion(chen_coefficients(), p); }

BoundPair bounds(const Integer& x, const ChenParams& p) {
  return chen_region(p).bounds(x, p.precision_bits);
}

RegionDecision in_region(const Integer& x, const Integer& y, const Region& region) {
  unsigned bits = region.precision_bits();
  if (x <= region.threshold()) return {RegionDecisionKind::kOutside, bits};
  const Rational yr(y);
  for (;;) {
    const BoundPair b = region.bounds(x, bits);
    if (yr <= b.lower.lo || yr >= b.upper.hi) return {RegionDecisionKind::kOutside, bits};
    if (b.lower.hi < yr && yr < b.upper.lo) return {RegionDecisionKind::kInside, bits};
    if (bits >= region.precision_cap()) return {RegionDecisionKind::kIndeterminate, bits};
    bits = next_bits(bits, region.precision_cap());
  }
}

RegionDecision in_region(const Integer& x, const Integer& y, const ChenParams& p) {
  return in_region(x, y, chen_region(p));
}

IntRange y_window(const Integer& x, const Region& region) {
  if (x <= region.threshold()) return IntRange::none();
  unsigned bits = region.precision_bits();
  for (;;) {
    const BoundPair b = region.bounds(x, bits);
    // Smallest integer above lower, largest below upper.
    const Integer lo_safe = floor(b.lower.hi) + 1;
    const Integer lo_optimistic = floor(b.lower.lo) + 1;
    const Integer hi_safe = ceil(b.upper.lo) - 1;
    const Integer hi_optimistic = ceil(b.upper.hi) - 1;
    const bool certified = lo_safe == lo_optimistic && hi_safe == hi_optimistic;
    if (certified || lo_optimistic > hi_optimistic || bits >= region.precision_cap()) {
      if (lo_safe > hi_safe) return IntRange::none();
      return {lo_safe, hi_safe};
    }
    bits = next_bits(bits, region.precision_cap());
  }
}

IntRange y_window(const Integer& x, const ChenParams& p) { return y_window(x, chen_region(p)); }

Integer min_feasible_x(const Region& region) {
  Integer x = region.threshold() + 1;
  if (x < 1) x = 1;
  const Enclosure gap = [&](const Integer& at, unsigned bits) {
    const BoundPair b = region.bounds(at, bits);
    return b.upper - b.lower;
  };
  auto open = [&](const Integer& at) {
    return certified_positive(gap, at, region.precision_bits(), region.precision_cap());
  };
  SearchBudget budget;
  for (;;) {
    if (!open(x)) {
      // Bisect to the point where the real window opens.
      const auto next = first_true_after(x, open, budget);
      if (!next) {
        throw Error(ErrorKind::kSearchExhausted, "geography.min_feasible_x",
                    "region never opens beyond x = " + x.get_str());
      }
      x = *next;
    }
    if (!y_window(x, region).empty()) return x;
    ++x;
    if (++budget.probes >= budget.cap) {
      throw Error(ErrorKind::kSearchExhausted, "geography.min_feasible_x",
                  "no integer window found up to x = " + x.get_str());
    }
  }
}

Integer min_feasible_x(const ChenParams& p) { return min_feasible_x(chen_region(p)); }

ChenSurface checked_chen_surface(const Integer& x, const Integer& y, const ChenParams& p) {
  ChenSurface s{x, y, false};
  s.region_checked = in_region(x, y, p).kind == RegionDecisionKind::kInside;
  return s;
}

namespace {

constexpr int kCsvDigits = 20;

// Decimal rendering certified to the requested digits where the cap allows.
std::string render(const Region& region, const Integer& x, bool upper) {
  unsigned bits = region.precision_bits() < 128 ? 128 : region.precision_bits();
  if (bits > region.precision_cap()) bits = region.precision_cap();
  for (;;) {
    const BoundPair b = region.bounds(x, bits);
    const Interval& v = upper ? b.upper : b.lower;
    const std::string lo = to_decimal(v.lo, kCsvDigits);
    if (lo == to_decimal(v.hi, kCsvDigits) || bits >= region.precision_cap()) {
      return v.is_point() ? lo : to_decimal(v.midpoint(), kCsvDigits);
    }
    bits = next_bits(bits, region.precision_cap());
  }
}

std::vector<Integer> grid(const Integer& x_min, const Integer& x_max, const Integer& step) {
  if (x_min < 1) {
    throw Error(ErrorKind::kInvalidArgument, "geography.emit", "x_min must be >= 1");
  }
  if (x_min > x_max) {
    throw Error(ErrorKind::kInvalidArgument, "geography.emit", "x_min must not exceed x_max");
  }
  if (step < 1) throw Error(ErrorKind::kInvalidArgument, "geography.emit", "step must be positive");
  std::vector<Integer> xs;
  for (Integer x = x_min; x <= x_max; x += step) xs.push_back(x);
  return xs;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string emit_csv(const std::vector<Integer>& xs, const Region& region) {
  std::ostringstream out;
  out << "x,lower,upper,window_nonempty\n";
  for (const auto& x : xs) {
    out << x.get_str() << ',' << render(region, x, false) << ',' << render(region, x, true) << ','
        << (y_window(x, region).empty() ? "false" : "true") << '\n';
  }
  return out.str();
}

std::string emit_svg(const std::vector<Integer>& xs, const Region& region) {
  constexpr double kWidth = 800, kHeight = 500, kMargin = 60;
  struct Sample {
    double x, lower, upper;
    bool open;
  };
  std::vector<Sample> samples;
  for (const auto& x : xs) {
    const BoundPair b = region.bounds(x, region.precision_bits());
    samples.push_back({Rational(x).get_d(), b.lower.midpoint().get_d(), b.upper.midpoint().get_d(),
                       b.upper.lo > b.lower.hi});
  }
  double y_min = samples.front().lower, y_max = samples.front().lower;
  for (const auto& s : samples) {
    y_min = std::min({y_min, s.lower, s.upper});
    y_max = std::max({y_max, s.lower, s.upper});
  }
  if (y_max == y_min) y_max = y_min + 1;
  const double x_lo = samples.front().x;
  const double x_hi = samples.size() > 1 ? samples.back().x : x_lo + 1;
  auto px = [&](double x) { return fixed(kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin)); };
  auto py = [&](double y) {
    return fixed(kHeight - kMargin - (y - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin));
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "  <title>" << xml_escape(region.describe()) << "</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // Shade each maximal run of samples where the window is open.
  for (std::size_t i = 0; i < samples.size();) {
    if (!samples[i].open) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < samples.size() && samples[j].open) ++j;
    out << "  <polygon class=\"region\" fill=\"#9ecae1\" fill-opacity=\"0.6\" points=\"";
    for (std::size_t t = i; t < j; ++t) out << px(samples[t].x) << ',' << py(samples[t].upper) << ' ';
    for (std::size_t t = j; t-- > i;) out << px(samples[t].x) << ',' << py(samples[t].lower) << ' ';
    out << "\"/>\n";
    i = j;
  }
  auto polyline = [&](const char* cls, const char* color, bool upper) {
    out << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& s : samples) out << px(s.x) << ',' << py(upper ? s.upper : s.lower) << ' ';
    out << "\"/>\n";
  };
  polyline("lower", "#08519c", false);
  polyline("upper", "#a50f15", true);

  out << "  <line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n"
      << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kHeight - kMargin << "\" stroke=\"black\"/>\n"
      << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">x = chi_h (" << xs.front().get_str() << " .. "
      << xs.back().get_str() << ")</text>\n"
      << "  <text x=\"15\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 15 " << kHeight / 2
      << ")\" text-anchor=\"middle\">y = c1^2 (" << fixed(y_min) << " .. " << fixed(y_max)
      << ")</text>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace

std::string emit_geography(const Integer& x_min, const Integer& x_max, const Integer& step,
                           GeographyFormat format, const Region& region) {
  const auto xs = grid(x_min, x_max, step);
  return format == GeographyFormat::kCsv ? emit_csv(xs, region) : emit_svg(xs, region);
}

std::string emit_geography(const Integer& x_min, const Integer& x_max, const Integer& step,
                           GeographyFormat format, const ChenParams& p) {
  return emit_geography(x_min, x_max, step, format, chen_region(p));
}

void write_document(const std::string& path, const std::string& document) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "geography.write", "cannot open '" + path + "' for writing");
  f << document;
  f.close();
  if (!f) throw Error(ErrorKind::kIo, "geography.write", "write to '" + path + "' failed");
}

}  // namespace einobs
