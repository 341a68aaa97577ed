#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "einobs/error.hpp"
#include "einobs/geography.hpp"
#include "test_support.hpp"

using namespace einobs;
using einobs::testing::big;
using einobs::testing::uniform;

namespace {

// Values from an independent 60-digit mpmath evaluation.
Rational dec(const char* s) {
  std::string t(s);
  const auto dot = t.find('.');
  std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  Integer den = 1;
  for (std::size_t i = dot + 1; i < t.size(); ++i) den *= 10;
  return einobs::testing::ratio(Integer(digits), den);
}

void expect_encloses(const Interval& iv, const char* ref) {
  const Rational r = dec(ref);
  const Rational slack(1, Integer("10000000000000000"));  // ref carries 25 digits
  EXPECT_LE(iv.lo, r + slack) << ref;
  EXPECT_GE(iv.hi, r - slack) << ref;
  EXPECT_LT(iv.width(), Rational(1, 1000000)) << ref;
}

}  // namespace

TEST(Bounds, IndependentOracleValues) {
  const ChenParams p;
  const BoundPair one = bounds(1, p);
  expect_encloses(one.lower, "144.1550561797752808988764");
  expect_encloses(one.upper, "-356.9428370126820103334899");
  const BoundPair hundred = bounds(100, p);
  expect_encloses(hundred.lower, "3416.02305340222906779417");
  expect_encloses(hundred.upper, "-7003.051362714799803822727");
  const BoundPair big_x = bounds(2'000'000, p);
  expect_encloses(big_x.lower, "10135648.6344099774613547");
  expect_encloses(big_x.upper, "11709200.32758827385385321");
  EXPECT_THROW(bounds(0, p), Error);
}

TEST(Bounds, PerfectCubeIsExactRational) {
  const BoundPair b = bounds(8, ChenParams{});
  EXPECT_TRUE(b.lower.is_point());
  EXPECT_TRUE(b.upper.is_point());
  EXPECT_EQ(b.lower.lo, Rational(einobs::testing::ratio(352 * 8, 89) + einobs::testing::ratio(701 * 4, 5)));
  EXPECT_EQ(b.upper.lo, Rational(einobs::testing::ratio(18644 * 8, 2129) - einobs::testing::ratio(3657 * 4, 10)));
}

TEST(Bounds, CoefficientsMatchDecimalLiterals) {
  const auto& c = chen_coefficients();
  EXPECT_EQ(c.lower_linear, Rational(352, 89));
  EXPECT_EQ(c.upper_linear, Rational(18644, 2129));
  EXPECT_EQ(c.lower_power, dec("140.2"));
  EXPECT_EQ(c.upper_power, dec("365.7"));
}

TEST(InRegion, Examples) {
  const ChenParams p{0, 64, 4096};
  EXPECT_EQ(in_region(100, 5000, p).kind, RegionDecisionKind::kOutside);
  EXPECT_EQ(in_region(2'000'000, 11'000'000, p).kind, RegionDecisionKind::kInside);
  EXPECT_EQ(in_region(2'000'000, 3'000'000, p).kind, RegionDecisionKind::kOutside);
  // Threshold is strict.
  const ChenParams high{2'000'000, 64, 4096};
  EXPECT_EQ(in_region(2'000'000, 11'000'000, high).kind, RegionDecisionKind::kOutside);
  EXPECT_EQ(in_region(2'000'001, 11'000'000, high).kind, RegionDecisionKind::kInside);
}

TEST(InRegion, PerfectCubeBoundaryIsStrict) {
  // x = 1000^3: x^(2/3) = 10^6 and both bounds are exact rationals.
  const Integer x("1000000000");
  const ChenParams p;
  const BoundPair b = bounds(x, p);
  ASSERT_TRUE(b.upper.is_point());
  const Integer top = ceil(b.upper.lo) - 1;
  EXPECT_EQ(in_region(x, top, p).kind, RegionDecisionKind::kInside);
  EXPECT_EQ(in_region(x, top + 1, p).kind, RegionDecisionKind::kOutside);
  EXPECT_EQ(y_window(x, p).hi, top);
}

TEST(InRegion, PrecisionMonotone) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Integer x = big(uniform(rng, 1'000'000, 50'000'000));
    const BoundPair b = bounds(x, ChenParams{});
    // Probe right next to either boundary.
    const Integer y = (i % 2 == 0 ? floor(b.lower.lo) : floor(b.upper.lo)) + big(uniform(rng, -2, 2));
    const auto reference = in_region(x, y, ChenParams{1, 64, 4096}).kind;
    for (unsigned bits = 64; bits <= 1024; bits *= 2) {
      EXPECT_EQ(in_region(x, y, ChenParams{1, bits, 4096}).kind, reference);
    }
  }
}

TEST(YWindow, FrozenEndpoints) {
  const IntRange w = y_window(2'000'000, ChenParams{});
  EXPECT_EQ(w.lo, 10'135'649);
  EXPECT_EQ(w.hi, 11'709'200);
  EXPECT_TRUE(y_window(8, ChenParams{}).empty());
  EXPECT_TRUE(y_window(1'000'000, ChenParams{}).empty());
  EXPECT_TRUE(y_window(5, ChenParams{10, 64, 4096}).empty());
}

TEST(YWindow, EveryMemberIsInside) {
  std::mt19937_64 rng(19);
  const ChenParams p;
  for (int i = 0; i < 50; ++i) {
    const Integer x = big(uniform(rng, 1'169'227, 200'000'000));
    const IntRange w = y_window(x, p);
    ASSERT_FALSE(w.empty());
    EXPECT_EQ(in_region(x, w.lo, p).kind, RegionDecisionKind::kInside);
    EXPECT_EQ(in_region(x, w.hi, p).kind, RegionDecisionKind::kInside);
    EXPECT_EQ(in_region(x, w.lo - 1, p).kind, RegionDecisionKind::kOutside);
    EXPECT_EQ(in_region(x, w.hi + 1, p).kind, RegionDecisionKind::kOutside);
    const Integer mid = w.lo + (w.hi - w.lo) / 3;
    EXPECT_EQ(in_region(x, mid, p).kind, RegionDecisionKind::kInside);
  }
}

TEST(MinFeasibleX, DefiningPropertyAndOracle) {
  const ChenParams p;
  const Integer r = min_feasible_x(p);
  EXPECT_EQ(r, 1'169'227);
  EXPECT_FALSE(y_window(r, p).empty());
  EXPECT_TRUE(y_window(r - 1, p).empty());
  const double root = einobs::testing::chen_opening_root_bisection();
  EXPECT_NEAR(r.get_d(), root, 1e4);
  // Exact opening point (B/A)^3 of the real window.
  const Rational a = Rational(18644, 2129) - Rational(352, 89);
  const Rational b = dec("140.2") + dec("365.7");
  const Rational cube = (b / a) * (b / a) * (b / a);
  EXPECT_EQ(ceil(cube), r);
}

TEST(MinFeasibleX, ThresholdAboveOpening) {
  const ChenParams p{5'000'000, 64, 4096};
  EXPECT_EQ(min_feasible_x(p), 5'000'001);
  EXPECT_TRUE(y_window(5'000'000, p).empty());
}

TEST(WindowGrowth, MonotoneBeyondOpening) {
  const ChenParams p;
  Integer prev = -1;
  for (long long x = 1'169'227; x < 400'000'000; x = x * 3 / 2) {
    const IntRange w = y_window(big(x), p);
    ASSERT_FALSE(w.empty());
    const Integer width = w.hi - w.lo;
    EXPECT_GT(width, prev);
    prev = width;
  }
}

TEST(CheckedChen, FlagsRegion) {
  EXPECT_TRUE(checked_chen_surface(2'000'000, 11'000'000, ChenParams{}).region_checked);
  EXPECT_FALSE(checked_chen_surface(100, 5000, ChenParams{}).region_checked);
}

TEST(Emit, SingleRowCsv) {
  const std::string csv = emit_geography(2'000'000, 2'000'000, 1, GeographyFormat::kCsv, ChenParams{});
  EXPECT_EQ(csv,
            "x,lower,upper,window_nonempty\n"
            "2000000,10135648.634409977461,11709200.327588273854,true\n");
  const std::string first = emit_geography(1, 1, 1, GeographyFormat::kCsv, ChenParams{0, 64, 4096});
  EXPECT_EQ(first,
            "x,lower,upper,window_nonempty\n"
            "1,144.15505617977528090,-356.94283701268201033,false\n");
}

TEST(Emit, CsvRowsAndDeterminism) {
  const ChenParams p;
  const std::string a = emit_geography(1'000'000, 1'400'000, 100'000, GeographyFormat::kCsv, p);
  EXPECT_EQ(a, emit_geography(1'000'000, 1'400'000, 100'000, GeographyFormat::kCsv, p));
  std::istringstream in(a);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_NE(lines[1].find(",false"), std::string::npos);  // 1.0e6 closed
  EXPECT_NE(lines[3].find(",true"), std::string::npos);   // 1.2e6 open
  EXPECT_THROW(emit_geography(5, 4, 1, GeographyFormat::kCsv, p), Error);
  EXPECT_THROW(emit_geography(1, 4, 0, GeographyFormat::kCsv, p), Error);
}

TEST(Emit, SvgIsWellFormedXml) {
  const std::string svg = emit_geography(100'000, 5'000'000, 100'000, GeographyFormat::kSvg, ChenParams{});
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  ASSERT_NO_THROW(boost::property_tree::read_xml(in, tree));
  EXPECT_EQ(tree.count("svg"), 1u);
  EXPECT_NE(svg.find("class=\"lower\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"upper\""), std::string::npos);
  EXPECT_NE(svg.find("<polygon class=\"region\""), std::string::npos);
  EXPECT_EQ(svg, emit_geography(100'000, 5'000'000, 100'000, GeographyFormat::kSvg, ChenParams{}));
}

TEST(Emit, WriteFailureIsIoError) {
  try {
    write_document("/nonexistent-dir/geo.csv", "x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
  const auto path = std::filesystem::temp_directory_path() / "einobs_geo_test.csv";
  write_document(path.string(), "x\n");
  std::ifstream f(path);
  std::string content;
  std::getline(f, content);
  EXPECT_EQ(content, "x");
  std::filesystem::remove(path);
}

namespace {

// Linear region lower = 2x + 3, upper = 5x - 4 used to check that the
// decision functions only go through the Region interface.
class LinearRegion : public Region {
 public:
  BoundPair bounds(const Integer& x, unsigned) const override {
    return {Interval::point(Rational(2 * x + 3)), Interval::point(Rational(5 * x - 4))};
  }
  const Integer& threshold() const override { return threshold_; }
  unsigned precision_bits() const override { return 64; }
  unsigned precision_cap() const override { return 64; }
  std::string describe() const override { return "2x+3 < y < 5x-4"; }

 private:
  Integer threshold_ = 0;
};

}  // namespace

TEST(RegionInterface, PluggableRegion) {
  const LinearRegion r;
  // Window at x: (2x+3, 5x-4) nonempty once 5x - 4 - (2x + 3) > 1, x >= 3.
  EXPECT_EQ(min_feasible_x(r), 3);
  const IntRange w = y_window(10, r);
  EXPECT_EQ(w.lo, 24);
  EXPECT_EQ(w.hi, 45);
  EXPECT_EQ(in_region(10, 23, r).kind, RegionDecisionKind::kOutside);
  EXPECT_EQ(in_region(10, 46, r).kind, RegionDecisionKind::kOutside);
  EXPECT_EQ(in_region(10, 30, r).kind, RegionDecisionKind::kInside);
}
