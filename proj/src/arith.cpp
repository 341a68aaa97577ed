#include "einobs/arith.hpp"

#include <mpfr.h>

#include <cstdint>
#include <limits>

#include "einobs/error.hpp"

namespace einobs {
namespace {

// RAII holder for one MPFR value.
class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
  }

 private:
  mpfr_t value_;
};

unsigned clamp_bits(unsigned bits) {
  return bits < MPFR_PREC_MIN ? static_cast<unsigned>(MPFR_PREC_MIN) : bits;
}

Rational cube_root_squared_rounded(const Integer& x, unsigned bits, mpfr_rnd_t rnd) {
  Mpfr t(clamp_bits(bits));
  mpfr_set_z(t.get(), x.get_mpz_t(), rnd);
  mpfr_cbrt(t.get(), t.get(), rnd);
  mpfr_sqr(t.get(), t.get(), rnd);
  return t.to_rational();
}

Rational pi_squared_rounded(unsigned bits, mpfr_rnd_t rnd) {
  Mpfr t(clamp_bits(bits));
  mpfr_const_pi(t.get(), rnd);
  mpfr_sqr(t.get(), t.get(), rnd);
  return t.to_rational();
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator+(const Interval& a, const Rational& b) { return {a.lo + b, a.hi + b}; }
Interval operator-(const Interval& a, const Rational& b) { return {a.lo - b, a.hi - b}; }

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Interval cube_root_squared(const Integer& x, unsigned bits) {
  if (x < 0) throw Error(ErrorKind::kInvalidArgument, "arith.cbrt", "negative argument");
  Integer root;
  if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), 3) != 0) {
    return Interval::point(Rational(root * root));
  }
  return {cube_root_squared_rounded(x, bits, MPFR_RNDD),
          cube_root_squared_rounded(x, bits, MPFR_RNDU)};
}

Interval pi_squared(unsigned bits) {
  return {pi_squared_rounded(bits, MPFR_RNDD), pi_squared_rounded(bits, MPFR_RNDU)};
}

bool fits_int64(const Integer& v) {
  static const Integer kMin(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer kMax(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= kMin && v <= kMax;
}

long long to_int64(const Integer& v) {
  if (!fits_int64(v)) {
    throw Error(ErrorKind::kInvalidArgument, "arith.int64", "value out of 64-bit range");
  }
  return std::stoll(v.get_str());
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw Error(ErrorKind::kInvalidArgument, "arith.parse", "expected integer, got '" + text + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw Error(ErrorKind::kInvalidArgument, "arith.parse",
                  "expected integer, got '" + text + "'");
    }
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorKind::kInvalidArgument, "arith.parse", "signed denominator in '" + text + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "arith.parse", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) significant = 1;
  if (q == 0) return "0";
  const bool negative = q < 0;
  Rational a = abs(q);

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(floor(a).get_mpz_t(), 10)) - 1;
  if (a < 1) {
    e = -1;
    while (a * Rational(pow10(static_cast<unsigned long>(-e))) < 1) --e;
  } else {
    while (Rational(pow10(static_cast<unsigned long>(e))) > a) --e;
    while (Rational(pow10(static_cast<unsigned long>(e + 1))) <= a) ++e;
  }

  auto scaled_digits = [&](long exponent) {
    const long shift = significant - 1 - exponent;
    Rational s = a;
    if (shift >= 0) {
      s *= Rational(pow10(static_cast<unsigned long>(shift)));
    } else {
      s /= Rational(pow10(static_cast<unsigned long>(-shift)));
    }
    s.canonicalize();
    // Round half to even.
    Integer n = floor(s);
    const Rational frac = s - Rational(n);
    const Rational half(1, 2);
    if (frac > half || (frac == half && mpz_odd_p(n.get_mpz_t()))) n += 1;
    return n;
  };

  Integer digits = scaled_digits(e);
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    ++e;
    digits = scaled_digits(e);
  }
  std::string s = digits.get_str();

  std::string out;
  if (e >= significant - 1) {
    out = s + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
  } else if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  } else {
    out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." + s.substr(static_cast<std::size_t>(e + 1));
  }
  return negative ? "-" + out : out;
}

}  // namespace einobs
