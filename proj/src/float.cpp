#include "nrs/float.hpp"

#include <regex>
#include <utility>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

static_assert(sizeof(long long) == sizeof(long), "Float(long long) narrows through long");

thread_local long t_precision = kDefaultPrecision;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

}  // namespace

long working_precision() noexcept { return t_precision; }

void set_working_precision(long bits) {
  if (bits < kMinPrecision || bits > MPFR_PREC_MAX) {
    throw RangeError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  t_precision = bits;
}

PrecisionScope::PrecisionScope(long bits) : saved_(t_precision) { set_working_precision(bits); }

PrecisionScope::~PrecisionScope() { t_precision = saved_; }

Float::Float() {
  mpfr_init2(value_, t_precision);
  mpfr_set_zero(value_, 1);
}

Float::Float(int v) : Float(static_cast<long>(v)) {}

Float::Float(long v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_si(value_, v, kRound);
}

Float::Float(long long v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_si(value_, static_cast<long>(v), kRound);
}

Float::Float(unsigned long v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_ui(value_, v, kRound);
}

Float::Float(double v) {
  mpfr_init2(value_, t_precision);
  mpfr_set_d(value_, v, kRound);
}

Float::Float(const Rational& q) {
  mpfr_init2(value_, t_precision);
  mpfr_set_q(value_, q.backend().data(), kRound);
}

Float::Float(const BigInt& z) {
  mpfr_init2(value_, t_precision);
  mpfr_set_z(value_, z.backend().data(), kRound);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

Float::Float(Float&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

Float& Float::operator+=(const Float& rhs) { return *this = *this + rhs; }
Float& Float::operator-=(const Float& rhs) { return *this = *this - rhs; }
Float& Float::operator*=(const Float& rhs) { return *this = *this * rhs; }
Float& Float::operator/=(const Float& rhs) { return *this = *this / rhs; }

Float operator+(const Float& a, const Float& b) {
  Float r;
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}

Float operator-(const Float& a, const Float& b) {
  Float r;
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}

Float operator*(const Float& a, const Float& b) {
  Float r;
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}

Float operator/(const Float& a, const Float& b) {
  Float r;
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}

Float operator-(const Float& a) {
  Float r;
  mpfr_neg(r.value_, a.value_, kRound);
  return r;
}

std::partial_ordering operator<=>(const Float& a, const Float& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Rational Float::to_rational() const {
  if (!is_finite()) throw RangeError("cannot convert a non-finite float to a rational");
  BigInt mantissa;
  const long e = mpfr_get_z_2exp(mantissa.backend().data(), value_);
  Rational q(mantissa);
  if (e >= 0) {
    q *= Rational(BigInt(1) << e);
  } else {
    q /= Rational(BigInt(1) << -e);
  }
  return q;
}

Float abs(const Float& x) {
  Float r;
  mpfr_abs(r.get(), x.get(), kRound);
  return r;
}

Float sqrt(const Float& x) {
  Float r;
  mpfr_sqrt(r.get(), x.get(), kRound);
  return r;
}

Float exp(const Float& x) {
  Float r;
  mpfr_exp(r.get(), x.get(), kRound);
  return r;
}

Float log(const Float& x) {
  Float r;
  mpfr_log(r.get(), x.get(), kRound);
  return r;
}

Float pow(const Float& x, long n) {
  Float r;
  mpfr_pow_si(r.get(), x.get(), n, kRound);
  return r;
}

Float pow(const Float& x, const Float& y) {
  Float r;
  mpfr_pow(r.get(), x.get(), y.get(), kRound);
  return r;
}

Float ldexp(const Float& x, long e) {
  Float r;
  mpfr_mul_2si(r.get(), x.get(), e, kRound);
  return r;
}

Float atan2(const Float& y, const Float& x) {
  Float r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRound);
  return r;
}

Float gamma(const Float& x) {
  Float r;
  mpfr_gamma(r.get(), x.get(), kRound);
  return r;
}

Float zeta(const Float& x) {
  Float r;
  mpfr_zeta(r.get(), x.get(), kRound);
  return r;
}

Float const_pi() {
  Float r;
  mpfr_const_pi(r.get(), kRound);
  return r;
}

Float parse_float(const std::string& text) {
  static const std::regex kDecimal(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  if (!std::regex_match(text, kDecimal)) throw ParseError("malformed number: '" + text + "'");
  Float r;
  mpfr_set_str(r.get(), text.c_str(), 10, kRound);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

}  // namespace nrs
