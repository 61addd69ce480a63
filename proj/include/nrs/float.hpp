#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "nrs/bigint.hpp"

namespace nrs {

/// Mantissa bits given to every Float created on this thread.
long working_precision() noexcept;
void set_working_precision(long bits);

inline constexpr long kDefaultPrecision = 384;
inline constexpr long kMinPrecision = 64;

/// Sets the thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/// Arbitrary-precision binary float backed by MPFR.
///
/// Every arithmetic result is rounded to the thread's working precision,
/// regardless of the precision of the operands. Copies keep the source's
/// precision so that stored values are never silently rounded.
class Float {
 public:
  Float();
  Float(int v);
  Float(long v);
  Float(long long v);
  Float(unsigned long v);
  Float(double v);
  explicit Float(const Rational& q);
  explicit Float(const BigInt& z);

  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  Float& operator+=(const Float& rhs);
  Float& operator-=(const Float& rhs);
  Float& operator*=(const Float& rhs);
  Float& operator/=(const Float& rhs);

  friend Float operator+(const Float& a, const Float& b);
  friend Float operator-(const Float& a, const Float& b);
  friend Float operator*(const Float& a, const Float& b);
  friend Float operator/(const Float& a, const Float& b);
  friend Float operator-(const Float& a);

  friend bool operator==(const Float& a, const Float& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Float& a, const Float& b);

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }
  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact rational value of this (finite) float.
  Rational to_rational() const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  mpfr_t value_;
};

Float abs(const Float& x);
Float sqrt(const Float& x);
Float exp(const Float& x);
Float log(const Float& x);
Float pow(const Float& x, long n);
Float pow(const Float& x, const Float& y);
/// x * 2^e, exact.
Float ldexp(const Float& x, long e);
Float atan2(const Float& y, const Float& x);
Float gamma(const Float& x);
Float zeta(const Float& x);
Float const_pi();

/// Parses decimal or scientific notation ("1.25", "-3e-4"). Throws ParseError.
Float parse_float(const std::string& text);

}  // namespace nrs
