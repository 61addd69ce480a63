#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include "nrs/bigint.hpp"
#include "nrs/float.hpp"

namespace nrs {

/// The two numeric modes. Every algorithm is templated on one of them, so
/// mixing modes inside a computation is a compile error.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct ScalarTraits<Float> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Float>;

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

template <Scalar S>
S from_rational(const Rational& q) {
  if constexpr (is_exact_v<S>) {
    return q;
  } else {
    return Float(q);
  }
}

template <Scalar S>
S from_int(const BigInt& z) {
  if constexpr (is_exact_v<S>) {
    return Rational(z);
  } else {
    return Float(z);
  }
}

/// Mode conversion; Float to Rational is the exact value of the float.
template <Scalar T>
T convert(const Rational& x) {
  return from_rational<T>(x);
}

template <Scalar T>
T convert(const Float& x) {
  if constexpr (is_exact_v<T>) {
    return x.to_rational();
  } else {
    return x;
  }
}

inline Float to_float(const Float& x) { return x; }
inline Float to_float(const Rational& x) { return Float(x); }

inline bool is_zero(const Float& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline int sign(const Float& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

/// 2^e exactly.
template <Scalar S>
S pow2(long e) {
  if constexpr (is_exact_v<S>) {
    BigInt one(1);
    return e >= 0 ? Rational(one << e) : Rational(one, one << -e);
  } else {
    return ldexp(Float(1), e);
  }
}

/// base^e with e of either sign; base must be nonzero when e < 0.
template <Scalar S>
S ipow(const S& base, long e) {
  S result(1);
  S b = e >= 0 ? base : S(1) / base;
  for (unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e); n; n >>= 1) {
    if (n & 1) result *= b;
    if (n > 1) b *= b;
  }
  return result;
}

/// Parses "p/q" or an integer. Throws ParseError (also for q = 0).
Rational parse_rational(std::string_view text);

/// A parsed scalar: "p/q" and integers are exact, decimal or scientific
/// notation gives a Float at the working precision.
using ParsedScalar = std::variant<Rational, Float>;
ParsedScalar parse_scalar(std::string_view text);

/// Scientific rendering "d.ddd...e<exp>" with the given significant digits;
/// zero renders as "0".
std::string print_scalar(const Float& x, int sigfigs);
std::string print_scalar(const Rational& x, int sigfigs);

}  // namespace nrs
