#include "nrs/scalar.hpp"

#include <mpfr.h>

#include <memory>
#include <regex>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

bool is_integer_text(std::string_view s) {
  static const std::regex kInteger(R"(^[+-]?\d+$)");
  return std::regex_match(s.begin(), s.end(), kInteger);
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_text(t)) throw ParseError("not an integer or fraction: '" + t + "'");
    return Rational(parse_integer(t));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed fraction: '" + t + "'");
  }
  const BigInt q = parse_integer(den);
  if (q.is_zero()) throw ParseError("zero denominator: '" + t + "'");
  return Rational(parse_integer(num), q);
}

ParsedScalar parse_scalar(std::string_view text) {
  const std::string t = trim(text);
  if (t.find('/') != std::string::npos || is_integer_text(t)) return parse_rational(t);
  return parse_float(t);
}

std::string print_scalar(const Float& x, int sigfigs) {
  if (sigfigs < 1) throw RangeError("sigfigs must be positive");
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return mpfr_nan_p(x.get()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> digits(
      mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sigfigs), x.get(), MPFR_RNDN), mpfr_free_str);
  std::string d(digits.get());
  std::string out;
  if (d.front() == '-') {
    out += '-';
    d.erase(0, 1);
  }
  out += d.front();
  if (d.size() > 1) {
    out += '.';
    out += d.substr(1);
  }
  out += 'e';
  out += std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string print_scalar(const Rational& x, int sigfigs) {
  // Enough guard bits that rounding to sigfigs decimal digits is exact.
  PrecisionScope scope(std::max<long>(working_precision(), 4L * sigfigs + 64));
  return print_scalar(Float(x), sigfigs);
}

}  // namespace nrs
