#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace nrs {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace nrs
