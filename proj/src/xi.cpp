#include "nrs/xi.hpp"

#include <string>

#include "nrs/errors.hpp"
#include "nrs/scalar.hpp"

namespace nrs {

namespace {

using RationalPoly = std::vector<Rational>;

RationalPoly multiply(const RationalPoly& p, const RationalPoly& q) {
  RationalPoly r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// s * prod_{j=0}^{k} (1 - 2j - s) + (1 - s) * prod_{j=0}^{k} (s - 2j), in u = s - 1/2.
RationalPoly summand_polynomial(int k) {
  const Rational half(1, 2);
  RationalPoly left{half, Rational(1)};
  RationalPoly right{half, Rational(-1)};
  for (int j = 0; j <= k; ++j) {
    left = multiply(left, {half - 2 * j, Rational(-1)});
    right = multiply(right, {half - 2 * j, Rational(1)});
  }
  for (std::size_t i = 0; i < left.size(); ++i) left[i] += right[i];
  return left;
}

}  // namespace

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw RangeError("Stirling table size must be non-negative");
  rows_.push_back({BigInt(1)});
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> next(static_cast<std::size_t>(n + 2), BigInt(0));
    for (int k = 0; k <= n + 1; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      if (k <= n) next[ku] += prev[ku] * n;
      if (k >= 1) next[ku] += prev[ku - 1];
    }
    rows_.push_back(std::move(next));
  }
}

const BigInt& StirlingTable::operator()(int n, int k) const {
  static const BigInt zero(0);
  if (n < 0 || n > n_max_ || k < 0) {
    throw RangeError("Stirling index [" + std::to_string(n) + " " + std::to_string(k) + "] outside the table");
  }
  if (k > n) return zero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling_unsigned(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw RangeError("stirling_unsigned needs 0 <= k <= n");
  return StirlingTable(n)(n, k);
}

Float b_coefficient(int k, long precision) {
  if (k < 1) throw RangeError("b_k needs k >= 1");
  PrecisionScope scope(precision + 16);
  const Float pi = const_pi();
  Float sum(0);
  for (long n = 1;; ++n) {
    const Float x = pi * Float(n * n);
    const Float term = exp(-x) / pow(x, k);
    if (n > 1 && abs(term) < ldexp(abs(sum), -precision - 8)) break;
    sum += term;
  }
  return sum;
}

XiSeries xi_coefficients(int n_max, int k_max, long precision) {
  if (k_max < 0) throw RangeError("k_max must be non-negative");
  if (n_max < 2 * k_max) throw RangeError("n_max must be at least 2 k_max");
  if (precision < 128) throw RangeError("xi coefficients need at least 128 bits");
  PrecisionScope scope(precision);

  const StirlingTable stirling(n_max);
  const int degree = n_max + 2;  // degree of the k = n_max summand polynomial
  std::vector<Float> u_coeffs(static_cast<std::size_t>(degree + 1), Float(0));

  for (int k = 0; k <= n_max; ++k) {
    // Exact weight sum_{n >= k} [n k] / (n+1)!.
    Rational weight(0);
    BigInt fact = factorial(static_cast<unsigned>(k + 1));
    for (int n = k; n <= n_max; ++n) {
      if (n > k) fact *= n + 1;
      weight += Rational(stirling(n, k), fact);
    }
    if (weight.is_zero()) continue;
    const Float scale = ldexp(b_coefficient(k + 1, precision), -(k + 1)) * Float(weight);
    const RationalPoly poly = summand_polynomial(k);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (!poly[i].is_zero()) u_coeffs[i] += scale * Float(poly[i]);
    }
  }

  XiSeries out;
  out.n_max = n_max;
  out.precision = precision;
  out.odd_residual = Float(0);
  for (auto& c : u_coeffs) c = Float(-2) * c;
  u_coeffs[0] += Float(1);
  for (std::size_t i = 1; i < u_coeffs.size(); i += 2) {
    if (abs(u_coeffs[i]) > out.odd_residual) out.odd_residual = abs(u_coeffs[i]);
  }
  if (out.odd_residual > ldexp(Float(1), -precision + 48)) {
    throw OddPowerResidual("odd powers of u fail to cancel: residual " + print_scalar(out.odd_residual, 6));
  }
  // u = i sqrt(t): u^{2j} = (-1)^j t^j.
  for (int j = 0; j <= k_max; ++j) {
    const Float& c = u_coeffs[static_cast<std::size_t>(2 * j)];
    out.a.push_back(j % 2 ? -c : c);
  }
  return out;
}

Polynomial<Float> jensen_polynomial(const XiSeries& series, int degree) {
  if (degree < 0 || degree >= static_cast<int>(series.a.size())) {
    throw RangeError("Jensen degree " + std::to_string(degree) + " exceeds the available coefficients");
  }
  std::vector<Float> c;
  for (int k = 0; k <= degree; ++k) {
    c.push_back(Float(binomial(static_cast<unsigned>(degree), static_cast<unsigned>(k))) * series.a[static_cast<std::size_t>(k)]);
  }
  return Polynomial<Float>(std::move(c));
}

}  // namespace nrs
