#pragma once

#include <vector>

#include "nrs/bigint.hpp"
#include "nrs/float.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

/// Unsigned Stirling numbers of the first kind [n k] for 0 <= k <= n <= n_max.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const noexcept { return n_max_; }
  /// [n k]; zero for k > n. Throws RangeError outside the table.
  const BigInt& operator()(int n, int k) const;

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling_unsigned(int n, int k);

/// b_k = sum_{n >= 1} e^{-pi n^2} / (pi n^2)^k, summed at the given precision.
Float b_coefficient(int k, long precision = kDefaultPrecision);

struct XiSeries {
  int n_max = 100;
  long precision = kDefaultPrecision;
  /// xi(1/2 + i sqrt(t)) = sum a_k t^k.
  std::vector<Float> a;
  /// Largest |coefficient of an odd power of u = s - 1/2|; zero in exact arithmetic.
  Float odd_residual;
};

/// Taylor coefficients a_0..a_{k_max} from the Stirling/b_k series truncated at n_max.
/// Throws OddPowerResidual if odd powers of u fail to cancel below 2^(-precision+48).
XiSeries xi_coefficients(int n_max = 100, int k_max = 8, long precision = kDefaultPrecision);

/// sum_{k=0}^{N} C(N,k) a_k z^k.
Polynomial<Float> jensen_polynomial(const XiSeries& series, int degree);

}  // namespace nrs
