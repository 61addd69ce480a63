#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nrs/errors.hpp"
#include "nrs/scalar.hpp"

namespace nrs {

/// Univariate polynomial a_0 + a_1 z + ... + a_d z^d with a_d != 0.
template <Scalar S>
class Polynomial {
 public:
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw RangeError("polynomial needs at least one coefficient");
    if (is_zero(coeffs_.back())) throw RangeError("leading coefficient must be nonzero");
  }

  /// Monic polynomial with the given roots.
  static Polynomial from_roots(std::span<const S> roots) {
    std::vector<S> c{S(1)};
    for (const S& r : roots) {
      std::vector<S> next(c.size() + 1, S(0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= r * c[k];
      }
      c = std::move(next);
    }
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// a_k, or zero for k outside [0, d].
  S coeff(int k) const { return k < 0 || k > degree() ? S(0) : coeffs_[static_cast<std::size_t>(k)]; }
  const S& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const S> coeffs() const noexcept { return coeffs_; }

  S operator()(const S& z) const {
    S acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  S derivative_at(const S& z) const {
    S acc(0);
    for (int k = degree(); k >= 1; --k) acc = acc * z + S(k) * coeffs_[static_cast<std::size_t>(k)];
    return acc;
  }

  template <Scalar T>
  Polynomial<T> cast() const {
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const S& c : coeffs_) {
      out.push_back(convert<T>(c));
    }
    return Polynomial<T>(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<S> coeffs_;
};

}  // namespace nrs
