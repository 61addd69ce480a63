#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nrs/errors.hpp"
#include "nrs/linalg.hpp"
#include "nrs/scalar.hpp"

namespace nrs {

using Exponent = std::vector<int>;

/// Graded lexicographic: lower total degree first, then lexicographic with x_0 most significant.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse polynomial in x_0..x_{m-1}; zero coefficients are never stored.
template <Scalar S>
class MPoly {
 public:
  using Terms = std::map<Exponent, S, GradedLex>;

  explicit MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionMismatch("MPoly needs at least one variable");
  }

  static MPoly constant(int nvars, const S& c) {
    MPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static MPoly variable(int nvars, int j) {
    if (j < 0 || j >= nvars) throw RangeError("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j)] = 1;
    MPoly p(nvars);
    p.add_term(std::move(e), S(1));
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  S coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  void add_term(Exponent e, const S& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent length differs from variable count");
    if (nrs::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (nrs::is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& rhs) {
    check(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& rhs) {
    check(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  MPoly& operator*=(const S& k) {
    if (nrs::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= S(-1); }
  friend MPoly operator*(MPoly a, const S& k) { return a *= k; }
  friend MPoly operator*(const S& k, MPoly a) { return a *= k; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  template <Scalar T>
  MPoly<T> cast() const {
    MPoly<T> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, convert<T>(c));
    return out;
  }

 private:
  void check(const MPoly& other) const {
    if (other.nvars_ != nvars_) throw DimensionMismatch("MPoly variable counts differ");
  }

  int nvars_;
  Terms terms_;
};

template <Scalar S>
MPoly<S> pow(MPoly<S> base, unsigned n) {
  MPoly<S> result = MPoly<S>::constant(base.nvars(), S(1));
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

template <Scalar S>
MPoly<S> partial_derivative(const MPoly<S>& p, int j) {
  if (j < 0 || j >= p.nvars()) throw RangeError("partial_derivative: index " + std::to_string(j) + " out of range");
  MPoly<S> out(p.nvars());
  const auto ju = static_cast<std::size_t>(j);
  for (const auto& [e, c] : p.terms()) {
    if (e[ju] == 0) continue;
    Exponent d = e;
    --d[ju];
    out.add_term(std::move(d), c * S(e[ju]));
  }
  return out;
}

/// Value at a point given as an Eigen vector of length nvars.
template <Scalar S, class Derived>
S evaluate(const MPoly<S>& p, const Eigen::MatrixBase<Derived>& point) {
  if (point.size() != p.nvars()) throw DimensionMismatch("evaluate: point has the wrong length");
  // Power tables per variable, then one product per term.
  std::vector<std::vector<S>> powers(static_cast<std::size_t>(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& table = powers[i];
      if (table.empty()) table.push_back(S(1));
      while (static_cast<int>(table.size()) <= e[i]) table.push_back(table.back() * point(static_cast<Eigen::Index>(i)));
    }
  }
  S acc(0);
  for (const auto& [e, c] : p.terms()) {
    S term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= powers[i][static_cast<std::size_t>(e[i])];
    }
    acc += term;
  }
  return acc;
}

template <Scalar S>
std::string to_string(const MPoly<S>& p, int sigfigs = 10) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    if constexpr (is_exact_v<S>) {
      os << c.str();
    } else {
      os << print_scalar(c, sigfigs);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace nrs
