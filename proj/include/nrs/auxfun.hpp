#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nrs/bigint.hpp"
#include "nrs/errors.hpp"
#include "nrs/linalg.hpp"
#include "nrs/mpoly.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

/// Builds the auxiliary functions f_{i,m} of a polynomial from partial blocks
/// and partial trees. Results are memoized per (i, s) and per s.
///
/// Notation: c = -a_{m-1}/a_m, q(k) = -a_k/a_m, and PT(s) is the sum over
/// partial trees with s empty subtrees.
template <Scalar S>
class AuxBuilder {
 public:
  AuxBuilder(int m, Polynomial<S> p) : m_(m), p_(std::move(p)) {
    if (m < 1 || m > p_.degree()) {
      throw RangeError("m must lie in [1, deg p], got " + std::to_string(m));
    }
    if (nrs::is_zero(p_.coeff(m))) throw ZeroDenominator("a_" + std::to_string(m) + " is zero");
  }

  int m() const noexcept { return m_; }
  const Polynomial<S>& polynomial() const noexcept { return p_; }

  /// -a_k / a_m (zero for k outside [0, deg p]).
  S ratio(int k) const { return -p_.coeff(k) / p_.coeff(m_); }

  /// Sum of R_m-expressions of all (k,h)_m partial blocks:
  /// q(m-h-1) c^(k-2-h) sum_{i=h-(k-2)}^{m-1} (x_i + c [i = 1]).
  MPoly<S> partial_block(int k, int h) const {
    if (!(h >= 1 && h <= m_ - 1 && k >= 2 && k <= h + 1)) {
      throw RangeError("partial block (k=" + std::to_string(k) + ", h=" + std::to_string(h) + ") outside bounds for m=" +
                       std::to_string(m_));
    }
    const S c = base();
    if (nrs::is_zero(c)) throw ZeroDenominator("a_" + std::to_string(m_ - 1) + " is zero; partial blocks divide by it");
    MPoly<S> sum(m_);
    for (int i = h - (k - 2); i <= m_ - 1; ++i) {
      sum += MPoly<S>::variable(m_, i);
      if (i == 1) sum += MPoly<S>::constant(m_, c);
    }
    return sum * (ratio(m_ - h - 1) * ipow(c, k - 2 - h));
  }

  /// Sum of R_m-expressions of every partial tree with s empty subtrees.
  const MPoly<S>& partial_trees(int s) {
    if (s < 0) throw RangeError("partial_trees: s must be non-negative");
    auto it = partial_trees_.find(s);
    if (it != partial_trees_.end()) return it->second;

    MPoly<S> total(m_);
    const int budget = p_.degree() - m_ + 1 - s;  // max sum of block lengths before a_k vanishes
    std::vector<int> counts(static_cast<std::size_t>(m_), 0);
    if (budget >= 0) accumulate_partial_trees(s, 1, budget, counts, total);
    return partial_trees_.emplace(s, std::move(total)).first->second;
  }

  /// f_{i,m}(x, s).
  const MPoly<S>& aux_function(int i, int s) {
    if (i < 0 || i > m_ - 1) throw RangeError("aux_function: i must lie in [0, m-1]");
    if (s < 0) throw RangeError("aux_function: s must be non-negative");
    if (i == m_ - 1 && s > 0) {
      throw SOnFinal("f_{m-1,m} is only defined without empty subtrees (s = 0)");
    }
    auto key = std::make_pair(i, s);
    auto it = aux_.find(key);
    if (it != aux_.end()) return it->second;

    MPoly<S> f(m_);
    if (i == m_ - 1) {
      const S c = base();
      f = partial_trees(m_ - 1) * ipow(c, m_ - 1);
      for (int k = 0; k <= m_ - 2; ++k) {
        MPoly<S> xs(m_);
        for (int j = m_ - k - 1; j <= m_ - 1; ++j) xs += MPoly<S>::variable(m_, j);
        f += (xs * partial_trees(k + 1)) * ipow(c, k);
      }
    } else if (i == 0) {
      f = MPoly<S>::variable(m_, 0) * partial_trees(s + 1);
      for (int k = 2; k <= m_; ++k) f += block_sum(k) * partial_trees(s + k);
      if (s >= 2) f += MPoly<S>::constant(m_, ratio(m_ - 1 + s));
    } else {
      f = MPoly<S>::variable(m_, i) * partial_trees(s + 1);
      MPoly<S> shifted = aux_function(i - 1, s + 1);
      f += shifted * base();
    }
    return aux_.emplace(key, std::move(f)).first->second;
  }

 private:
  S base() const { return ratio(m_ - 1); }

  // sum_{h=k-1}^{m-1} PartialBlock(k, h) for k >= 2; c + sum x_i for k = 1.
  const MPoly<S>& block_sum(int k) {
    auto it = block_sums_.find(k);
    if (it != block_sums_.end()) return it->second;
    MPoly<S> sum(m_);
    if (k == 1) {
      sum += MPoly<S>::constant(m_, base());
      for (int i = 0; i < m_; ++i) sum += MPoly<S>::variable(m_, i);
    } else {
      for (int h = k - 1; h <= m_ - 1; ++h) sum += partial_block(k, h);
    }
    return block_sums_.emplace(k, std::move(sum)).first->second;
  }

  const MPoly<S>& block_power(int k, int n) {
    auto key = std::make_pair(k, n);
    auto it = block_powers_.find(key);
    if (it != block_powers_.end()) return it->second;
    MPoly<S> value = n == 0 ? MPoly<S>::constant(m_, S(1)) : block_power(k, n - 1) * block_sum(k);
    return block_powers_.emplace(key, std::move(value)).first->second;
  }

  // Enumerates n_k for k = length..m with sum k n_k <= budget.
  void accumulate_partial_trees(int s, int length, int budget, std::vector<int>& counts, MPoly<S>& total) {
    if (length > m_) {
      int weight = 0;
      int blocks = 0;
      for (int k = 1; k <= m_; ++k) {
        weight += k * counts[static_cast<std::size_t>(k - 1)];
        blocks += counts[static_cast<std::size_t>(k - 1)];
      }
      if (s + weight < 2) return;
      const S root = ratio(s + m_ - 1 + weight);
      if (nrs::is_zero(root)) return;
      BigInt multinomial = factorial(static_cast<unsigned>(blocks));
      for (int n : counts) multinomial /= factorial(static_cast<unsigned>(n));
      MPoly<S> term = MPoly<S>::constant(m_, root * from_int<S>(multinomial));
      for (int k = 1; k <= m_; ++k) {
        const int n = counts[static_cast<std::size_t>(k - 1)];
        if (n > 0) term *= block_power(k, n);
      }
      total += term;
      return;
    }
    for (int n = 0; n * length <= budget; ++n) {
      counts[static_cast<std::size_t>(length - 1)] = n;
      accumulate_partial_trees(s, length + 1, budget - n * length, counts, total);
    }
    counts[static_cast<std::size_t>(length - 1)] = 0;
  }

  int m_;
  Polynomial<S> p_;
  std::map<int, MPoly<S>> partial_trees_;
  std::map<std::pair<int, int>, MPoly<S>> aux_;
  std::map<int, MPoly<S>> block_sums_;
  std::map<std::pair<int, int>, MPoly<S>> block_powers_;
};

template <Scalar S>
MPoly<S> partial_block(int m, int k, int h, const Polynomial<S>& p) {
  if (m < 2) throw RangeError("no partial blocks exist for m = 1");
  return AuxBuilder<S>(m, p).partial_block(k, h);
}

template <Scalar S>
MPoly<S> partial_trees(int m, int s, const Polynomial<S>& p) {
  AuxBuilder<S> builder(m, p);
  return builder.partial_trees(s);
}

template <Scalar S>
MPoly<S> aux_function(int m, int i, int s, const Polynomial<S>& p) {
  AuxBuilder<S> builder(m, p);
  return builder.aux_function(i, s);
}

/// f_{0,m}..f_{m-1,m} and their Jacobian.
template <Scalar S>
struct AuxSystem {
  int m = 0;
  std::vector<MPoly<S>> f;
  std::vector<std::vector<MPoly<S>>> jacobian;  ///< jacobian[i][j] = d f_i / d x_j

  Vector<S> values(const Vector<S>& x) const {
    Vector<S> out(m);
    for (int i = 0; i < m; ++i) out[i] = evaluate(f[static_cast<std::size_t>(i)], x);
    return out;
  }

  Matrix<S> gradient(const Vector<S>& x) const {
    Matrix<S> out(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        out(i, j) = evaluate(jacobian[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], x);
    return out;
  }

  bool is_zero() const {
    return std::all_of(f.begin(), f.end(), [](const MPoly<S>& g) { return g.is_zero(); });
  }

  template <Scalar T>
  AuxSystem<T> cast() const {
    AuxSystem<T> out;
    out.m = m;
    for (const auto& g : f) out.f.push_back(g.template cast<T>());
    for (const auto& row : jacobian) {
      out.jacobian.emplace_back();
      for (const auto& g : row) out.jacobian.back().push_back(g.template cast<T>());
    }
    return out;
  }
};

template <Scalar S>
AuxSystem<S> build_aux_system(int m, const Polynomial<S>& p) {
  AuxBuilder<S> builder(m, p);
  AuxSystem<S> sys;
  sys.m = m;
  for (int i = 0; i < m; ++i) sys.f.push_back(builder.aux_function(i, 0));
  for (int i = 0; i < m; ++i) {
    sys.jacobian.emplace_back();
    for (int j = 0; j < m; ++j) sys.jacobian.back().push_back(partial_derivative(sys.f[static_cast<std::size_t>(i)], j));
  }
  return sys;
}

/// One "f_{i,m} = ..." line per function, terms in graded-lex order.
template <Scalar S>
std::string dump(const AuxSystem<S>& sys) {
  std::string out;
  for (int i = 0; i < sys.m; ++i) {
    out += "f_{" + std::to_string(i) + "," + std::to_string(sys.m) + "} = " + to_string(sys.f[static_cast<std::size_t>(i)]) +
           "\n";
  }
  return out;
}

}  // namespace nrs
