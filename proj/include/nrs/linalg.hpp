#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <sstream>
#include <string>
#include <utility>

#include "nrs/errors.hpp"
#include "nrs/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<nrs::Float> : GenericNumTraits<nrs::Float> {
  using Real = nrs::Float;
  using NonInteger = nrs::Float;
  using Nested = nrs::Float;
  using Literal = nrs::Float;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 10,
    MulCost = 40
  };

  static Real epsilon() { return nrs::ldexp(nrs::Float(1), 1 - nrs::working_precision()); }
  static Real dummy_precision() { return nrs::ldexp(nrs::Float(1), -nrs::working_precision() / 2); }
  static int digits10() { return static_cast<int>(nrs::working_precision() * 0.30103); }
};

}  // namespace Eigen

namespace nrs {

template <Scalar S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <Scalar S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <Scalar S>
Vector<S> zero_vector(Eigen::Index n) {
  Vector<S> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = S(0);
  return v;
}

template <Scalar S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = S(i == j ? 1 : 0);
  return a;
}

template <Scalar S>
std::string dump(const Matrix<S>& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << print_scalar(a(i, j), 12);
    os << "]\n";
  }
  return os.str();
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
///
/// Exact mode fails only on an exactly zero pivot. Float mode rejects pivots
/// smaller than 2^(-precision/2) times the largest magnitude in the pivot's
/// original row.
template <Scalar S>
Vector<S> solve_linear(Matrix<S> a, Vector<S> b) {
  const Eigen::Index n = a.rows();
  if (n < 1 || a.cols() != n) throw DimensionMismatch("solve_linear: matrix must be square and non-empty");
  if (b.size() != n) throw DimensionMismatch("solve_linear: right-hand side has the wrong length");

  const Matrix<S> original = a;
  std::vector<S> row_scale;
  if constexpr (!is_exact_v<S>) {
    row_scale.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      S mx(0);
      for (Eigen::Index j = 0; j < n; ++j) mx = std::max(mx, abs(a(i, j)));
      row_scale.push_back(mx);
    }
  }
  std::vector<Eigen::Index> origin(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) origin[static_cast<std::size_t>(i)] = i;

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    S best = abs(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      S mag = abs(a(r, col));
      if (mag > best) {
        best = std::move(mag);
        pivot = r;
      }
    }
    bool singular = is_zero(best);
    if constexpr (!is_exact_v<S>) {
      const S threshold = ldexp(row_scale[static_cast<std::size_t>(origin[static_cast<std::size_t>(pivot)])],
                                -working_precision() / 2);
      singular = singular || best < threshold;
    }
    if (singular) {
      throw SingularMatrix("singular matrix at column " + std::to_string(col) + ":\n" + dump(original));
    }
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b[col], b[pivot]);
      std::swap(origin[static_cast<std::size_t>(col)], origin[static_cast<std::size_t>(pivot)]);
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const S factor = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }

  Vector<S> x = zero_vector<S>(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    S acc = b[i];
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace nrs
