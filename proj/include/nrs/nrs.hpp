#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrs/auxfun.hpp"
#include "nrs/errors.hpp"
#include "nrs/linalg.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

/// One table row: J_{0,m}(n)..J_{m-1,m}(n), their sum J_m(n) and the partial
/// sum -a_{m-1}/a_m + sum_i S_{i,m}(n).
template <Scalar S>
struct IterationRow {
  int n = 0;
  std::vector<S> j;
  S j_total;
  S partial_sum;
};

/// Stepwise NRS(m) iteration. Keeps S(n), S(n-1) and J(n); rows are streamed.
template <Scalar S>
class NrsState {
 public:
  NrsState(const Polynomial<S>& p, int m) : NrsState(p, m, build_aux_system(m, check(p, m))) {}

  NrsState(const Polynomial<S>& p, int m, AuxSystem<S> aux)
      : m_(m),
        aux_(std::move(aux)),
        base_(-p.coeff(m - 1) / p.coeff(m)),
        sums_(zero_vector<S>(m)),
        previous_sums_(zero_vector<S>(m)),
        last_(zero_vector<S>(m)) {}

  int m() const noexcept { return m_; }
  int step_count() const noexcept { return n_; }
  const S& base() const noexcept { return base_; }
  const Vector<S>& sums() const noexcept { return sums_; }
  const Vector<S>& previous_sums() const noexcept { return previous_sums_; }
  const Vector<S>& last_increment() const noexcept { return last_; }
  const AuxSystem<S>& aux() const noexcept { return aux_; }

  IterationRow<S> row() const {
    IterationRow<S> r{n_, {}, S(0), base_};
    for (int i = 0; i < m_; ++i) {
      r.j.push_back(last_[i]);
      r.j_total += last_[i];
      r.partial_sum += sums_[i];
    }
    return r;
  }

  /// Solves (I - G(S(n))) J(n+1) = F(S(n)) - F(S(n-1)) - G(S(n-1)) J(n);
  /// at n = 0 the right-hand side is F(0).
  IterationRow<S> step() {
    Vector<S> rhs = aux_.values(sums_);
    const Matrix<S> gradient = aux_.gradient(sums_);
    if (n_ > 0) {
      rhs -= aux_.values(previous_sums_);
      rhs -= aux_.gradient(previous_sums_) * last_;
    }
    Matrix<S> system = identity_matrix<S>(m_) - gradient;
    Vector<S> next;
    try {
      next = solve_linear<S>(std::move(system), std::move(rhs));
    } catch (const SingularMatrix& e) {
      throw SingularSystem(n_ + 1, "step " + std::to_string(n_ + 1) + ": " + e.what());
    }
    previous_sums_ = sums_;
    sums_ += next;
    last_ = std::move(next);
    ++n_;
    return row();
  }

 private:
  static const Polynomial<S>& check(const Polynomial<S>& p, int m) {
    if (m < 1 || m > p.degree()) throw RangeError("m must lie in [1, deg p], got " + std::to_string(m));
    if (is_zero(p.coeff(m))) throw ZeroDenominator("a_" + std::to_string(m) + " is zero");
    if (m >= 2 && is_zero(p.coeff(m - 1))) throw ZeroDenominator("a_" + std::to_string(m - 1) + " is zero");
    return p;
  }

  int m_;
  int n_ = 0;
  AuxSystem<S> aux_;
  S base_;
  Vector<S> sums_;
  Vector<S> previous_sums_;
  Vector<S> last_;
};

enum class Verdict { Converged, MaxSteps, Failed };

std::string to_string(Verdict v);

struct RunOptions {
  int max_steps = 64;
  /// Stop once |J_m(n)| < tol; defaults to 2^(-precision + 32).
  std::optional<Rational> tol;
  long precision = kDefaultPrecision;
};

template <Scalar S>
struct RunResult {
  std::vector<IterationRow<S>> rows;  ///< rows[0] is n = 0
  Verdict verdict = Verdict::MaxSteps;
  std::string diagnostic;
};

template <Scalar S>
RunResult<S> run_with(NrsState<S> state, const RunOptions& options) {
  const S tol = options.tol ? from_rational<S>(*options.tol) : pow2<S>(-options.precision + 32);
  RunResult<S> result;
  result.rows.push_back(state.row());
  for (int n = 0; n < options.max_steps; ++n) {
    try {
      result.rows.push_back(state.step());
    } catch (const SingularSystem& e) {
      result.verdict = Verdict::Failed;
      result.diagnostic = e.what();
      return result;
    }
    if (abs(result.rows.back().j_total) < tol) {
      result.verdict = Verdict::Converged;
      return result;
    }
  }
  result.verdict = Verdict::MaxSteps;
  return result;
}

/// Iterates NRS(m) until |J_m(n)| < tol, max_steps, or a singular step.
template <Scalar S>
RunResult<S> run(const Polynomial<S>& p, int m, const RunOptions& options = {}) {
  PrecisionScope scope(options.precision);
  return run_with(NrsState<S>(p, m), options);
}

/// Newton-Raphson-Simpson iterates c_0 = 0, c_{N+1} = c_N - f(c_N)/f'(c_N).
template <Scalar S>
std::vector<S> newton_run(const Polynomial<S>& p, int steps, long precision = kDefaultPrecision) {
  PrecisionScope scope(precision);
  std::vector<S> c{S(0)};
  for (int n = 0; n < steps; ++n) {
    const S slope = p.derivative_at(c.back());
    if (is_zero(slope)) throw DerivativeZero("f'(c_" + std::to_string(n) + ") = 0");
    c.push_back(c.back() - p(c.back()) / slope);
  }
  return c;
}

}  // namespace nrs
