#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nrs/bigint.hpp"
#include "nrs/genluk.hpp"
#include "nrs/polynomial.hpp"
#include "nrs/scalar.hpp"

namespace nrs {

/// Exponent tuple (i_0, ..., i_n) of one monomial of the bracket series
/// [a_{j-1}/a_j]: sum_{k != j} i_k = i_j and sum_{k != j} k i_k = j i_j.
using IndexTuple = std::vector<long>;

/// Visits every index tuple with n = degree, distinguished slot j and i_j = top.
void for_each_index_tuple(int degree, int j, long top, const std::function<void(const IndexTuple&)>& visit);

/// 1/(i_{j-1}+1) * multinomial(i_j; i_k for k != j).
Rational sturmfels_coefficient(const IndexTuple& tuple, int j);

/// Degree sequence of the trees counted by a tuple: i_k -> d_{1+k-j} for
/// k != j, j-1, and d_0 = i_{j-1} + 1.
DegreeSequence tuple_degree_sequence(const IndexTuple& tuple, int j);

/// Terms of -[a_{m-1}/a_m] grouped by i_j = 0..top.
template <Scalar S>
std::vector<S> sturmfels_by_vertices(const Polynomial<S>& p, int m, int top) {
  const int n = p.degree();
  if (m < 1 || m > n) throw RangeError("sturmfels: m must lie in [1, deg p]");
  const S lead = p.coeff(m);
  if (is_zero(lead)) throw ZeroDenominator("a_" + std::to_string(m) + " is zero");
  std::vector<S> out;
  for (long t = 0; t <= top; ++t) {
    S grade(0);
    for_each_index_tuple(n, m, t, [&](const IndexTuple& tuple) {
      S term = from_rational<S>(sturmfels_coefficient(tuple, m)) * p.coeff(m - 1) / ipow(lead, t + 1);
      if (t % 2) term = -term;
      for (int k = 0; k <= n; ++k) {
        if (k != m && tuple[static_cast<std::size_t>(k)] > 0) term *= ipow(p.coeff(k), tuple[static_cast<std::size_t>(k)]);
      }
      grade += term;
    });
    out.push_back(-grade);
  }
  return out;
}

/// -sum of Sturmfels terms with i_j <= top.
template <Scalar S>
S sturmfels_truncation(const Polynomial<S>& p, int m, int top) {
  S total(0);
  for (const S& g : sturmfels_by_vertices(p, m, top)) total += g;
  return total;
}

/// Tree sums sum R_m(T) grouped by letter count N = 1..grade_cap; entry N-1.
template <Scalar S>
std::vector<S> tree_sums_by_grade(const Polynomial<S>& p, int m, int grade_cap) {
  if (m < 1 || m > p.degree()) throw RangeError("tree sums: m must lie in [1, deg p]");
  std::vector<S> out(static_cast<std::size_t>(std::max(grade_cap, 0)), S(0));
  for_each_word_up_to_grade(m, p.degree() - m + 1, grade_cap, [&](const GenLukWord& w) {
    out[w.size() - 1] += r_expression(w, p, m);
  });
  return out;
}

/// Sum of R_m(T) over trees in Luk_m with at most grade_cap letters.
template <Scalar S>
S tree_truncation(const Polynomial<S>& p, int m, int grade_cap) {
  S total(0);
  for (const S& g : tree_sums_by_grade(p, m, grade_cap)) total += g;
  return total;
}

struct GradeComparison {
  int grade = 0;  ///< letter count N; compared with the Sturmfels terms at i_j = N - 1
  Rational tree;
  Rational sturmfels;
  Rational zero_free;  ///< part of `tree` from words with no 0 letter
  bool equal = false;
  /// e with tree = sturmfels * (-a_{m-1}/a_m)^e, when unequal and such e exists.
  std::optional<int> discrepancy_exponent;
};

struct EquivalenceReport {
  int m = 0;
  int grade_cap = 0;
  std::vector<GradeComparison> grades;

  bool all_equal() const;
  /// "equal" or a description of the discrepancy pattern.
  std::string verdict() const;
  std::string to_text() const;
};

/// Grade-by-grade comparison of tree sums and the bracket series.
EquivalenceReport equivalence_report(const Polynomial<Rational>& p, int m, int grade_cap);

}  // namespace nrs
