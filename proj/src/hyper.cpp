#include "nrs/hyper.hpp"

#include <sstream>

namespace nrs {

void for_each_index_tuple(int degree, int j, long top, const std::function<void(const IndexTuple&)>& visit) {
  if (j < 0 || j > degree) throw RangeError("index tuple: j out of range");
  IndexTuple tuple(static_cast<std::size_t>(degree + 1), 0);
  tuple[static_cast<std::size_t>(j)] = top;
  const long target = static_cast<long>(j) * top;

  // Slots k != j in increasing order; count = remaining vertices, weight = remaining sum k i_k.
  std::vector<int> slots;
  for (int k = 0; k <= degree; ++k) {
    if (k != j) slots.push_back(k);
  }
  std::function<void(std::size_t, long, long)> fill = [&](std::size_t idx, long count, long weight) {
    if (idx == slots.size()) {
      if (count == 0 && weight == 0) visit(tuple);
      return;
    }
    const int k = slots[idx];
    const bool last = idx + 1 == slots.size();
    for (long i = 0; i <= count && static_cast<long>(k) * i <= weight; ++i) {
      if (last && i != count) continue;
      tuple[static_cast<std::size_t>(k)] = i;
      fill(idx + 1, count - i, weight - k * i);
    }
    tuple[static_cast<std::size_t>(k)] = 0;
  };
  fill(0, top, target);
}

Rational sturmfels_coefficient(const IndexTuple& tuple, int j) {
  const auto ju = static_cast<std::size_t>(j);
  BigInt multinomial = factorial(static_cast<unsigned>(tuple[ju]));
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k != ju) multinomial /= factorial(static_cast<unsigned>(tuple[k]));
  }
  const long below = j >= 1 ? tuple[ju - 1] : 0;
  return Rational(multinomial, BigInt(below + 1));
}

DegreeSequence tuple_degree_sequence(const IndexTuple& tuple, int j) {
  DegreeSequence d;
  for (int k = 0; k < static_cast<int>(tuple.size()); ++k) {
    if (k == j || k == j - 1) continue;
    if (tuple[static_cast<std::size_t>(k)] > 0) d[1 + k - j] = tuple[static_cast<std::size_t>(k)];
  }
  d[0] = (j >= 1 ? tuple[static_cast<std::size_t>(j - 1)] : 0) + 1;
  return d;
}

bool EquivalenceReport::all_equal() const {
  return std::all_of(grades.begin(), grades.end(), [](const GradeComparison& g) { return g.equal; });
}

std::string EquivalenceReport::verdict() const {
  if (all_equal()) return "equal";
  std::optional<int> exponent;
  bool uniform = true;
  for (const auto& g : grades) {
    if (g.equal) continue;
    if (!g.discrepancy_exponent || (exponent && *exponent != *g.discrepancy_exponent)) uniform = false;
    exponent = g.discrepancy_exponent;
  }
  if (uniform && exponent) return "uniform discrepancy factor (-a_{m-1}/a_m)^" + std::to_string(*exponent);
  // Sturmfels tuples always carry i_{j-1} + 1 >= 1 zero letters
  if (std::all_of(grades.begin(), grades.end(), [](const GradeComparison& g) { return g.tree - g.zero_free == g.sturmfels; }))
    return "non-uniform discrepancy; equal once words without a 0 letter are dropped";
  return "non-uniform discrepancy";
}

std::string EquivalenceReport::to_text() const {
  std::ostringstream os;
  os << "m=" << m << " grades 1.." << grade_cap << "\n";
  for (const auto& g : grades) {
    os << "grade " << g.grade << ": trees=" << print_scalar(g.tree, 12) << " sturmfels=" << print_scalar(g.sturmfels, 12)
       << (g.equal ? " equal" : " DIFFERENT");
    if (g.discrepancy_exponent) os << " factor (-a_{m-1}/a_m)^" << *g.discrepancy_exponent;
    if (!g.zero_free.is_zero()) os << " zero-free=" << print_scalar(g.zero_free, 12);
    os << "\n";
  }
  os << "verdict: " << verdict() << "\n";
  return os.str();
}

EquivalenceReport equivalence_report(const Polynomial<Rational>& p, int m, int grade_cap) {
  EquivalenceReport report{m, grade_cap, {}};
  const std::vector<Rational> trees = tree_sums_by_grade(p, m, grade_cap);
  std::vector<Rational> zero_free(static_cast<std::size_t>(grade_cap), Rational(0));
  for_each_word_up_to_grade(m, p.degree() - m + 1, grade_cap, [&](const GenLukWord& w) {
    const auto& l = w.letters();
    if (std::find(l.begin(), l.end(), 0) == l.end()) zero_free[w.size() - 1] += r_expression(w, p, m);
  });
  const std::vector<Rational> series = sturmfels_by_vertices(p, m, grade_cap - 1);
  const Rational base = -p.coeff(m - 1) / p.coeff(m);
  for (int n = 1; n <= grade_cap; ++n) {
    GradeComparison g;
    g.grade = n;
    g.tree = trees[static_cast<std::size_t>(n - 1)];
    g.sturmfels = series[static_cast<std::size_t>(n - 1)];
    g.zero_free = zero_free[static_cast<std::size_t>(n - 1)];
    g.equal = g.tree == g.sturmfels;
    if (!g.equal && !g.sturmfels.is_zero() && !base.is_zero()) {
      const Rational ratio = g.tree / g.sturmfels;
      for (int e = -2 * grade_cap; e <= 2 * grade_cap; ++e) {
        if (ipow(base, e) == ratio) {
          g.discrepancy_exponent = e;
          break;
        }
      }
    }
    report.grades.push_back(std::move(g));
  }
  return report;
}

}  // namespace nrs
