#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrs/bigint.hpp"
#include "nrs/errors.hpp"
#include "nrs/polynomial.hpp"
#include "nrs/scalar.hpp"

namespace nrs {

/// A generalized Lukasiewicz word: no letter equals 1, proper prefix sums of
/// (l_i - 1) are non-negative and the full sum is -1. Encodes a plane tree
/// whose vertices may carry negative degree.
class GenLukWord {
 public:
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int min_degree() const;
  /// Member of Luk_m, i.e. min_degree >= -m + 1.
  bool in_luk(int m) const { return min_degree() >= 1 - m; }

  friend bool operator==(const GenLukWord&, const GenLukWord&) = default;
  friend auto operator<=>(const GenLukWord&, const GenLukWord&) = default;

 private:
  explicit GenLukWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  friend GenLukWord validate_word(std::vector<int> letters);

  std::vector<int> letters_;
};

/// Throws InvalidWord naming the first violated condition.
GenLukWord validate_word(std::vector<int> letters);
bool is_valid_word(std::span<const int> letters);

/// U(l): every letter l_i < 0 becomes |l_i| + 1 zeros.
std::vector<int> expand_word(const GenLukWord& w);

struct TypeNumber {
  int type = 0;
  bool final = false;

  friend bool operator==(const TypeNumber&, const TypeNumber&) = default;
};

/// Type number of the underlying classical tree U(T).
TypeNumber type_number(const GenLukWord& w);

/// Number of trailing 0 letters of the word itself (not of U(l)).
int terminal(const GenLukWord& w);

/// Index i of the class Luk_{i,m} containing w, or nullopt for the single-vertex tree T_0.
std::optional<int> terminal_class(const GenLukWord& w, int m);

/// Degree k -> d_k. Letters of the word are exactly the non-canceled vertices.
using DegreeSequence = std::map<int, long>;

DegreeSequence degree_sequence(const GenLukWord& w);
/// Parses "k:count,k:count,...".
DegreeSequence parse_degree_sequence(const std::string& text);
std::string to_string(const DegreeSequence& d);

/// (sum d_k)! / ((sum d_k) prod d_k!). Throws IncompleteSequence unless
/// sum (k-1) d_k = -1, and RangeError if d_1 > 0.
BigInt count_with_degree_sequence(const DegreeSequence& d);

inline constexpr std::size_t kDefaultWordCap = 12;
inline constexpr int kDefaultGradeCap = 14;

/// All valid words with letter multiset d, in lexicographic order, found by
/// filtering every distinct arrangement.
std::vector<GenLukWord> enumerate_by_degree_sequence(const DegreeSequence& d, std::size_t cap = kDefaultWordCap);

/// The unique conjugate (cyclic rotation) of an arrangement that is a valid
/// word. The arrangement must have letter sum sum(l_i - 1) = -1.
GenLukWord valid_conjugate(std::span<const int> arrangement);

/// Same set as enumerate_by_degree_sequence, produced by rotating each
/// arrangement to its valid conjugate.
std::vector<GenLukWord> enumerate_by_conjugation(const DegreeSequence& d, std::size_t cap = kDefaultWordCap);

/// Visits every valid word with letters in [1 - m, max_letter] \ {1} and at
/// most grade_cap letters, grouped by ascending length, lexicographic within
/// a length.
void for_each_word_up_to_grade(int m, int max_letter, int grade_cap, const std::function<void(const GenLukWord&)>& visit,
                               int hard_cap = kDefaultGradeCap);
std::vector<GenLukWord> enumerate_up_to_grade(int m, int max_letter, int grade_cap, int hard_cap = kDefaultGradeCap);

/// R_m(T) = prod_k (-a_{m+k-1}/a_m)^{d_k(T)}.
template <Scalar S>
S r_expression(const GenLukWord& w, const Polynomial<S>& p, int m) {
  const S lead = p.coeff(m);
  if (is_zero(lead)) throw ZeroDenominator("r_expression: a_" + std::to_string(m) + " is zero");
  S product(1);
  for (const auto& [k, count] : degree_sequence(w)) {
    const S factor = -p.coeff(m + k - 1) / lead;
    product *= ipow(factor, count);
  }
  return product;
}

/// Plane tree with canceled vertices materialized.
struct PlaneTree {
  int degree = 0;  ///< Letter of this vertex; 0 for leaves.
  bool canceled = false;
  std::vector<PlaneTree> children;
};

PlaneTree build_tree(const GenLukWord& w);

/// Preorder, indented rendering: internal vertices show their degree, real
/// leaves "•", canceled vertices "( )" and negative vertices their degree.
std::string render_tree(const PlaneTree& tree);

}  // namespace nrs
