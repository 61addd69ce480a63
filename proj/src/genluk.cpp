#include "nrs/genluk.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nrs {

namespace {

// Expanded-word entry: the letter in U(l) plus how the vertex is shown.
struct Vertex {
  int letter;
  int degree;
  bool canceled;
};

std::vector<Vertex> expand_vertices(const GenLukWord& w) {
  std::vector<Vertex> out;
  for (int l : w.letters()) {
    if (l >= 0) {
      out.push_back({l, l, false});
      continue;
    }
    for (int i = 0; i < -l; ++i) out.push_back({0, 0, true});
    out.push_back({0, l, false});
  }
  return out;
}

// Type number of the classical subtree whose preorder starts at pos; advances pos.
TypeNumber subtree_type(const std::vector<int>& word, std::size_t& pos) {
  const int degree = word[pos++];
  if (degree == 0) return {0, false};
  int best = -1;
  int count = 0;
  for (int child = 0; child < degree; ++child) {
    const int t = subtree_type(word, pos).type;
    if (t > best) {
      best = t;
      count = 1;
    } else if (t == best) {
      ++count;
    }
  }
  if (count >= 2) return {best + 1, true};
  return {best, false};
}

PlaneTree subtree(const std::vector<Vertex>& vertices, std::size_t& pos) {
  const Vertex& v = vertices[pos++];
  PlaneTree node{v.degree, v.canceled, {}};
  for (int child = 0; child < v.letter; ++child) node.children.push_back(subtree(vertices, pos));
  return node;
}

void render(const PlaneTree& t, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(2 * depth), ' ');
  if (t.canceled) {
    os << "( )";
  } else if (t.degree == 0) {
    os << "•";
  } else {
    os << t.degree;
  }
  os << '\n';
  for (const PlaneTree& c : t.children) render(c, depth + 1, os);
}

std::vector<int> sorted_letters(const DegreeSequence& d) {
  std::vector<int> letters;
  for (const auto& [k, count] : d) {
    if (count < 0) throw RangeError("negative multiplicity for degree " + std::to_string(k));
    letters.insert(letters.end(), static_cast<std::size_t>(count), k);
  }
  return letters;
}

void check_complete(const DegreeSequence& d) {
  long total = 0;
  for (const auto& [k, count] : d) {
    if (count < 0) throw RangeError("negative multiplicity for degree " + std::to_string(k));
    if (k == 1 && count > 0) throw RangeError("degree 1 is not allowed");
    total += static_cast<long>(k - 1) * count;
  }
  if (total != -1) {
    throw IncompleteSequence("sum of (k-1) d_k is " + std::to_string(total) + ", expected -1");
  }
}

}  // namespace

int GenLukWord::min_degree() const { return *std::min_element(letters_.begin(), letters_.end()); }

GenLukWord validate_word(std::vector<int> letters) {
  if (letters.empty()) throw InvalidWord(InvalidWord::Condition::Empty, 0, "empty word");
  long prefix = 0;
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (letters[i] == 1) {
      throw InvalidWord(InvalidWord::Condition::LetterIsOne, i + 1, "letter 1 at position " + std::to_string(i + 1));
    }
    prefix += letters[i] - 1;
    if (i + 1 < n && prefix < 0) {
      throw InvalidWord(InvalidWord::Condition::NegativePrefix, i + 1,
                        "prefix sum " + std::to_string(prefix) + " at position " + std::to_string(i + 1));
    }
  }
  if (prefix != -1) {
    throw InvalidWord(InvalidWord::Condition::WrongTotal, n, "total " + std::to_string(prefix) + " instead of -1");
  }
  return GenLukWord(std::move(letters));
}

bool is_valid_word(std::span<const int> letters) {
  if (letters.empty()) return false;
  long prefix = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == 1) return false;
    prefix += letters[i] - 1;
    if (i + 1 < letters.size() && prefix < 0) return false;
  }
  return prefix == -1;
}

std::vector<int> expand_word(const GenLukWord& w) {
  std::vector<int> out;
  for (const Vertex& v : expand_vertices(w)) out.push_back(v.letter);
  return out;
}

TypeNumber type_number(const GenLukWord& w) {
  const std::vector<int> u = expand_word(w);
  std::size_t pos = 0;
  return subtree_type(u, pos);
}

int terminal(const GenLukWord& w) {
  const auto& l = w.letters();
  return static_cast<int>(std::find_if(l.rbegin(), l.rend(), [](int x) { return x != 0; }) - l.rbegin());
}

std::optional<int> terminal_class(const GenLukWord& w, int m) {
  if (m < 1) throw RangeError("terminal_class: m must be positive");
  if (w.size() == 1) return std::nullopt;
  const int t = terminal(w);
  return t == 0 ? 0 : std::min(t, m - 1);
}

DegreeSequence degree_sequence(const GenLukWord& w) {
  DegreeSequence d;
  for (int l : w.letters()) ++d[l];
  return d;
}

DegreeSequence parse_degree_sequence(const std::string& text) {
  DegreeSequence d;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("expected k:count, got '" + item + "'");
    try {
      std::size_t used_k = 0;
      std::size_t used_c = 0;
      const std::string ks = item.substr(0, colon);
      const std::string cs = item.substr(colon + 1);
      const int k = std::stoi(ks, &used_k);
      const long c = std::stol(cs, &used_c);
      if (used_k != ks.size() || used_c != cs.size() || c < 0) throw ParseError("bad entry '" + item + "'");
      d[k] += c;
    } catch (const std::logic_error&) {
      throw ParseError("bad entry '" + item + "'");
    }
  }
  if (d.empty()) throw ParseError("empty degree sequence");
  return d;
}

std::string to_string(const DegreeSequence& d) {
  std::string out;
  for (const auto& [k, count] : d) {
    if (!out.empty()) out += ',';
    out += std::to_string(k) + ':' + std::to_string(count);
  }
  return out;
}

BigInt count_with_degree_sequence(const DegreeSequence& d) {
  check_complete(d);
  unsigned long n = 0;
  BigInt denominator(1);
  for (const auto& [k, count] : d) {
    n += static_cast<unsigned long>(count);
    denominator *= factorial(static_cast<unsigned>(count));
  }
  return factorial(static_cast<unsigned>(n)) / (denominator * BigInt(n));
}

std::vector<GenLukWord> enumerate_by_degree_sequence(const DegreeSequence& d, std::size_t cap) {
  check_complete(d);
  std::vector<int> letters = sorted_letters(d);
  if (letters.size() > cap) {
    throw CapExceeded(std::to_string(letters.size()) + " letters exceeds the cap of " + std::to_string(cap));
  }
  std::vector<GenLukWord> out;
  do {
    if (is_valid_word(letters)) out.push_back(validate_word(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

GenLukWord valid_conjugate(std::span<const int> arrangement) {
  const std::size_t n = arrangement.size();
  long prefix = 0;
  long lowest = 0;
  std::size_t first_low = n;
  for (std::size_t i = 0; i < n; ++i) {
    prefix += arrangement[i] - 1;
    if (first_low == n || prefix < lowest) {
      lowest = prefix;
      first_low = i + 1;
    }
  }
  if (prefix != -1) throw IncompleteSequence("arrangement does not sum to -1");
  std::vector<int> rotated(arrangement.begin() + static_cast<std::ptrdiff_t>(first_low % n), arrangement.end());
  rotated.insert(rotated.end(), arrangement.begin(), arrangement.begin() + static_cast<std::ptrdiff_t>(first_low % n));
  return validate_word(std::move(rotated));
}

std::vector<GenLukWord> enumerate_by_conjugation(const DegreeSequence& d, std::size_t cap) {
  check_complete(d);
  std::vector<int> letters = sorted_letters(d);
  if (letters.size() > cap) {
    throw CapExceeded(std::to_string(letters.size()) + " letters exceeds the cap of " + std::to_string(cap));
  }
  std::set<GenLukWord> words;
  do {
    words.insert(valid_conjugate(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return {words.begin(), words.end()};
}

void for_each_word_up_to_grade(int m, int max_letter, int grade_cap, const std::function<void(const GenLukWord&)>& visit,
                               int hard_cap) {
  if (m < 1) throw RangeError("enumerate_up_to_grade: m must be positive");
  if (grade_cap > hard_cap) {
    throw CapExceeded("grade cap " + std::to_string(grade_cap) + " exceeds " + std::to_string(hard_cap));
  }
  std::vector<int> alphabet;
  for (int l = 1 - m; l <= max_letter; ++l) {
    if (l != 1) alphabet.push_back(l);
  }
  if (alphabet.empty()) return;
  const long down = m;  // largest decrease of the prefix sum per letter
  const long up = max_letter - 1;

  std::vector<int> word;
  std::function<void(int, long)> extend = [&](int length, long prefix) {
    const auto placed = static_cast<int>(word.size());
    if (placed == length) {
      if (prefix == -1) visit(validate_word(word));
      return;
    }
    for (int l : alphabet) {
      const long next = prefix + l - 1;
      const long left = length - placed - 1;
      if (left > 0 && next < 0) continue;
      if (next - left * down > -1 || next + left * up < -1) continue;
      word.push_back(l);
      extend(length, next);
      word.pop_back();
    }
  };
  for (int length = 1; length <= grade_cap; ++length) extend(length, 0);
}

std::vector<GenLukWord> enumerate_up_to_grade(int m, int max_letter, int grade_cap, int hard_cap) {
  std::vector<GenLukWord> out;
  for_each_word_up_to_grade(
      m, max_letter, grade_cap, [&](const GenLukWord& w) { out.push_back(w); }, hard_cap);
  return out;
}

PlaneTree build_tree(const GenLukWord& w) {
  const std::vector<Vertex> vertices = expand_vertices(w);
  std::size_t pos = 0;
  return subtree(vertices, pos);
}

std::string render_tree(const PlaneTree& tree) {
  std::ostringstream os;
  render(tree, 0, os);
  return os.str();
}

}  // namespace nrs
