#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nrs/polynomial.hpp"
#include "nrs/scalar.hpp"

namespace nrs::test {

/// (1-z)(1-z/2)(1-z/4)(1-z/8)(1-z/16).
inline Polynomial<Rational> quintic() {
  return Polynomial<Rational>({Rational(1), Rational(-31, 16), Rational(155, 128), Rational(-155, 512), Rational(31, 1024),
                               Rational(-1, 1024)});
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long p = std::uniform_int_distribution<long>(lo * q, hi * q)(rng);
  return Rational(BigInt(p), BigInt(q));
}

inline Rational random_nonzero(std::mt19937_64& rng, long lo, long hi, long max_den) {
  for (;;) {
    Rational r = random_rational(rng, lo, hi, max_den);
    if (!r.is_zero()) return r;
  }
}

/// Random polynomial with every coefficient nonzero.
inline Polynomial<Rational> random_exact_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_nonzero(rng, -5, 5, 7));
  return Polynomial<Rational>(std::move(c));
}

/// Sorted distinct roots in [lo, hi] with consecutive ratio at least min_ratio.
inline std::vector<Rational> spaced_roots(std::mt19937_64& rng, int n, long lo, long hi, double min_ratio) {
  std::uniform_int_distribution<long> pick(lo * 64, hi * 64);
  for (;;) {
    std::vector<Rational> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(BigInt(pick(rng)), BigInt(64));
    std::sort(roots.begin(), roots.end());
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) ok = roots[i] >= roots[i - 1] * Rational(static_cast<long>(min_ratio * 1000), 1000);
    if (ok) return roots;
  }
}

/// Polynomial prod (1 - z/r) with a_0 = 1.
inline Polynomial<Rational> from_reciprocal_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const Rational& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= c[k] / r;
    }
    c = std::move(next);
  }
  return Polynomial<Rational>(std::move(c));
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  }
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  return cells;
}

inline Csv parse_csv(std::istream& in) {
  Csv csv;
  std::string line;
  if (std::getline(in, line)) csv.header = split_csv_line(line);
  while (std::getline(in, line)) {
    if (!line.empty()) csv.rows.push_back(split_csv_line(line));
  }
  return csv;
}

inline Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  return parse_csv(in);
}

/// Significant digits of a printed mantissa such as "-1.2340e-3".
inline int sigfigs(const std::string& printed) {
  int n = 0;
  for (char c : printed.substr(0, printed.find('e'))) n += c >= '0' && c <= '9';
  return n;
}

}  // namespace nrs::test
