#pragma once

#include <vector>

#include "nrs/float.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

struct ComplexRoot {
  Float re;
  Float im;

  Float modulus() const;
  Float argument() const;
};

struct RootOptions {
  long precision = kDefaultPrecision;
  int max_iterations = 10000;
};

/// All d roots of p by Aberth-Ehrlich simultaneous iteration, sorted by
/// ascending modulus and then ascending argument in (-pi, pi].
///
/// Independent of the NRS machinery; used as an oracle for root sums.
/// Throws NoConvergence once max_iterations sweeps have run.
std::vector<ComplexRoot> polynomial_roots(const Polynomial<Float>& p, const RootOptions& options = {});

}  // namespace nrs
