#include "nrs/roots.hpp"

#include <algorithm>
#include <cmath>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

struct Complex {
  Float re;
  Float im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const Float den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Float norm(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

// p(z) and p'(z) by Horner.
std::pair<Complex, Complex> horner(const Polynomial<Float>& p, const Complex& z) {
  Complex value{Float(0), Float(0)};
  Complex slope{Float(0), Float(0)};
  for (int k = p.degree(); k >= 0; --k) {
    slope = slope * z + value;
    value = value * z + Complex{p[k], Float(0)};
  }
  return {value, slope};
}

}  // namespace

Float ComplexRoot::modulus() const { return sqrt(re * re + im * im); }

Float ComplexRoot::argument() const { return atan2(im, re); }

std::vector<ComplexRoot> polynomial_roots(const Polynomial<Float>& p, const RootOptions& options) {
  const int d = p.degree();
  if (d < 1) throw RangeError("polynomial_roots needs degree at least 1");
  PrecisionScope scope(options.precision);

  // Work on a copy rounded to the working precision.
  std::vector<Float> c;
  for (int k = 0; k <= d; ++k) c.push_back(p[k] + Float(0));
  const Polynomial<Float> poly(c);

  // Initial guesses on a circle inside the Cauchy bound, rotated off the real axis.
  Float bound(0);
  for (int k = 0; k < d; ++k) bound = std::max(bound, abs(poly[k] / poly[d]));
  bound += Float(1);
  std::vector<Complex> z;
  const Float two_pi = const_pi() * Float(2);
  for (int k = 0; k < d; ++k) {
    const Float theta = two_pi * Float(k) / Float(d) + Float(0.4);
    Float cr, ci;
    mpfr_cos(cr.get(), theta.get(), MPFR_RNDN);
    mpfr_sin(ci.get(), theta.get(), MPFR_RNDN);
    const Float r = bound * Float(0.5);
    z.push_back({r * cr, r * ci});
  }

  const Float tol = ldexp(Float(1), -options.precision + 16);
  std::vector<bool> done(static_cast<std::size_t>(d), false);
  int sweep = 0;
  while (true) {
    bool all_done = true;
    for (int i = 0; i < d; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (done[iu]) continue;
      auto [value, slope] = horner(poly, z[iu]);
      const Float zmod = norm(z[iu]);
      if (norm(value).is_zero()) {
        done[iu] = true;
        continue;
      }
      const Complex newton = value / slope;
      Complex repulsion{Float(0), Float(0)};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        repulsion = repulsion + Complex{Float(1), Float(0)} / (z[iu] - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = newton / (Complex{Float(1), Float(0)} - newton * repulsion);
      z[iu] = z[iu] - step;
      if (norm(newton) < tol * std::max(Float(1), zmod)) {
        done[iu] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
    if (++sweep >= options.max_iterations) {
      throw NoConvergence("polynomial_roots: no convergence after " + std::to_string(sweep) + " sweeps");
    }
  }

  std::vector<ComplexRoot> roots;
  roots.reserve(z.size());
  for (Complex& r : z) {
    // Roots of real polynomials that sit on the real axis up to rounding are real.
    if (abs(r.im) < tol * std::max(Float(1), norm(r))) r.im = Float(0);
    roots.push_back({std::move(r.re), std::move(r.im)});
  }
  std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    const Float ma = a.modulus();
    const Float mb = b.modulus();
    if (ma != mb) return ma < mb;
    return a.argument() < b.argument();
  });
  return roots;
}

}  // namespace nrs
