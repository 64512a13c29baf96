#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace vortex::quad {

using cplx = std::complex<double>;
using Integrand1D = std::function<cplx(double)>;
using IntegrandND = std::function<cplx(std::span<const double>)>;

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 40;

  //! Throws DomainError unless every field is positive.
  void validate() const;
};

struct IntegrationResult {
  cplx value{};
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration on [a, b].
/// The interval with the largest local error is bisected until the summed
/// error estimate meets max(abs_tol, rel_tol*|value|). An interval that would
/// need more than `max_depth` bisections is frozen and the result is marked
/// non-converged. Endpoints are never evaluated.
IntegrationResult integrate_1d(const Integrand1D &f, double a, double b,
                               const Tolerance &tol = {});

/// Integral over [a, inf) using the substitution x = a + t/(1-t).
IntegrationResult integrate_semi_infinite(const Integrand1D &f, double a,
                                          const Tolerance &tol = {});

/// Iterated adaptive cubature over a box of dimension 1..4. The innermost
/// coordinate is the last entry of `box`.
IntegrationResult integrate_nd(const IntegrandND &f,
                               const std::vector<Interval> &box,
                               const Tolerance &tol = {});

//! Composite midpoint rule with `n` panels and compensated summation.
//! Deliberately simple; used as ground truth in tests.
cplx riemann_oracle(const Integrand1D &f, double a, double b, std::int64_t n);

} // namespace vortex::quad
