#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spinbeam/error.hpp"

namespace spinbeam::quad {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
  // Hard cap on the number of live panels; exceeding it is a convergence failure.
  int max_panels = 200000;
};

struct QuadResult {
  cplx value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  // Upper end of the interval actually integrated (semi-infinite variants
  // report their truncation radius here; plain integrate reports b).
  double upper_limit = 0.0;
};

/// Thrown when max_depth or max_panels is exhausted with the tolerance unmet.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, QuadResult best)
      : Error(ErrorKind::Convergence, what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

/// Adaptive Gauss-Kronrod (7/15) integration of a complex integrand on [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate is at most abs_tol + rel_tol * |value|. Panels whose estimate is
/// at the roundoff floor are retired. The final value is summed in order of
/// panel left endpoint, so the result does not depend on the split order.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

/// Same as integrate, starting from the panels delimited by the sorted
/// breakpoints (first and last entries are the interval ends).
QuadResult integrate(const Integrand& f, std::span<const double> breakpoints,
                     const QuadOptions& opts = {});

/// Integral over [a, inf) of an integrand with Gaussian decay of scale
/// decay_scale beyond a. Truncates at R = a + decay_scale * t where
/// exp(-t^2) < abs_tol / 10.
QuadResult integrate_semi_infinite(const Integrand& f, double a, double abs_tol,
                                   double decay_scale, const QuadOptions& opts = {});

/// Integral over [a, inf) of an integrand decaying at least like r^-2, via the
/// map r = a + scale (1 - s) / s on s in (0, 1].
QuadResult integrate_algebraic_tail(const Integrand& f, double a, double scale,
                                    const QuadOptions& opts = {});

/// Breakpoints splitting [a, b] into panels no longer than max_width.
std::vector<double> uniform_breakpoints(double a, double b, double max_width);

}  // namespace spinbeam::quad
