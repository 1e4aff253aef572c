#pragma once

#include <complex>

#include "spinbeam/halfint.hpp"

/// Bessel functions needed by the beam closed forms.
///
/// J_n is restricted to integer order and non-negative real argument. I_nu is
/// supported for nu >= -1/2 (integer or half-odd) at complex argument.
///
/// Accuracy: J_n has relative error below 1e-12 for x <= 1e3 away from its
/// zeros (absolute error below 1e-15 near them). I_nu reaches 1e-10 relative
/// error for |arg z| <= pi/4 and in the closed right half-plane for |z| <= 5
/// or |z| > 20; on the imaginary axis with 5 < |z| <= 20 the power series
/// cancels and loses up to exp(|z|) * 1e-16 relatively.
namespace spinbeam::specfun {

using cplx = std::complex<double>;

/// J_n(x) for integer n (any sign) and x >= 0.
double bessel_j(HalfInt order, double x);
inline double bessel_j(int n, double x) { return bessel_j(HalfInt::integer(n), x); }

/// index-th positive zero of J_order, absolute error below 1e-9.
double bessel_j_zero(int order, int index);

/// I_nu(z). Overflows to infinity once Re z exceeds ~709; use
/// bessel_i_scaled there.
cplx bessel_i(HalfInt order, cplx z);

/// exp(-z) I_nu(z).
cplx bessel_i_scaled(HalfInt order, cplx z);

}  // namespace spinbeam::specfun
