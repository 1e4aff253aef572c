#include "spinbeam/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spinbeam/error.hpp"

namespace spinbeam::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Above this |z| the I-function switches from the power series to the
// asymptotic expansion (subject also to |z| > nu^2).
constexpr double kSeriesLimitI = 20.0;

double j_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) <= kEps * 1e-2 * std::abs(sum)) break;
  }
  return sum;
}

// Hankel's expansion, J_n(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi).
double j_asymptotic(int n, double x) {
  const double mu = 4.0 * n * n;
  const double inv8x = 1.0 / (8.0 * x);
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) * inv8x / k;
    const double mag = std::abs(term);
    if (mag > last) break;
    last = mag;
    if (k % 2 == 1) {
      q += (k % 4 == 1) ? term : -term;
    } else {
      p += (k % 4 == 2) ? -term : term;
    }
    if (mag < kEps * 1e-2) break;
  }
  // cos/sin of chi = x - (n/2 + 1/4) pi by angle addition, so the rounding of
  // x - shift never enters.
  const double shift = (0.5 * (n % 4) + 0.25) * kPi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cs = std::cos(shift);
  const double ss = std::sin(shift);
  const double cos_chi = cx * cs + sx * ss;
  const double sin_chi = sx * cs - cx * ss;
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

// Miller's backward recurrence normalized by J_0 + 2 sum J_2k = 1.
double j_miller(int n, double x) {
  const double big = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(big + 20.0 + 3.0 * std::sqrt(big * 10.0));
  start += start % 2;
  double above = 0.0;
  double current = 1e-30;
  double wanted = 0.0;
  double norm = 0.0;
  for (int k = start; k > 0; --k) {
    const double below = 2.0 * k / x * current - above;
    above = current;
    current = below;
    if (k - 1 == n) wanted = current;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * current;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      above *= 1e-250;
      wanted *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += current;
  return wanted / norm;
}

cplx i_series(double nu, cplx z) {
  const cplx half = 0.5 * z;
  cplx term;
  if (nu == std::floor(nu)) {
    term = 1.0;
    for (int i = 1; i <= static_cast<int>(nu); ++i) term *= half / static_cast<double>(i);
  } else {
    term = std::pow(half, nu) / std::tgamma(nu + 1.0);
  }
  cplx sum = term;
  const cplx q = half * half;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= kEps * 1e-2 * std::abs(sum)) break;
  }
  return sum;
}

// exp(-z) I_nu(z) for Re z >= 0, |z| large. The second (exp(-2z)) series
// matters only near the imaginary axis and is dropped where it is below
// double resolution, which also avoids the Stokes ambiguity on the real axis.
cplx i_asymptotic_scaled(double nu, cplx z) {
  const double mu = 4.0 * nu * nu;
  const cplx inv8z = 1.0 / (8.0 * z);
  cplx alt = 1.0;
  cplx plain = 1.0;
  cplx term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 300; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) * inv8z / static_cast<double>(k);
    const double mag = std::abs(term);
    if (mag > last) break;
    last = mag;
    plain += term;
    alt += (k % 2 == 1) ? -term : term;
    if (mag < kEps * 1e-2) break;
  }
  const cplx pref = 1.0 / std::sqrt(2.0 * kPi * z);
  cplx result = pref * alt;
  const cplx damp = std::exp(-2.0 * z);
  if (std::abs(damp) > 1e-18) {
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx phase = cplx(0.0, sign) * std::exp(cplx(0.0, sign * nu * kPi));
    result += phase * damp * pref * plain;
  }
  return result;
}

// exp(-z) I_nu(z) on the closed right half-plane, z != 0.
cplx i_scaled_right(HalfInt order, cplx z) {
  const double nu = order.value();
  const double mag = std::abs(z);
  if ((order.twice() == 1 || order.twice() == -1) && mag > 0.5) {
    const cplx root = std::sqrt(2.0 / (kPi * z));
    const cplx damp = std::exp(-2.0 * z);
    return order.twice() == 1 ? 0.5 * root * (1.0 - damp) : 0.5 * root * (1.0 + damp);
  }
  if (mag <= std::max(kSeriesLimitI, nu * nu)) return std::exp(-z) * i_series(nu, z);
  return i_asymptotic_scaled(nu, z);
}

void check_i_order(HalfInt order, cplx z) {
  if (order.twice() < -1) {
    throw Error(ErrorKind::UnsupportedOrder,
                "bessel_i: order " + order.str() + " below -1/2 is not supported");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::Domain, "bessel_i: non-finite argument");
  }
  if (z == cplx(0.0) && order.twice() == -1) {
    throw Error(ErrorKind::Singularity, "bessel_i: I_{-1/2} is singular at z = 0");
  }
}

cplx i_at_origin(HalfInt order) { return order.twice() == 0 ? cplx(1.0) : cplx(0.0); }

}  // namespace

double bessel_j(HalfInt order, double x) {
  if (!order.is_integer()) {
    throw Error(ErrorKind::InvalidOrder, "bessel_j: order " + order.str() + " is not an integer");
  }
  if (std::isnan(x) || x < 0.0) throw Error(ErrorKind::Domain, "bessel_j: argument must be >= 0");
  if (!std::isfinite(x)) throw Error(ErrorKind::Domain, "bessel_j: non-finite argument");

  const int n = std::abs(order.as_int());
  const double sign = (order.as_int() < 0 && n % 2 == 1) ? -1.0 : 1.0;
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  double value;
  if (x <= 2.0 || x * x < 4.0 * (n + 1)) {
    value = j_series(n, x);
  } else if (x > 50.0 * std::max(1, n)) {
    value = j_asymptotic(n, x);
  } else {
    value = j_miller(n, x);
  }
  return sign * value;
}

double bessel_j_zero(int order, int index) {
  if (order < 0) throw Error(ErrorKind::InvalidOrder, "bessel_j_zero: order must be >= 0");
  if (index < 1) throw Error(ErrorKind::Domain, "bessel_j_zero: index must be >= 1");

  // J_n is positive on (0, j_{n,1}) and j_{n,1} > n; consecutive zeros are
  // further apart than the scan step.
  constexpr double step = 0.5;
  double lo = static_cast<double>(order);
  double f_lo = bessel_j(order, lo);
  int found = 0;
  while (true) {
    const double hi = lo + step;
    const double f_hi = bessel_j(order, hi);
    if ((f_lo > 0.0) != (f_hi > 0.0) || f_hi == 0.0) {
      if (++found == index) {
        double a = lo;
        double b = hi;
        double fa = f_lo;
        for (int it = 0; it < 200 && b - a > 4.0 * kEps * b; ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = bessel_j(order, mid);
          if (fm == 0.0) return mid;
          if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        return 0.5 * (a + b);
      }
    }
    lo = hi;
    f_lo = f_hi;
  }
}

cplx bessel_i_scaled(HalfInt order, cplx z) {
  check_i_order(order, z);
  if (z == cplx(0.0)) return i_at_origin(order);
  if (z.real() >= 0.0) return i_scaled_right(order, z);
  // I_nu(z) = exp(+-i nu pi) I_nu(-z), upper sign for Im z >= 0.
  const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
  const cplx phase = std::exp(cplx(0.0, sign * order.value() * kPi));
  return phase * std::exp(-2.0 * z) * i_scaled_right(order, -z);
}

cplx bessel_i(HalfInt order, cplx z) {
  check_i_order(order, z);
  if (z == cplx(0.0)) return i_at_origin(order);
  const double nu = order.value();
  if (std::abs(z) <= std::max(kSeriesLimitI, nu * nu) &&
      !((order.twice() == 1 || order.twice() == -1) && std::abs(z) > 0.5)) {
    if (z.real() >= 0.0) return i_series(nu, z);
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    return std::exp(cplx(0.0, sign * nu * kPi)) * i_series(nu, -z);
  }
  return std::exp(z) * bessel_i_scaled(order, z);
}

}  // namespace spinbeam::specfun
