#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinbeam/error.hpp"
#include "spinbeam/specfun.hpp"

using namespace spinbeam;
using specfun::bessel_i;
using specfun::bessel_j;
using cplx = std::complex<double>;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }
double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("J_n anchor values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0, 2.4048)) < 5e-5);
  CHECK(bessel_j(-3, 2.0) == -bessel_j(3, 2.0));
  CHECK(bessel_j(-4, 2.0) == bessel_j(4, 2.0));

  // Frozen from the 60-term series oracle.
  const double oracle = oracle::bessel_j_series(1, 1.0);
  CHECK(rel(oracle, 0.44005058574493) < 1e-13);
  CHECK(rel(bessel_j(1, 1.0), 0.44005058574493355) < 1e-12);
}

TEST_CASE("J_n matches the series oracle where the series is exact in long double") {
  for (int n = 0; n <= 8; ++n) {
    for (double x : {0.01, 0.3, 1.0, 2.5, 4.0, 7.3, 11.0, 15.0}) {
      const double want = oracle::bessel_j_series(n, x, 80);
      const double got = bessel_j(n, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::abs(got - want) <= 1e-12 * std::max(std::abs(want), 1e-3));
    }
  }
}

TEST_CASE("J_n agrees with a 50-digit reference across regimes") {
  using wide = boost::multiprecision::cpp_bin_float_50;
  for (int n = 0; n <= 12; ++n) {
    for (double x : {0.5, 3.0, 20.0, 49.0, 51.0, 120.0, 400.0, 999.0}) {
      const double want = static_cast<double>(boost::math::cyl_bessel_j(n, wide(x)));
      const double envelope = std::max(std::abs(want), std::sqrt(2.0 / (std::numbers::pi * x)) * 1e-3);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::abs(bessel_j(n, x) - want) <= 1e-12 * envelope);
    }
  }
}

TEST_CASE("J_n error paths") {
  CHECK_THROWS_AS(bessel_j(HalfInt::from_twice(1), 1.0), Error);
  try {
    bessel_j(HalfInt::from_twice(1), 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
  try {
    bessel_j(0, -1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("J_n three-term recurrence") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(0.05, 300.0);
  for (int trial = 0; trial < 400; ++trial) {
    const double x = xs(rng);
    const int n = static_cast<int>(rng() % 10) + 1;
    const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
    const double rhs = 2.0 * n / x * bessel_j(n, x);
    const double scale = std::abs(bessel_j(n - 1, x)) + std::abs(bessel_j(n + 1, x));
    CAPTURE(x);
    CAPTURE(n);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
  }
}

TEST_CASE("J_n small-argument law") {
  const double x = 1e-4;
  for (int n = 0; n <= 5; ++n) {
    const double ratio = bessel_j(n, x) * std::pow(2.0, n) * std::tgamma(n + 1.0) / std::pow(x, n);
    CHECK(std::abs(ratio - 1.0) < 1e-6);
  }
}

TEST_CASE("zeros of J_n") {
  const double z01 = specfun::bessel_j_zero(0, 1);
  CHECK(std::abs(z01 - 2.4048) < 5e-5);
  // Frozen from bisection on the series oracle.
  const double oracle01 = oracle::bisect([](double x) { return oracle::bessel_j_series(0, x); }, 2.0, 3.0);
  CHECK(std::abs(oracle01 - 2.404825557695773) < 1e-12);
  CHECK(std::abs(z01 - 2.404825557695773) < 1e-9);

  const double oracle11 = oracle::bisect([](double x) { return oracle::bessel_j_series(1, x); }, 3.5, 4.2);
  CHECK(std::abs(oracle11 - 3.8317059702) < 1e-10);
  CHECK(std::abs(specfun::bessel_j_zero(1, 1) - 3.8317059702) < 1e-9);

  // Later zeros are roots of J_n and strictly increasing.
  double previous = 0.0;
  for (int s = 1; s <= 10; ++s) {
    const double zero = specfun::bessel_j_zero(2, s);
    CHECK(zero > previous + 2.5);
    CHECK(std::abs(bessel_j(2, zero)) < 1e-13);
    previous = zero;
  }
  CHECK_THROWS_AS(specfun::bessel_j_zero(0, 0), Error);
}

TEST_CASE("I_nu closed half-integer forms and origin values") {
  const double sqrt2pi = std::sqrt(2.0 / std::numbers::pi);
  CHECK(rel(bessel_i(HalfInt::from_twice(1), 1.0), cplx(sqrt2pi * std::sinh(1.0))) < 1e-14);
  CHECK(rel(bessel_i(HalfInt::from_twice(1), 1.0), cplx(0.93767488)) < 1e-8);
  CHECK(rel(bessel_i(HalfInt::from_twice(-1), 1.0), cplx(sqrt2pi * std::cosh(1.0))) < 1e-14);
  CHECK(rel(bessel_i(HalfInt::from_twice(-1), 1.0), cplx(1.23120021)) < 1e-8);
  CHECK(bessel_i(HalfInt::integer(0), 0.0) == cplx(1.0));
  CHECK(bessel_i(HalfInt::integer(1), 0.0) == cplx(0.0));
  CHECK(bessel_i(HalfInt::from_twice(1), 0.0) == cplx(0.0));
}

TEST_CASE("I_nu agrees with the 50-term series oracle") {
  const cplx z(0.5, 0.5);
  CHECK(rel(bessel_i(HalfInt::integer(1), z), oracle::bessel_i_series(1.0, z)) < 1e-10);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mag(0.01, 6.0);
  std::uniform_real_distribution<double> arg(-std::numbers::pi / 4, std::numbers::pi / 4);
  for (int trial = 0; trial < 300; ++trial) {
    const cplx zz = std::polar(mag(rng), arg(rng));
    const int twice = static_cast<int>(rng() % 9) - 1;
    CAPTURE(zz);
    CAPTURE(twice);
    CHECK(rel(bessel_i(HalfInt::from_twice(twice), zz), oracle::bessel_i_series(0.5 * twice, zz, 80)) < 1e-10);
  }
}

TEST_CASE("I_nu series and asymptotic branches meet at the seam") {
  // |z| = 20 is the switch-over; the oracle series is exact in long double there.
  for (double angle : {0.0, 0.3, -0.6, 0.785}) {
    for (double m : {19.9, 20.1, 25.0}) {
      const cplx z = std::polar(m, angle);
      for (int twice = -1; twice <= 7; ++twice) {
        const cplx want = oracle::bessel_i_series(0.5 * twice, z, 150);
        CAPTURE(z);
        CAPTURE(twice);
        CHECK(rel(bessel_i(HalfInt::from_twice(twice), z), want) < 1e-10);
      }
    }
  }
}

TEST_CASE("I_nu scaled form holds for large arguments") {
  const cplx z(300.0, 200.0);
  for (int twice = -1; twice <= 5; ++twice) {
    const cplx scaled = specfun::bessel_i_scaled(HalfInt::from_twice(twice), z);
    const cplx plain = bessel_i(HalfInt::from_twice(twice), z);
    CHECK(rel(plain, std::exp(z) * scaled) < 1e-13);
  }
  // Leading asymptote of the difference I_0 - I_1 ~ e^z / (2 z sqrt(2 pi z)).
  const cplx big(1e4, 0.0);
  const cplx diff = specfun::bessel_i_scaled(HalfInt::integer(0), big) -
                    specfun::bessel_i_scaled(HalfInt::integer(1), big);
  const cplx lead = 1.0 / (2.0 * big * std::sqrt(2.0 * std::numbers::pi * big));
  CHECK(rel(diff, lead) < 1e-3);
}

TEST_CASE("I_nu recurrence over the complex domain") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mag(0.05, 60.0);
  std::uniform_real_distribution<double> arg(-std::numbers::pi / 4, std::numbers::pi / 4);
  for (int trial = 0; trial < 600; ++trial) {
    const cplx z = std::polar(mag(rng), arg(rng));
    const int twice = static_cast<int>(rng() % 8) + 1;  // nu >= 1/2 so nu - 1 >= -1/2
    const HalfInt nu = HalfInt::from_twice(twice);
    const cplx lo = specfun::bessel_i_scaled(nu - HalfInt::integer(1), z);
    const cplx mid = specfun::bessel_i_scaled(nu, z);
    const cplx hi = specfun::bessel_i_scaled(nu + HalfInt::integer(1), z);
    const cplx residual = lo - hi - (2.0 * nu.value() / z) * mid;
    CAPTURE(z);
    CAPTURE(twice);
    CHECK(std::abs(residual) <= 1e-9 * (std::abs(lo) + std::abs(hi)));
  }
}

TEST_CASE("I_nu is real for positive real arguments") {
  for (double x : {0.1, 1.0, 10.0, 19.0, 21.0, 100.0}) {
    for (int twice = -1; twice <= 6; ++twice) {
      const cplx v = specfun::bessel_i_scaled(HalfInt::from_twice(twice), x);
      CHECK(std::abs(v.imag()) <= 1e-13 * std::abs(v.real()));
    }
  }
}

TEST_CASE("I_nu left half-plane by reflection") {
  const cplx z(-2.0, 1.5);
  for (int twice = -1; twice <= 4; ++twice) {
    CHECK(rel(bessel_i(HalfInt::from_twice(twice), z), oracle::bessel_i_series(0.5 * twice, z)) < 1e-10);
  }
}

TEST_CASE("I_nu error paths") {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Sampling;
  };
  CHECK(kind_of([] { bessel_i(HalfInt::from_twice(-3), 1.0); }) == ErrorKind::UnsupportedOrder);
  CHECK(kind_of([] { bessel_i(HalfInt::from_twice(-1), 0.0); }) == ErrorKind::Singularity);
}

TEST_CASE("HalfInt parsing and printing") {
  CHECK(HalfInt::parse("1/2").twice() == 1);
  CHECK(HalfInt::parse("-3/2").twice() == -3);
  CHECK(HalfInt::parse("2").twice() == 4);
  CHECK(HalfInt::parse("-1.5").twice() == -3);
  CHECK(HalfInt::from_twice(-3).str() == "-3/2");
  CHECK(HalfInt::integer(2).str() == "2");
  CHECK_THROWS_AS(HalfInt::parse("1/3"), Error);
  CHECK_THROWS_AS(HalfInt::parse("0.25"), Error);
  CHECK_THROWS_AS(HalfInt::parse("abc"), Error);
}
