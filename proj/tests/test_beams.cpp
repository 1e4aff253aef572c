#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "spinbeam/beams.hpp"
#include "spinbeam/error.hpp"

using namespace spinbeam;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// n . sigma for a real 3-vector n.
Mat2 pauli_dot(double nx, double ny, double nz) {
  return {{{cplx(nz), cplx(nx, -ny)}, {cplx(nx, ny), cplx(-nz)}}};
}

Spinor apply(const Mat2& m, const Spinor& s) {
  return {m[0][0] * s.up + m[0][1] * s.down, m[1][0] * s.up + m[1][1] * s.down};
}

double distance(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.up - b.up) + std::norm(a.down - b.down));
}

double norm(const Spinor& a) { return std::sqrt(std::norm(a.up) + std::norm(a.down)); }

// F_n or G_n by composite Simpson with Boost Bessel values, paraxial or exact phase.
cplx spectral_oracle(int n, double r, double z, double w0, double k, bool paraxial, int weight_sign = 0) {
  const double top = std::min(k, 12.0 / w0);
  auto g = [&](double kappa) {
    const double f = std::sqrt(2.0) * w0 * std::exp(-0.5 * w0 * w0 * kappa * kappa);
    const double kz = paraxial ? k - kappa * kappa / (2.0 * k) : std::sqrt(k * k - kappa * kappa);
    double weight = f * kappa * boost::math::cyl_bessel_j(n, kappa * r);
    if (weight_sign != 0) weight *= std::sqrt(1.0 + weight_sign * kappa / k);
    return weight * std::exp(cplx(0.0, kz * z));
  };
  const int panels = 20000;
  const double h = top / panels;
  cplx s = g(0.0) + g(top);
  for (int i = 1; i < panels; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * g(i * h);
  return s * (h / 3.0);
}

BeamSpec nondiffractive(Configuration c, int twice_j, int sigma, double k = 2.0, double kappa = 1.0) {
  return BeamSpec(c, HalfInt::from_twice(twice_j), sigma, k, NonDiffractive{kappa});
}

BeamSpec finite(Configuration c, int twice_j, int sigma, Method m, double k = 100.0, double w0 = 1.0) {
  return BeamSpec(c, HalfInt::from_twice(twice_j), sigma, k, Finite{GaussianSpectrum(w0), m, false});
}

}  // namespace

TEST_CASE("eigenspinors of sigma.v") {
  const double s = 1.0 / std::sqrt(2.0);
  const Spinor plus = eigenspinor_v(1, 0.0);
  CHECK(std::abs(plus.up - cplx(s)) < 1e-15);
  CHECK(std::abs(plus.down - cplx(0.0, -s)) < 1e-15);
  const Spinor minus = eigenspinor_v(-1, 0.0);
  CHECK(std::abs(minus.up - cplx(0.0, -s)) < 1e-15);
  CHECK(std::abs(minus.down - cplx(s)) < 1e-15);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double phi = angle(rng);
    const Spinor p = eigenspinor_v(1, phi);
    const Spinor m = eigenspinor_v(-1, phi);
    CHECK(std::abs(std::conj(p.up) * m.up + std::conj(p.down) * m.down) < 1e-15);
    CHECK(std::abs(norm(p) - 1.0) < 1e-15);
    // v = -e_phi = (sin phi, -cos phi, 0)
    const Mat2 sv = pauli_dot(std::sin(phi), -std::cos(phi), 0.0);
    CHECK(distance(apply(sv, p), p) <= 1e-14);
    const Spinor mm = apply(sv, m);
    CHECK(distance(mm, Spinor{-m.up, -m.down}) <= 1e-14);
  }
  CHECK_THROWS_AS(eigenspinor_v(0, 0.0), Error);
}

TEST_CASE("eigenspinors of sigma.u") {
  const Spinor edge = eigenspinor_u(1, 0.0, 1.0);
  CHECK(std::abs(edge.up - cplx(1.0)) < 1e-15);
  CHECK(std::abs(edge.down) < 1e-15);
  const Spinor axial = eigenspinor_u(1, 0.7, 0.0);
  CHECK(std::abs(axial.up - cplx(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(axial.down + std::exp(cplx(0.0, 0.7)) / std::sqrt(2.0)) < 1e-15);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double phi = angle(rng);
    const double w_rho = unit(rng);
    const double w_z = std::sqrt(1.0 - w_rho * w_rho);
    // u = v x p/p with v = -e_phi and p/p = w_rho e_rho + w_z e_z gives
    // u = -w_z e_rho + w_rho e_z.
    const Mat2 su = pauli_dot(-w_z * std::cos(phi), -w_z * std::sin(phi), w_rho);
    for (int sigma : {1, -1}) {
      const Spinor psi = eigenspinor_u(sigma, phi, w_rho);
      CHECK(std::abs(norm(psi) - 1.0) < 1e-15);
      const Spinor lhs = apply(su, psi);
      CHECK(distance(lhs, Spinor{double(sigma) * psi.up, double(sigma) * psi.down}) <= 1e-14);
    }
  }
  CHECK_THROWS_AS(eigenspinor_u(1, 0.0, 1.5), Error);
  CHECK_THROWS_AS(eigenspinor_u(1, 0.0, -0.1), Error);
}

TEST_CASE("beam specification validation") {
  CHECK_THROWS_AS(nondiffractive(Configuration::Radial, 2, 1), Error);      // j integer
  CHECK_THROWS_AS(nondiffractive(Configuration::Radial, 1, 0), Error);      // sigma
  CHECK_THROWS_AS(nondiffractive(Configuration::Radial, 1, 1, 1.0, 1.0), Error);  // kappa == k
  CHECK_THROWS_AS(finite(Configuration::Azimuthal, 1, 1, Method::ParaxialClosedForm), Error);
  CHECK_THROWS_AS(finite(Configuration::Radial, 1, 1, Method::ParaxialClosedForm, 5.0, 1.0), Error);
  CHECK_NOTHROW(finite(Configuration::Azimuthal, 1, 1, Method::Quadrature));
  CHECK_THROWS_AS(GaussianSpectrum(0.0), Error);

  const auto spec = nondiffractive(Configuration::Radial, 1, -1);
  CHECK(spec.m() == 1);
  CHECK(spec.lower_order() == 0);
  CHECK(spec.upper_order() == 1);
  CHECK(nondiffractive(Configuration::Radial, -3, 1).m() == -2);

  const CylPoint x(1.0, -0.5, 2.0);
  CHECK(x.phi() == doctest::Approx(2.0 * kPi - 0.5));
  CHECK(CylPoint(0.0, 2.0 * kPi, 0.0).phi() == 0.0);
  CHECK_THROWS_AS(CylPoint(-1.0, 0.0, 0.0), Error);
}

TEST_CASE("non-diffractive radial beam values") {
  const double kappa = 1.0;
  const auto spec = nondiffractive(Configuration::Radial, 1, 1, 2.0, kappa);
  const double z = 0.8;
  const Spinor axis = evaluate_nondiffractive(spec, CylPoint(0.0, 1.1, z));
  const cplx expected = std::sqrt(kappa / (4.0 * kPi)) * std::exp(cplx(0.0, spec.kz() * z));
  CHECK(std::abs(axis.up - expected) < 1e-15);
  CHECK(axis.down == cplx(0.0));

  const Spinor ring = evaluate_nondiffractive(spec, CylPoint(2.4048 / kappa, 0.3, 0.0));
  CHECK(std::abs(ring.up) < 5e-5 * std::abs(ring.down));
}

TEST_CASE("non-diffraction of the probability density") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> rr(0.0, 8.0), ph(0.0, 2 * kPi), dz(-50.0, 50.0);
  for (auto c : {Configuration::Radial, Configuration::Azimuthal}) {
    for (int twice : {-3, -1, 1, 3}) {
      const auto spec = nondiffractive(c, twice, twice > 0 ? 1 : -1);
      for (int trial = 0; trial < 20; ++trial) {
        const double r = rr(rng), phi = ph(rng);
        const Spinor a = evaluate_nondiffractive(spec, CylPoint(r, phi, 0.0));
        const Spinor b = evaluate_nondiffractive(spec, CylPoint(r, phi, dz(rng)));
        const double ra = std::norm(a.up) + std::norm(a.down);
        const double rb = std::norm(b.up) + std::norm(b.down);
        CHECK(std::abs(ra - rb) <= 1e-12 * std::max(ra, 1e-3));
      }
    }
  }
}

TEST_CASE("non-diffractive beams match the momentum-space reconstruction") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> rr(0.0, 6.0), ph(0.0, 2 * kPi), zz(-5.0, 5.0);
  for (auto c : {Configuration::Radial, Configuration::Azimuthal}) {
    for (int twice : {-3, -1, 1, 3}) {
      for (int sigma : {1, -1}) {
        const auto spec = nondiffractive(c, twice, sigma, 2.0, 1.3);
        for (int trial = 0; trial < 4; ++trial) {
          const CylPoint x(rr(rng), ph(rng), zz(rng));
          const Spinor closed = evaluate_nondiffractive(spec, x);
          const Spinor rebuilt = reconstruct_from_momentum(spec, x);
          CAPTURE(twice);
          CAPTURE(sigma);
          CHECK(distance(closed, rebuilt) <= 1e-8);
        }
      }
    }
  }
  // On the axis only the m = 0 component of the azimuthal integral survives.
  const auto spec = nondiffractive(Configuration::Radial, 1, 1, 2.0, 1.0);
  const Spinor rebuilt = reconstruct_from_momentum(spec, CylPoint(0.0, 0.0, 0.0));
  CHECK(std::abs(rebuilt.up - std::sqrt(1.0 / (4.0 * kPi))) < 1e-12);
  CHECK(std::abs(rebuilt.down) < 1e-12);
}

TEST_CASE("F_n special values") {
  const GaussianSpectrum f(1.0);
  const double k = 100.0;
  for (double z : {0.0, 37.0, -100.0}) {
    CHECK(evaluate_F(1, 0.0, z, f, k, Method::ParaxialClosedForm) == cplx(0.0));
  }
  // F_0(0, 0) = int_0^k f kappa dkappa = sqrt(2)/w0 (1 - exp(-k^2 w0^2 / 2))
  const double analytic = std::sqrt(2.0) * (1.0 - std::exp(-0.5 * k * k));
  CHECK(std::abs(evaluate_F(0, 0.0, 0.0, f, k, Method::ParaxialClosedForm) - analytic) < 1e-13);
  CHECK(std::abs(evaluate_F(0, 0.0, 0.0, f, k, Method::Quadrature) - analytic) < 1e-12);

  // Fused small-r branch joins the general branch.
  const cplx inside = evaluate_F(0, 1.9e-3, 0.0, f, k, Method::ParaxialClosedForm);
  const cplx outside = evaluate_F(0, 2.1e-3, 0.0, f, k, Method::ParaxialClosedForm);
  const cplx gaussian_in = std::sqrt(2.0) * std::exp(-0.5 * 1.9e-3 * 1.9e-3);
  const cplx gaussian_out = std::sqrt(2.0) * std::exp(-0.5 * 2.1e-3 * 2.1e-3);
  CHECK(std::abs(inside - gaussian_in) < 1e-12);
  CHECK(std::abs(outside - gaussian_out) < 1e-10);

  CHECK_THROWS_AS(evaluate_F(-1, 1.0, 0.0, f, k, Method::ParaxialClosedForm), Error);
  CHECK_THROWS_AS(evaluate_F(0, 1.0, 0.0, GaussianSpectrum(0.05), k, Method::ParaxialClosedForm), Error);
}

TEST_CASE("F_n closed form against quadrature") {
  const GaussianSpectrum f(1.0);
  const double k = 100.0;
  SpectralOptions paraxial;
  paraxial.paraxial_phase = true;
  const cplx closed = evaluate_F(1, 1.0, 0.0, f, k, Method::ParaxialClosedForm);
  const cplx quad_par = evaluate_F(1, 1.0, 0.0, f, k, Method::Quadrature, paraxial);
  const cplx quad_exact = evaluate_F(1, 1.0, 0.0, f, k, Method::Quadrature);
  CHECK(std::abs(closed - quad_par) <= 1e-8 * std::abs(closed));
  CHECK(std::abs(closed - quad_exact) <= 1e-4 * std::abs(closed));

  const double z0 = f.rayleigh_range(k);
  for (int n : {0, 1, 2, 3}) {
    for (double r : {0.3, 1.0, 2.5, 5.0}) {
      for (double z : {0.0, 0.25 * z0, -0.5 * z0, z0}) {
        const cplx c = evaluate_F(n, r, z, f, k, Method::ParaxialClosedForm);
        const cplx q = evaluate_F(n, r, z, f, k, Method::Quadrature, paraxial);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(z);
        CHECK(std::abs(c - q) <= 1e-6 * std::abs(c));
      }
    }
  }
}

TEST_CASE("spectral quadrature matches an independent Simpson oracle") {
  const GaussianSpectrum f(1.0);
  const double k = 100.0;
  for (int n : {-2, -1, 0, 1, 3}) {
    for (double r : {0.5, 2.0}) {
      for (double z : {0.0, 40.0}) {
        const cplx q = evaluate_F(n, r, z, f, k, Method::Quadrature);
        const cplx o = spectral_oracle(n, r, z, 1.0, k, false);
        CHECK(std::abs(q - o) <= 1e-10);
        const cplx g = evaluate_G(n, 1, r, z, f, k);
        const cplx go = spectral_oracle(n, r, z, 1.0, k, false, 1);
        CHECK(std::abs(g - go) <= 1e-10);
      }
    }
  }
}

TEST_CASE("finite radial beam values") {
  const auto spec = finite(Configuration::Radial, 1, 1, Method::ParaxialClosedForm);
  const Spinor axis = evaluate_finite(spec, CylPoint(0.0, 0.4, 0.0));
  CHECK(axis.down == cplx(0.0));
  CHECK(axis.up.real() > 0.0);
  CHECK(axis.up.imag() == doctest::Approx(0.0));
  CHECK(std::abs(axis.up - std::sqrt(2.0) / std::sqrt(4.0 * kPi)) < 1e-13);

  // At the waist with a real spectrum both F are real.
  const Spinor waist = evaluate_finite(spec, CylPoint(1.3, 0.0, 0.0));
  CHECK(std::abs(waist.up.imag()) < 1e-15);
  CHECK(std::abs(waist.down.imag()) < 1e-15);
}

TEST_CASE("negative j follows from positive j by reflection") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> rr(0.0, 4.0), ph(0.0, 2 * kPi), zz(-100.0, 100.0);
  for (Method m : {Method::ParaxialClosedForm, Method::Quadrature}) {
    for (int sigma : {1, -1}) {
      const auto plus = finite(Configuration::Radial, 1, sigma, m);
      const auto minus = finite(Configuration::Radial, -1, sigma, m);
      for (int trial = 0; trial < 10; ++trial) {
        const double r = rr(rng), phi = ph(rng), z = zz(rng);
        const Spinor p = evaluate_finite(plus, CylPoint(r, -phi, z));
        const Spinor q = evaluate_finite(plus, CylPoint(r, phi, z));
        const Spinor n = evaluate_finite(minus, CylPoint(r, phi, z));
        // (sigma F_{-1} e^{-i phi}, F_0) with F_{-1} = -F_1.
        CHECK(std::abs(n.up + static_cast<double>(sigma) * p.down) <= 1e-12);
        CHECK(std::abs(n.down - static_cast<double>(sigma) * q.up) <= 1e-12);
      }
    }
  }
  // The reflected closed form agrees with a direct negative-order oracle.
  const GaussianSpectrum f(1.0);
  const cplx reflected = evaluate_F_reflected(-1, 1.5, 0.0, f, 100.0, Method::ParaxialClosedForm);
  const cplx direct = spectral_oracle(-1, 1.5, 0.0, 1.0, 100.0, true);
  CHECK(std::abs(reflected - direct) < 1e-9);
}

TEST_CASE("finite azimuthal beam on the axis") {
  const auto spec = finite(Configuration::Azimuthal, 1, 1, Method::Quadrature);
  const double z = 30.0;
  const Spinor axis = evaluate_finite(spec, CylPoint(0.0, 0.0, z));
  CHECK(std::abs(axis.down) < 1e-15);
  const cplx g = evaluate_G(0, 1, 0.0, z, GaussianSpectrum(1.0), 100.0);
  CHECK(std::abs(axis.up - g / std::sqrt(4.0 * kPi)) < 1e-15);
}

TEST_CASE("every family is a J_z eigenstate") {
  const std::array<BeamSpec, 6> specs = {
      nondiffractive(Configuration::Radial, 3, 1),
      nondiffractive(Configuration::Azimuthal, -1, -1),
      finite(Configuration::Radial, 1, -1, Method::ParaxialClosedForm),
      finite(Configuration::Radial, -3, 1, Method::Quadrature),
      finite(Configuration::Azimuthal, 3, 1, Method::Quadrature),
      finite(Configuration::Azimuthal, -1, -1, Method::Quadrature),
  };
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rr(0.1, 3.0), ph(0.0, 2 * kPi), zz(-20.0, 20.0);
  const double h = 1e-2;
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 5; ++trial) {
      const double r = rr(rng), phi = ph(rng), z = zz(rng);
      auto at = [&](double p) { return evaluate(spec, CylPoint(r, p, z)); };
      const Spinor s0 = at(phi);
      const Spinor m2 = at(phi - 2 * h), m1 = at(phi - h), p1 = at(phi + h), p2 = at(phi + 2 * h);
      auto derivative = [&](cplx Spinor::*c) {
        return (-(p2.*c) + 8.0 * (p1.*c) - 8.0 * (m1.*c) + (m2.*c)) / (12.0 * h);
      };
      const Spinor jz{-kI * derivative(&Spinor::up) + 0.5 * s0.up,
                      -kI * derivative(&Spinor::down) - 0.5 * s0.down};
      const double j = spec.j().value();
      CHECK(distance(jz, Spinor{j * s0.up, j * s0.down}) <= 1e-6 * norm(s0));
    }
  }
}
