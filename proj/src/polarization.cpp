#include "spinbeam/polarization.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "spinbeam/error.hpp"
#include "spinbeam/specfun.hpp"

namespace spinbeam {

namespace {

constexpr cplx kI{0.0, 1.0};

void fill_cartesian(PolarizationVector& s, double phi) {
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  s.s_x = s.s_r * c - s.s_phi * sn;
  s.s_y = s.s_r * sn + s.s_phi * c;
}

[[noreturn]] void undefined(const char* where) {
  throw Error(ErrorKind::UndefinedPolarization, std::string(where) + ": probability density vanishes");
}

// s from the transverse coupling T = (s_r + i s_phi) * D / 2 and the two
// component weights.
PolarizationVector from_components(cplx coupling, double lower_sq, double upper_sq,
                                   const CylPoint& x, const char* where) {
  const double denom = lower_sq + upper_sq;
  if (!(denom >= kDensityFloor)) undefined(where);
  PolarizationVector s;
  s.s_r = 2.0 * coupling.real() / denom;
  s.s_phi = 2.0 * coupling.imag() / denom;
  s.s_z = (lower_sq - upper_sq) / denom;
  fill_cartesian(s, x.phi());
  if (x.r() == 0.0) {
    s.s_r = 0.0;
    s.s_phi = 0.0;
  }
  return s;
}

// Radial quadrature of g(r) r over [0, inf) at Gaussian scale `scale`, split
// into a directly integrated core and a tail.
struct RadialIntegrals {
  double difference;
  double sum;
};

RadialIntegrals radial_integrals(const BeamSpec& spec, double z, const SpinExpectationOptions& opts) {
  const auto& fin = spec.finite();
  const double w0 = fin.spectrum.w0();
  const double zeta = z / fin.spectrum.rayleigh_range(spec.k());
  const double scale = w0 * std::sqrt(1.0 + zeta * zeta);

  auto densities = [&](double r) {
    const auto a = finite_amplitudes(spec, r, z);
    return std::pair{std::norm(a.lower), std::norm(a.upper)};
  };
  const quad::Integrand difference = [&](double r) -> cplx {
    const auto [lo, up] = densities(r);
    return (lo - up) * r;
  };
  const quad::Integrand sum = [&](double r) -> cplx {
    const auto [lo, up] = densities(r);
    return (lo + up) * r;
  };

  quad::QuadOptions qo;
  qo.abs_tol = opts.abs_tol;
  qo.rel_tol = 1e-12;

  const double core_end = 16.0 * scale;
  std::vector<double> points = quad::uniform_breakpoints(0.0, core_end, scale);

  if (fin.method == Method::ParaxialClosedForm) {
    auto run = [&](const quad::Integrand& g) {
      const double core = quad::integrate(g, std::span<const double>(points), qo).value.real();
      const double tail = quad::integrate_algebraic_tail(g, core_end, core_end, qo).value.real();
      return core + tail;
    };
    return {run(difference), run(sum)};
  }

  // Quadrature amplitudes cannot be evaluated at arbitrarily large r, so the
  // core extends further and the tail uses A_n ~ n g(0) / r^2, where g(0) is
  // the spectral weight at kappa = 0 (|g(0)|^2 = 2 w0^2; the azimuthal factor
  // sqrt(1 +/- kappa/k) is 1 there).
  const double outer = std::max(opts.core_radius, 16.0) * scale;
  for (double r = 2.0 * core_end; r < outer; r *= 2.0) points.push_back(r);
  points.push_back(outer);

  const double f0_sq = 2.0 * w0 * w0;
  const double lo_n = spec.lower_order();
  const double up_n = spec.upper_order();
  const double lo_coeff = lo_n * lo_n * f0_sq;
  const double up_coeff = up_n * up_n * f0_sq;
  const double tail_factor = 1.0 / (2.0 * outer * outer);

  const double core_diff = quad::integrate(difference, std::span<const double>(points), qo).value.real();
  const double core_sum = quad::integrate(sum, std::span<const double>(points), qo).value.real();
  return {core_diff + (lo_coeff - up_coeff) * tail_factor,
          core_sum + (lo_coeff + up_coeff) * tail_factor};
}

}  // namespace

double PolarizationVector::norm() const { return std::sqrt(s_r * s_r + s_phi * s_phi + s_z * s_z); }

double probability_density(const Spinor& psi) { return std::norm(psi.up) + std::norm(psi.down); }

PolarizationVector spin_polarization(const Spinor& psi, double phi) {
  const double rho = probability_density(psi);
  if (!(rho >= kDensityFloor)) undefined("spin_polarization");
  const cplx cross = std::conj(psi.up) * psi.down;
  PolarizationVector s;
  s.s_x = 2.0 * cross.real() / rho;
  s.s_y = 2.0 * cross.imag() / rho;
  s.s_z = (std::norm(psi.up) - std::norm(psi.down)) / rho;
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  s.s_r = s.s_x * c + s.s_y * sn;
  s.s_phi = -s.s_x * sn + s.s_y * c;
  return s;
}

PolarizationVector spin_polarization(const Spinor& psi, const CylPoint& x) {
  PolarizationVector s = spin_polarization(psi, x.phi());
  if (x.r() == 0.0) {
    s.s_r = 0.0;
    s.s_phi = 0.0;
  }
  return s;
}

PolarizationVector closed_form_pol(const BeamSpec& spec, const CylPoint& x) {
  const double r = x.r();
  const int lo = spec.lower_order();
  const int hi = spec.upper_order();
  const double sigma = spec.sigma();

  // For |j| >= 3/2 both components vanish on the axis like r^|n|; the one with
  // the smaller |n| wins the limit r -> 0.
  if (r == 0.0 && lo != 0 && hi != 0) {
    PolarizationVector s;
    s.s_z = std::abs(lo) < std::abs(hi) ? 1.0 : -1.0;
    return s;
  }

  if (!spec.is_finite()) {
    const double kappa = spec.nondiffractive().kappa;
    const double a = specfun::bessel_j(lo, kappa * r);
    const double b = specfun::bessel_j(hi, kappa * r);
    if (spec.configuration() == Configuration::Radial) {
      // s_perp = 2 sigma J_- J_+ / (J_-^2 + J_+^2) e_r
      return from_components(cplx(sigma * a * b, 0.0), a * a, b * b, x, "closed_form_pol");
    }
    const double w_kappa = kappa / spec.k();
    const double w_z = spec.kz() / spec.k();
    const double lo_weight = sigma > 0 ? 1.0 + w_kappa : 1.0 - w_kappa;
    const double up_weight = sigma > 0 ? 1.0 - w_kappa : 1.0 + w_kappa;
    // s_perp = -/+ 2 w_z J_- J_+ / D e_phi
    return from_components(cplx(0.0, -sigma * w_z * a * b), lo_weight * a * a, up_weight * b * b, x,
                           "closed_form_pol");
  }

  const auto& fin = spec.finite();
  SpectralOptions so;
  so.paraxial_phase = fin.paraxial_phase;
  if (spec.configuration() == Configuration::Radial) {
    const cplx f_lo = evaluate_F_reflected(lo, r, x.z(), fin.spectrum, spec.k(), fin.method, so);
    const cplx f_hi = evaluate_F_reflected(hi, r, x.z(), fin.spectrum, spec.k(), fin.method, so);
    // s_perp = 2 sigma [Re(F-* F+) e_r + Im(F-* F+) e_phi] / (|F-|^2 + |F+|^2)
    return from_components(sigma * std::conj(f_lo) * f_hi, std::norm(f_lo), std::norm(f_hi), x,
                           "closed_form_pol");
  }
  // Azimuthal finite beam: the -i on the sqrt(1 - w) component turns the
  // coupling by a quarter turn, -/+ i G-* G+.
  const cplx g_lo = evaluate_G(lo, static_cast<int>(sigma), r, x.z(), fin.spectrum, spec.k(), so);
  const cplx g_hi = evaluate_G(hi, -static_cast<int>(sigma), r, x.z(), fin.spectrum, spec.k(), so);
  return from_components(-sigma * kI * std::conj(g_lo) * g_hi, std::norm(g_lo), std::norm(g_hi), x,
                         "closed_form_pol");
}

std::array<double, 3> spin_expectation(const BeamSpec& spec, double z, const SpinExpectationOptions& opts) {
  if (!spec.is_finite()) {
    throw Error(ErrorKind::InvalidSpec, "spin_expectation requires a finite (square-integrable) beam");
  }
  // Transverse components integrate e^{+-i phi} over a full turn.
  return {0.0, 0.0, 0.5 * radial_integrals(spec, z, opts).difference};
}

double total_probability(const BeamSpec& spec, double z, const SpinExpectationOptions& opts) {
  if (!spec.is_finite()) {
    throw Error(ErrorKind::InvalidSpec, "total_probability requires a finite (square-integrable) beam");
  }
  return 0.5 * radial_integrals(spec, z, opts).sum;
}

}  // namespace spinbeam
