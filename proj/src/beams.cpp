#include "spinbeam/beams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spinbeam/error.hpp"
#include "spinbeam/specfun.hpp"

namespace spinbeam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void check_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) {
    throw Error(ErrorKind::InvalidSigma, "sigma must be +1 or -1, got " + std::to_string(sigma));
  }
}

double reflection_sign(int n) { return (n < 0 && (-n) % 2 == 1) ? -1.0 : 1.0; }

cplx phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

double kz_of(double kappa, double k, bool paraxial) {
  if (paraxial) return k - kappa * kappa / (2.0 * k);
  return std::sqrt(std::max(0.0, (k - kappa) * (k + kappa)));
}

// Panels for a spectral integral over [0, k]: the bulk [0, cutoff] is split so
// that no panel spans more than one period of the fastest phase.
std::vector<double> spectral_breakpoints(double r, double z, double k, double cutoff,
                                         bool paraxial) {
  const double top = std::min(k, cutoff);
  const double kz_top = kz_of(top, k, paraxial);
  const double phase_rate = r + std::abs(z) * top / std::max(kz_top, 1e-3 * k);
  double width = top / 4.0;
  if (phase_rate > 0.0) width = std::min(width, kTwoPi / phase_rate);
  auto points = quad::uniform_breakpoints(0.0, top, width);
  if (top < k) points.push_back(k);
  return points;
}

cplx spectral_integral(int n, double r, double z, const GaussianSpectrum& spectrum, double k,
                       int weight_sign, const SpectralOptions& opts) {
  const bool paraxial = opts.paraxial_phase;
  const quad::Integrand integrand = [&](double kappa) -> cplx {
    double weight = spectrum(kappa) * kappa;
    if (weight_sign != 0) weight *= std::sqrt(std::max(0.0, 1.0 + weight_sign * kappa / k));
    if (weight == 0.0) return {};
    return weight * specfun::bessel_j(n, kappa * r) * phase(kz_of(kappa, k, paraxial) * z);
  };
  const auto points =
      spectral_breakpoints(r, z, k, spectrum.effective_cutoff(), paraxial);
  return quad::integrate(integrand, std::span<const double>(points), opts.quad).value;
}

cplx closed_form_F(int n, double r, double z, const GaussianSpectrum& spectrum, double k) {
  const double w0 = spectrum.w0();
  const cplx w2 = spectrum.waist_squared(z, k);
  const cplx w = std::sqrt(w2);
  const cplx t = r * r / (4.0 * w2);
  const cplx carrier = phase(k * z);

  // r * exp(-t) [I_{-1/2}(t) - I_{1/2}(t)] = 2 w sqrt(2/pi) exp(-2t) exactly;
  // used near the axis, where I_{-1/2} alone is singular.
  if (n == 0 && std::abs(t) < 1e-6) {
    const cplx fused = 2.0 * w * std::sqrt(2.0 / kPi) * std::exp(-2.0 * t);
    return std::sqrt(kPi) * w0 / (2.0 * w2 * w) * fused * carrier;
  }
  if (r == 0.0) return {};
  const cplx bracket = specfun::bessel_i_scaled(HalfInt::from_twice(n - 1), t) -
                       specfun::bessel_i_scaled(HalfInt::from_twice(n + 1), t);
  return std::sqrt(kPi) * w0 * r / (2.0 * w2 * w) * bracket * carrier;
}

}  // namespace

CylPoint::CylPoint(double r, double phi, double z) : r_(r), phi_(0.0), z_(z) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorKind::Domain, "CylPoint: r must be finite and >= 0");
  if (!std::isfinite(phi) || !std::isfinite(z)) throw Error(ErrorKind::Domain, "CylPoint: non-finite coordinate");
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) phi_ += kTwoPi;
  if (phi_ >= kTwoPi) phi_ = 0.0;
}

GaussianSpectrum::GaussianSpectrum(double w0) : w0_(w0) {
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw Error(ErrorKind::InvalidSpec, "GaussianSpectrum: w0 must be > 0");
}

double GaussianSpectrum::operator()(double kappa) const {
  const double a = w0_ * kappa;
  return std::numbers::sqrt2 * w0_ * std::exp(-0.5 * a * a);
}

cplx GaussianSpectrum::waist_squared(double z, double k) const {
  return w0_ * w0_ * cplx(1.0, z / rayleigh_range(k));
}

BeamSpec::BeamSpec(Configuration configuration, HalfInt j, int sigma, double k, Kind kind)
    : configuration_(configuration), j_(j), sigma_(sigma), k_(k), kind_(std::move(kind)) {
  check_sigma(sigma);
  if (!j.is_half_odd()) throw Error(ErrorKind::InvalidSpec, "j must be half-odd-integer, got " + j.str());
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidSpec, "k must be > 0");
  if (const auto* nd = std::get_if<NonDiffractive>(&kind_)) {
    if (!(nd->kappa > 0.0 && nd->kappa < k)) {
      throw Error(ErrorKind::InvalidSpec, "non-diffractive beam requires 0 < kappa < k");
    }
  } else {
    const auto& fin = std::get<Finite>(kind_);
    if (fin.method == Method::ParaxialClosedForm) {
      if (configuration == Configuration::Azimuthal) {
        throw Error(ErrorKind::InvalidSpec, "paraxial closed form exists only for the radial configuration");
      }
      if (!fin.spectrum.paraxial_valid(k)) {
        throw Error(ErrorKind::InvalidSpec, "paraxial closed form requires k*w0 >= 10");
      }
    }
  }
}

double BeamSpec::kz() const {
  const double kappa = nondiffractive().kappa;
  return std::sqrt((k_ - kappa) * (k_ + kappa));
}

Spinor eigenspinor_v(int sigma, double phi) {
  check_sigma(sigma);
  const double s = std::numbers::sqrt2 / 2.0;
  if (sigma == 1) return {s, -kI * phase(phi) * s};
  return {-kI * phase(-phi) * s, s};
}

Spinor eigenspinor_u(int sigma, double phi, double w_rho) {
  check_sigma(sigma);
  if (!(w_rho >= 0.0 && w_rho <= 1.0)) throw Error(ErrorKind::Domain, "eigenspinor_u: w_rho must lie in [0, 1]");
  const double s = std::numbers::sqrt2 / 2.0;
  const double plus = std::sqrt(1.0 + w_rho) * s;
  const double minus = std::sqrt(1.0 - w_rho) * s;
  if (sigma == 1) return {plus, -phase(phi) * minus};
  return {phase(-phi) * minus, plus};
}

Spinor evaluate_nondiffractive(const BeamSpec& spec, const CylPoint& x) {
  const double kappa = spec.nondiffractive().kappa;
  const int lo = spec.lower_order();
  const int hi = spec.upper_order();
  const double jl = specfun::bessel_j(lo, kappa * x.r());
  const double ju = specfun::bessel_j(hi, kappa * x.r());
  const cplx common = std::sqrt(kappa / (4.0 * kPi)) * phase(spec.kz() * x.z());
  const cplx up_phase = phase(lo * x.phi());
  const cplx dn_phase = phase(hi * x.phi());

  if (spec.configuration() == Configuration::Radial) {
    return {common * (spec.sigma() * jl) * up_phase, common * ju * dn_phase};
  }
  const double w = kappa / spec.k();
  const double plus = std::sqrt(1.0 + w);
  const double minus = std::sqrt(1.0 - w);
  if (spec.sigma() == 1) {
    return {common * plus * jl * up_phase, -kI * common * minus * ju * dn_phase};
  }
  return {-kI * common * minus * jl * up_phase, common * plus * ju * dn_phase};
}

cplx evaluate_F(int n, double r, double z, const GaussianSpectrum& spectrum, double k,
                Method method, const SpectralOptions& opts) {
  if (!(r >= 0.0)) throw Error(ErrorKind::Domain, "evaluate_F: r must be >= 0");
  if (method == Method::ParaxialClosedForm) {
    if (n < 0) {
      throw Error(ErrorKind::UnsupportedOrder,
                  "paraxial closed form is derived for n >= 0 only, got n = " + std::to_string(n));
    }
    if (!spectrum.paraxial_valid(k)) throw Error(ErrorKind::InvalidSpec, "paraxial closed form requires k*w0 >= 10");
    return closed_form_F(n, r, z, spectrum, k);
  }
  return reflection_sign(n) * spectral_integral(std::abs(n), r, z, spectrum, k, 0, opts);
}

cplx evaluate_F_reflected(int n, double r, double z, const GaussianSpectrum& spectrum, double k,
                          Method method, const SpectralOptions& opts) {
  return reflection_sign(n) * evaluate_F(std::abs(n), r, z, spectrum, k, method, opts);
}

cplx evaluate_G(int n, int weight_sign, double r, double z, const GaussianSpectrum& spectrum,
                double k, const SpectralOptions& opts) {
  if (weight_sign != 1 && weight_sign != -1) throw Error(ErrorKind::Domain, "evaluate_G: weight_sign must be +1 or -1");
  if (!(r >= 0.0)) throw Error(ErrorKind::Domain, "evaluate_G: r must be >= 0");
  return reflection_sign(n) * spectral_integral(std::abs(n), r, z, spectrum, k, weight_sign, opts);
}

RadialAmplitudes finite_amplitudes(const BeamSpec& spec, double r, double z) {
  const auto& fin = spec.finite();
  SpectralOptions opts;
  opts.paraxial_phase = fin.paraxial_phase;
  const int lo = spec.lower_order();
  const int hi = spec.upper_order();
  if (spec.configuration() == Configuration::Radial) {
    const cplx f_lo = evaluate_F_reflected(lo, r, z, fin.spectrum, spec.k(), fin.method, opts);
    const cplx f_hi = evaluate_F_reflected(hi, r, z, fin.spectrum, spec.k(), fin.method, opts);
    return {static_cast<double>(spec.sigma()) * f_lo, f_hi};
  }
  if (spec.sigma() == 1) {
    return {evaluate_G(lo, 1, r, z, fin.spectrum, spec.k(), opts),
            -kI * evaluate_G(hi, -1, r, z, fin.spectrum, spec.k(), opts)};
  }
  return {-kI * evaluate_G(lo, -1, r, z, fin.spectrum, spec.k(), opts),
          evaluate_G(hi, 1, r, z, fin.spectrum, spec.k(), opts)};
}

Spinor evaluate_finite(const BeamSpec& spec, const CylPoint& x) {
  const auto amps = finite_amplitudes(spec, x.r(), x.z());
  const double norm = 1.0 / std::sqrt(4.0 * kPi);
  return {norm * amps.lower * phase(spec.lower_order() * x.phi()),
          norm * amps.upper * phase(spec.upper_order() * x.phi())};
}

Spinor evaluate(const BeamSpec& spec, const CylPoint& x) {
  return spec.is_finite() ? evaluate_finite(spec, x) : evaluate_nondiffractive(spec, x);
}

Spinor reconstruct_from_momentum(const BeamSpec& spec, const CylPoint& x,
                                 const quad::QuadOptions& opts) {
  const double kappa = spec.nondiffractive().kappa;
  const int m = spec.m();
  const int sigma = spec.sigma();
  const bool azimuthal = spec.configuration() == Configuration::Azimuthal;
  const double w_rho = kappa / spec.k();

  auto momentum_spinor = [&](double varphi) {
    return azimuthal ? eigenspinor_u(sigma, varphi, w_rho) : eigenspinor_v(sigma, varphi);
  };
  auto carrier = [&](double varphi) {
    return phase(m * varphi + kappa * x.r() * std::cos(varphi - x.phi()));
  };
  const quad::Integrand up = [&](double varphi) { return momentum_spinor(varphi).up * carrier(varphi); };
  const quad::Integrand down = [&](double varphi) { return momentum_spinor(varphi).down * carrier(varphi); };

  const double rate = kappa * x.r() + std::abs(m) + 1.0;
  const auto points = quad::uniform_breakpoints(0.0, kTwoPi, std::min(kTwoPi / 8.0, kTwoPi / rate));
  const cplx up_integral = quad::integrate(up, std::span<const double>(points), opts).value;
  const cplx down_integral = quad::integrate(down, std::span<const double>(points), opts).value;

  // (1/2pi) sqrt(kappa/2pi) i^{-m} exp(i k_z z)
  constexpr cplx kPowers[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  const cplx i_pow = kPowers[((m % 4) + 4) % 4];
  const cplx pref = std::sqrt(kappa / kTwoPi) / kTwoPi * i_pow * phase(spec.kz() * x.z());
  return {pref * up_integral, pref * down_integral};
}

}  // namespace spinbeam
