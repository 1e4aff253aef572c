#pragma once

#include <complex>
#include <variant>

#include "spinbeam/halfint.hpp"
#include "spinbeam/quadrature.hpp"

namespace spinbeam {

using cplx = std::complex<double>;

enum class Configuration { Radial, Azimuthal };
enum class Method { ParaxialClosedForm, Quadrature };

/// Two-component wavefunction value at a point.
struct Spinor {
  cplx up;
  cplx down;
};

/// Observation point in beam coordinates; phi is reduced to [0, 2 pi).
class CylPoint {
 public:
  CylPoint(double r, double phi, double z);

  double r() const { return r_; }
  double phi() const { return phi_; }
  double z() const { return z_; }

 private:
  double r_;
  double phi_;
  double z_;
};

/// f(kappa) = sqrt(2) w0 exp(-w0^2 kappa^2 / 2), normalized so that
/// int_0^inf |f|^2 kappa dkappa = 1.
class GaussianSpectrum {
 public:
  explicit GaussianSpectrum(double w0);

  double w0() const { return w0_; }
  double operator()(double kappa) const;

  double rayleigh_range(double k) const { return k * w0_ * w0_; }
  /// w^2 = w0^2 (1 + i z / z0).
  cplx waist_squared(double z, double k) const;
  /// Paraxial closed form is accepted only for k w0 >= 10.
  bool paraxial_valid(double k) const { return k * w0_ >= 10.0; }
  /// Beyond this the spectrum is below exp(-72) of its peak.
  double effective_cutoff() const { return 12.0 / w0_; }

 private:
  double w0_;
};

struct NonDiffractive {
  double kappa;
};

struct Finite {
  GaussianSpectrum spectrum;
  Method method = Method::ParaxialClosedForm;
  // Quadrature only: use k_z = k - kappa^2 / 2k instead of the exact root.
  bool paraxial_phase = false;
};

/// Immutable, validated description of one beam.
class BeamSpec {
 public:
  using Kind = std::variant<NonDiffractive, Finite>;

  BeamSpec(Configuration configuration, HalfInt j, int sigma, double k, Kind kind);

  Configuration configuration() const { return configuration_; }
  HalfInt j() const { return j_; }
  int sigma() const { return sigma_; }
  double k() const { return k_; }
  const Kind& kind() const { return kind_; }

  bool is_finite() const { return std::holds_alternative<Finite>(kind_); }
  const NonDiffractive& nondiffractive() const { return std::get<NonDiffractive>(kind_); }
  const Finite& finite() const { return std::get<Finite>(kind_); }

  /// Orbital quantum number m = j - sigma/2.
  int m() const { return (j_.twice() - sigma_) / 2; }
  /// Bessel orders j -/+ 1/2 carried by the upper and lower components.
  int lower_order() const { return (j_.twice() - 1) / 2; }
  int upper_order() const { return (j_.twice() + 1) / 2; }
  /// k_z for non-diffractive beams.
  double kz() const;

 private:
  Configuration configuration_;
  HalfInt j_;
  int sigma_;
  double k_;
  Kind kind_;
};

/// Controls for the spectral integrals of finite beams.
struct SpectralOptions {
  bool paraxial_phase = false;
  quad::QuadOptions quad{1e-14, 1e-11, 60, 200000};
};

/// Eigenspinors of sigma.v with v = -e_phi(momentum azimuth).
Spinor eigenspinor_v(int sigma, double phi);

/// Eigenspinors of sigma.u with u = v x p/p; w_rho = k_rho / k.
Spinor eigenspinor_u(int sigma, double phi, double w_rho);

Spinor evaluate_nondiffractive(const BeamSpec& spec, const CylPoint& x);

/// F_n(r, z) = int_0^k f(kappa) J_n(kappa r) exp(i k_z z) kappa dkappa, either by
/// quadrature or by the paraxial modified-Bessel-Gaussian closed form (n >= 0).
cplx evaluate_F(int n, double r, double z, const GaussianSpectrum& spectrum, double k,
                Method method, const SpectralOptions& opts = {});

/// F_n for any integer n; negative orders use F_{-n} = (-1)^n F_n, which also
/// covers the closed form.
cplx evaluate_F_reflected(int n, double r, double z, const GaussianSpectrum& spectrum, double k,
                          Method method, const SpectralOptions& opts = {});

/// Azimuthal analogue of F_n with the extra weight sqrt(1 + weight_sign kappa/k).
cplx evaluate_G(int n, int weight_sign, double r, double z, const GaussianSpectrum& spectrum,
                double k, const SpectralOptions& opts = {});

Spinor evaluate_finite(const BeamSpec& spec, const CylPoint& x);

/// Dispatches on the beam kind.
Spinor evaluate(const BeamSpec& spec, const CylPoint& x);

/// Independent route for non-diffractive beams: the momentum-space eigenfunction
/// pushed through the plane-wave superposition, with the azimuthal momentum
/// integral done by adaptive quadrature.
Spinor reconstruct_from_momentum(const BeamSpec& spec, const CylPoint& x,
                                 const quad::QuadOptions& opts = {1e-13, 1e-12, 60, 200000});

/// Radial amplitudes (A_lower, A_upper) such that the spinor is
/// (A_lower e^{i(j-1/2)phi}, A_upper e^{i(j+1/2)phi}) / sqrt(4 pi), with every
/// constant phase or sign folded in. Finite beams only.
struct RadialAmplitudes {
  cplx lower;
  cplx upper;
};
RadialAmplitudes finite_amplitudes(const BeamSpec& spec, double r, double z);

}  // namespace spinbeam
