#pragma once

#include <array>

#include "spinbeam/beams.hpp"

namespace spinbeam {

/// Unit Bloch vector in cylindrical and Cartesian components.
struct PolarizationVector {
  double s_r = 0.0;
  double s_phi = 0.0;
  double s_z = 0.0;
  double s_x = 0.0;
  double s_y = 0.0;

  double norm() const;
};

/// Densities below this are treated as zero and leave s undefined.
inline constexpr double kDensityFloor = 1e-300;

double probability_density(const Spinor& psi);

/// s = psi^dagger sigma psi / rho, cylindrical components taken at azimuth phi.
/// Throws UndefinedPolarization when rho < kDensityFloor.
PolarizationVector spin_polarization(const Spinor& psi, double phi);

/// As above at a point; on the axis s_r = s_phi = 0 and the transverse part is
/// carried only by s_x, s_y.
PolarizationVector spin_polarization(const Spinor& psi, const CylPoint& x);

/// Polarization from the closed-form component expressions (Bessel values for
/// non-diffractive beams, F or G integrals for finite beams) without forming
/// the spinor. On the axis, where both components vanish for |j| >= 3/2, the
/// r -> 0 limit is returned (s_z = sign j).
PolarizationVector closed_form_pol(const BeamSpec& spec, const CylPoint& x);

struct SpinExpectationOptions {
  double abs_tol = 1e-11;
  // Outer radius of the direct radial quadrature, in units of w0 sqrt(1 + (z/z0)^2).
  double core_radius = 200.0;
};

/// Integrated spin <sigma> over the transverse plane at height z.
///
/// The azimuthal integral is done analytically: the x and y components vanish
/// identically and <sigma_z> = (1/2) int (|A_lower|^2 - |A_upper|^2) r dr. The
/// radial amplitudes decay only like r^-2, so the integral beyond the core
/// radius is taken either through the mapped tail quadrature (closed-form
/// amplitudes) or through the leading r^-2 asymptote (quadrature amplitudes).
std::array<double, 3> spin_expectation(const BeamSpec& spec, double z,
                                       const SpinExpectationOptions& opts = {});

/// Total probability int rho dA at height z, same radial scheme.
double total_probability(const BeamSpec& spec, double z, const SpinExpectationOptions& opts = {});

}  // namespace spinbeam
