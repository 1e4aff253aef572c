#pragma once

#include <functional>

#include "spinbeam/beams.hpp"
#include "spinbeam/polarization.hpp"

namespace spinbeam {

struct ChargeReport {
  double q_formula = 0.0;
  double q_boundary = 0.0;
  double q_integral = 0.0;
  double s_z_axis = 0.0;
  double s_z_infinity = 0.0;
  int grid_resolution = 0;
};

/// q = -(1/2)(1 + j / (j^2 + 1/4)) for j >= 1/2. For j <= -1/2 the beam is the
/// J-reflection of the j > 0 one with both s_z limits flipped, so q(-j) = -q(j).
double charge_formula(HalfInt j);

/// Radii (in units of w0) used for the r -> infinity limit of s_z.
inline constexpr double kLimitRadii[3] = {10.0, 14.0, 20.0};
/// Largest allowed disagreement between the two Richardson estimates.
inline constexpr double kLimitSpread = 1e-2;

/// q = (s_z(inf) - s_z(0)) / 2 with s_z(inf) extrapolated in 1/r^2 from the
/// limit radii. Radial finite beams only; fills the boundary fields and
/// q_formula.
ChargeReport charge_boundary(const BeamSpec& spec, double z, double spread = kLimitSpread);

/// Orientation sign mapping the solid-angle integral (1/4pi) int s.(d_x s x d_y s) dA,
/// with (x, y, z) right-handed and z along propagation, onto q_boundary.
/// For these textures the integral over a disk is (s_z(0) - s_z(R)) / 2, the
/// negative of the boundary charge.
inline constexpr double kOrientationSign = -1.0;

/// Solid-angle charge of a rotationally symmetric texture with unit winding,
/// given its polar angle Theta(r) on a uniform grid: (1/2) int sin(Theta) dTheta
/// by the trapezoid rule. No orientation sign is applied.
double texture_charge(const std::function<PolarizationVector(double r)>& texture, double r_max,
                      int n_r);

/// kOrientationSign * texture_charge of the beam's polarization field on the
/// disk r <= r_max at height z. Requires n_r >= 64 and r_max >= 10 w0.
double charge_integral(const BeamSpec& spec, double z, int n_r, double r_max);

/// All three routes at once.
ChargeReport charge_report(const BeamSpec& spec, double z, int n_r, double r_max,
                           double spread = kLimitSpread);

}  // namespace spinbeam
