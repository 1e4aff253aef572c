#include "spinbeam/topology.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "spinbeam/error.hpp"

namespace spinbeam {

namespace {

void require_finite_radial(const BeamSpec& spec, const char* where) {
  if (spec.configuration() != Configuration::Radial) {
    throw Error(ErrorKind::InvalidSpec,
                std::string(where) + ": topological charge is defined only for radial beams");
  }
  if (!spec.is_finite()) {
    throw Error(ErrorKind::InvalidSpec, std::string(where) + ": topological charge needs a finite beam");
  }
}

double s_z_at(const BeamSpec& spec, double r, double z) {
  return closed_form_pol(spec, CylPoint(r, 0.0, z)).s_z;
}

}  // namespace

double charge_formula(HalfInt j) {
  const double jv = std::abs(j.value());
  const double q = -0.5 * (1.0 + jv / (jv * jv + 0.25));
  return j.twice() > 0 ? q : -q;
}

ChargeReport charge_boundary(const BeamSpec& spec, double z, double spread) {
  require_finite_radial(spec, "charge_boundary");
  const double w0 = spec.finite().spectrum.w0();

  ChargeReport report;
  report.q_formula = charge_formula(spec.j());
  report.s_z_axis = s_z_at(spec, 0.0, z);

  double s[3];
  double h[3];
  for (int i = 0; i < 3; ++i) {
    const double r = kLimitRadii[i] * w0;
    s[i] = s_z_at(spec, r, z);
    h[i] = 1.0 / (r * r);
  }
  // One Richardson step in h = 1/r^2 on each neighbouring pair.
  const double coarse = (s[1] * h[0] - s[0] * h[1]) / (h[0] - h[1]);
  const double fine = (s[2] * h[1] - s[1] * h[2]) / (h[1] - h[2]);
  if (!(std::abs(fine - coarse) <= spread)) {
    throw Error(ErrorKind::IllConvergedLimit,
                "charge_boundary: s_z limit estimates disagree (" + std::to_string(coarse) + " vs " +
                    std::to_string(fine) + ")");
  }
  report.s_z_infinity = fine;
  report.q_boundary = 0.5 * (report.s_z_infinity - report.s_z_axis);
  return report;
}

double texture_charge(const std::function<PolarizationVector(double r)>& texture, double r_max,
                      int n_r) {
  if (n_r < 2 || !(r_max > 0.0)) throw Error(ErrorKind::Domain, "texture_charge: need n_r >= 2 and r_max > 0");
  std::vector<double> theta(n_r);
  for (int i = 0; i < n_r; ++i) {
    const double r = r_max * i / (n_r - 1);
    PolarizationVector s;
    try {
      s = texture(r);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UndefinedPolarization) throw;
      throw Error(ErrorKind::Sampling,
                  "texture_charge: polarization undefined at r = " + std::to_string(r));
    }
    const double transverse = std::hypot(s.s_x, s.s_y);
    theta[i] = std::atan2(transverse, s.s_z);
  }
  double total = 0.0;
  for (int i = 1; i < n_r; ++i) {
    total += 0.5 * (std::sin(theta[i - 1]) + std::sin(theta[i])) * (theta[i] - theta[i - 1]);
  }
  return 0.5 * total;
}

double charge_integral(const BeamSpec& spec, double z, int n_r, double r_max) {
  require_finite_radial(spec, "charge_integral");
  const double w0 = spec.finite().spectrum.w0();
  if (n_r < 64) throw Error(ErrorKind::Domain, "charge_integral: n_r must be >= 64");
  if (!(r_max >= 10.0 * w0)) throw Error(ErrorKind::Domain, "charge_integral: r_max must be >= 10 w0");
  // The axis value is the r -> 0 limit; for |j| >= 3/2 the spinor itself vanishes there.
  const auto texture = [&](double r) {
    const CylPoint x(r, 0.0, z);
    return r == 0.0 ? closed_form_pol(spec, x) : spin_polarization(evaluate_finite(spec, x), x);
  };
  return kOrientationSign * texture_charge(texture, r_max, n_r);
}

ChargeReport charge_report(const BeamSpec& spec, double z, int n_r, double r_max, double spread) {
  ChargeReport report = charge_boundary(spec, z, spread);
  report.q_integral = charge_integral(spec, z, n_r, r_max);
  report.grid_resolution = n_r;
  return report;
}

}  // namespace spinbeam
