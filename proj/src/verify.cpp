#include "spinbeam/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "spinbeam/error.hpp"
#include "spinbeam/polarization.hpp"
#include "spinbeam/specfun.hpp"
#include "spinbeam/topology.hpp"

namespace spinbeam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kK = 100.0;  // k w0 = 100 with w0 = 1

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

HalfInt j_from(Rng& rng, std::initializer_list<int> twice) {
  const auto i = static_cast<std::size_t>(rng() % twice.size());
  return HalfInt::from_twice(*(twice.begin() + i));
}

int sigma_from(Rng& rng) { return rng() % 2 == 0 ? 1 : -1; }

enum class Family { BesselRadial, BesselAzimuthal, FiniteRadial, FiniteAzimuthal };
constexpr std::array<Family, 4> kFamilies = {Family::BesselRadial, Family::BesselAzimuthal,
                                             Family::FiniteRadial, Family::FiniteAzimuthal};

const char* family_name(Family f) {
  switch (f) {
    case Family::BesselRadial: return "bessel radial";
    case Family::BesselAzimuthal: return "bessel azimuthal";
    case Family::FiniteRadial: return "finite radial";
    case Family::FiniteAzimuthal: return "finite azimuthal";
  }
  return "";
}

BeamSpec make_beam(Family f, HalfInt j, int sigma, Method method = Method::ParaxialClosedForm) {
  switch (f) {
    case Family::BesselRadial: return BeamSpec(Configuration::Radial, j, sigma, 2.0, NonDiffractive{1.0});
    case Family::BesselAzimuthal: return BeamSpec(Configuration::Azimuthal, j, sigma, 2.0, NonDiffractive{1.0});
    case Family::FiniteRadial:
      return BeamSpec(Configuration::Radial, j, sigma, kK, Finite{GaussianSpectrum(1.0), method, false});
    case Family::FiniteAzimuthal:
      return BeamSpec(Configuration::Azimuthal, j, sigma, kK,
                      Finite{GaussianSpectrum(1.0), Method::Quadrature, false});
  }
  throw Error(ErrorKind::InvalidSpec, "unknown family");
}

// Random beam of a family and a random off-axis point where it is sampled.
struct Sample {
  BeamSpec beam;
  CylPoint x;
};

Sample random_sample(Family f, Rng& rng) {
  const HalfInt j = j_from(rng, {-3, -1, 1, 3});
  const int sigma = sigma_from(rng);
  const Method method = rng() % 2 == 0 ? Method::ParaxialClosedForm : Method::Quadrature;
  const bool bessel = f == Family::BesselRadial || f == Family::BesselAzimuthal;
  const double r = uniform(rng, 1e-3, bessel ? 10.0 : 5.0);
  const double z = uniform(rng, -kK, kK);
  return {make_beam(f, j, sigma, method), CylPoint(r, uniform(rng, 0.0, 2 * kPi), z)};
}

double spinor_distance(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.up - b.up) + std::norm(a.down - b.down));
}

double pol_distance(const PolarizationVector& a, const PolarizationVector& b) {
  return std::max({std::abs(a.s_r - b.s_r), std::abs(a.s_phi - b.s_phi), std::abs(a.s_z - b.s_z),
                   std::abs(a.s_x - b.s_x), std::abs(a.s_y - b.s_y)});
}

using Measurements = std::vector<Measurement>;

Measurements check_charge(Suite) {
  const BeamSpec beam = make_beam(Family::FiniteRadial, HalfInt::from_twice(1), 1);
  const auto report = charge_boundary(beam, 0.0);
  return {
      {"|q_formula(1/2)+1|", std::abs(charge_formula(HalfInt::from_twice(1)) + 1.0), 0.0},
      {"|q_boundary(1/2)+1|", std::abs(report.q_boundary + 1.0), 2e-3},
      {"|q_formula(201/2)+1/2|", std::abs(charge_formula(HalfInt::from_twice(201)) + 0.5), 1e-2},
  };
}

Measurements check_unit_norm(Suite suite) {
  const int n = suite == Suite::Full ? 1000 : 200;
  Rng rng(2);
  Measurements out;
  for (Family f : kFamilies) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [beam, x] = random_sample(f, rng);
      const auto s = spin_polarization(evaluate(beam, x), x);
      worst = std::max(worst, std::abs(std::sqrt(s.s_x * s.s_x + s.s_y * s.s_y + s.s_z * s.s_z) - 1.0));
    }
    out.push_back({std::string("max||s|-1| ") + family_name(f), worst, 1e-10});
  }
  return out;
}

Measurements check_reconstruction(Suite suite) {
  const int n = suite == Suite::Full ? 100 : 40;
  Rng rng(3);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Family f = i % 2 == 0 ? Family::BesselRadial : Family::BesselAzimuthal;
    const BeamSpec beam = make_beam(f, j_from(rng, {-3, -1, 1, 3}), sigma_from(rng));
    const CylPoint x(uniform(rng, 0.0, 10.0), uniform(rng, 0.0, 2 * kPi), uniform(rng, -10.0, 10.0));
    worst = std::max(worst, spinor_distance(evaluate_nondiffractive(beam, x), reconstruct_from_momentum(beam, x)));
  }
  return {{"max|psi_closed-psi_phi_integral|", worst, 1e-8}};
}

Measurements check_closed_vs_quadrature(Suite suite) {
  const GaussianSpectrum f(1.0);
  const double z0 = f.rayleigh_range(kK);
  std::vector<double> radii{0.5, 1.0, 3.0, 5.0};
  std::vector<double> heights{0.0, 0.25 * z0, z0};
  if (suite == Suite::Fast) {
    radii = {1.0, 5.0};
    heights = {0.0, z0};
  }
  SpectralOptions paraxial;
  paraxial.paraxial_phase = true;
  double worst = 0.0;
  for (int n = 0; n <= 2; ++n) {
    for (double r : radii) {
      for (double z : heights) {
        const cplx closed = evaluate_F(n, r, z, f, kK, Method::ParaxialClosedForm);
        const cplx quad = evaluate_F(n, r, z, f, kK, Method::Quadrature, paraxial);
        worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
      }
    }
  }
  return {{"max rel|F_closed-F_quad|", worst, 1e-6}};
}

Measurements check_closed_vs_spinor(Suite suite) {
  const int n = suite == Suite::Full ? 500 : 100;
  Rng rng(5);
  Measurements out;
  for (Family f : kFamilies) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [beam, x] = random_sample(f, rng);
      worst = std::max(worst, pol_distance(closed_form_pol(beam, x), spin_polarization(evaluate(beam, x), x)));
    }
    out.push_back({std::string("max|s_closed-s_spinor| ") + family_name(f), worst, 1e-10});
  }
  return out;
}

Measurements check_axis_law(Suite) {
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int twice : {1, 3, 5, -1, -3}) {
      for (int sigma : {1, -1}) {
        for (double z : {0.0, 30.0}) {
          const BeamSpec beam = make_beam(f, HalfInt::from_twice(twice), sigma);
          const double expected = twice > 0 ? 1.0 : -1.0;
          // |j| = 1/2 is evaluated on the axis; otherwise both components
          // vanish there and the value is the limit approached at r = 1e-7.
          const CylPoint x(std::abs(twice) == 1 ? 0.0 : 1e-7, 0.0, z);
          worst = std::max(worst, std::abs(spin_polarization(evaluate(beam, x), x).s_z - expected));
          worst = std::max(worst, std::abs(closed_form_pol(beam, CylPoint(0.0, 0.0, z)).s_z - expected));
        }
      }
    }
  }
  return {{"max|s_z(0)-sign(j)|", worst, 1e-12}};
}

Measurements check_spin_expectation(Suite suite) {
  double worst = 0.0;
  for (int twice : {1, -1, 3}) {
    for (int sigma : {1, -1}) {
      const auto s = spin_expectation(make_beam(Family::FiniteRadial, HalfInt::from_twice(twice), sigma), 0.0);
      worst = std::max({worst, std::abs(s[0]), std::abs(s[1]), std::abs(s[2])});
    }
  }
  Measurements out{{"max|<sigma>| closed form", worst, 1e-8}};
  if (suite == Suite::Full) {
    double worst_quad = 0.0;
    for (int twice : {1, -1, 3}) {
      const auto beam = make_beam(Family::FiniteRadial, HalfInt::from_twice(twice), 1, Method::Quadrature);
      worst_quad = std::max(worst_quad, std::abs(spin_expectation(beam, 0.0)[2]));
    }
    out.push_back({"max|<sigma>| quadrature", worst_quad, 1e-8});
  }
  return out;
}

Measurements check_nondiffraction(Suite suite) {
  const int n = suite == Suite::Full ? 200 : 50;
  Rng rng(8);
  double worst_rho = 0.0;
  double worst_s = 0.0;
  for (int i = 0; i < n; ++i) {
    const Family f = i % 2 == 0 ? Family::BesselRadial : Family::BesselAzimuthal;
    const BeamSpec beam = make_beam(f, j_from(rng, {-3, -1, 1, 3}), sigma_from(rng));
    const double r = uniform(rng, 1e-3, 10.0);
    const double phi = uniform(rng, 0.0, 2 * kPi);
    const CylPoint base(r, phi, 0.0);
    const Spinor psi0 = evaluate(beam, base);
    const auto s0 = spin_polarization(psi0, base);
    for (double kz : {1.0, 10.0, 100.0}) {
      const CylPoint x(r, phi, kz / beam.k());
      const Spinor psi = evaluate(beam, x);
      worst_rho = std::max(worst_rho, std::abs(probability_density(psi) - probability_density(psi0)));
      worst_s = std::max(worst_s, pol_distance(spin_polarization(psi, x), s0));
    }
  }
  return {{"max|rho(z)-rho(0)|", worst_rho, 1e-12}, {"max|s(z)-s(0)|", worst_s, 1e-12}};
}

Measurements check_jz(Suite suite) {
  const int per_family = suite == Suite::Full ? 20 : 5;
  Rng rng(9);
  const double h = 1e-2;
  double worst = 0.0;
  for (Family f : kFamilies) {
    for (int i = 0; i < per_family; ++i) {
      const auto [beam, x] = random_sample(f, rng);
      auto at = [&](double dphi) { return evaluate(beam, CylPoint(x.r(), x.phi() + dphi, x.z())); };
      const Spinor s0 = at(0.0), m2 = at(-2 * h), m1 = at(-h), p1 = at(h), p2 = at(2 * h);
      auto derivative = [&](cplx Spinor::*c) {
        return (-(p2.*c) + 8.0 * (p1.*c) - 8.0 * (m1.*c) + (m2.*c)) / (12.0 * h);
      };
      const cplx minus_i{0.0, -1.0};
      const double j = beam.j().value();
      const Spinor residual{minus_i * derivative(&Spinor::up) + 0.5 * s0.up - j * s0.up,
                            minus_i * derivative(&Spinor::down) - 0.5 * s0.down - j * s0.down};
      const double size = std::sqrt(probability_density(s0));
      worst = std::max(worst, std::sqrt(probability_density(residual)) / size);
    }
  }
  return {{"max||(J_z-j)psi||/||psi||", worst, 1e-6}};
}

Measurements check_bessel(Suite suite) {
  const double zero = specfun::bessel_j_zero(0, 1);
  Rng rng(10);
  const int n = suite == Suite::Full ? 2000 : 400;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx z = std::polar(uniform(rng, 0.05, 60.0), uniform(rng, -kPi / 4, kPi / 4));
    const HalfInt nu = HalfInt::from_twice(static_cast<int>(rng() % 8) + 1);
    const cplx lo = specfun::bessel_i_scaled(nu - HalfInt::integer(1), z);
    const cplx mid = specfun::bessel_i_scaled(nu, z);
    const cplx hi = specfun::bessel_i_scaled(nu + HalfInt::integer(1), z);
    const cplx residual = lo - hi - (2.0 * nu.value() / z) * mid;
    worst = std::max(worst, std::abs(residual) / (std::abs(lo) + std::abs(hi)));
  }
  return {
      {"|j01-2.4048|", std::abs(zero - 2.4048), 5e-5},
      {"|j01-2.404825557695773|", std::abs(zero - 2.404825557695773), 1e-9},
      {"max rel I recurrence residual", worst, 1e-9},
  };
}

Measurements check_transversality(Suite suite) {
  const int n = suite == Suite::Full ? 500 : 100;
  Rng rng(11);
  double worst_r = 0.0;
  double worst_phi = 0.0;
  for (int i = 0; i < n; ++i) {
    const BeamSpec az = make_beam(Family::BesselAzimuthal, j_from(rng, {-3, -1, 1, 3}), sigma_from(rng));
    const CylPoint x(uniform(rng, 1e-3, 10.0), uniform(rng, 0.0, 2 * kPi), uniform(rng, -10.0, 10.0));
    worst_r = std::max(worst_r, std::abs(spin_polarization(evaluate(az, x), x).s_r));

    const Method method = i % 2 == 0 ? Method::ParaxialClosedForm : Method::Quadrature;
    const BeamSpec rad = make_beam(Family::FiniteRadial, j_from(rng, {-3, -1, 1, 3}), sigma_from(rng), method);
    const CylPoint w(uniform(rng, 1e-3, 5.0), uniform(rng, 0.0, 2 * kPi), 0.0);
    worst_phi = std::max(worst_phi, std::abs(spin_polarization(evaluate(rad, w), w).s_phi));
  }
  return {{"max|s_r| bessel azimuthal", worst_r, 1e-12}, {"max|s_phi| finite radial z=0", worst_phi, 1e-10}};
}

Measurements check_asymptote(Suite) {
  Measurements out;
  for (int twice : {1, 3, 5}) {
    const double j = 0.5 * twice;
    const auto report = charge_boundary(make_beam(Family::FiniteRadial, HalfInt::from_twice(twice), 1), 0.0);
    out.push_back({"|s_z(inf)+j/(j^2+1/4)| j=" + HalfInt::from_twice(twice).str(),
                   std::abs(report.s_z_infinity + j / (j * j + 0.25)), 2e-3});
  }
  return out;
}

struct CheckDef {
  const char* name;
  Measurements (*run)(Suite);
  double time_limit;
};

constexpr CheckDef kChecks[] = {
    {"topological charge", check_charge, 5.0},
    {"unit polarization", check_unit_norm, 10.0},
    {"bessel beam vs phi-integral reconstruction", check_reconstruction, 30.0},
    {"F closed form vs paraxial quadrature", check_closed_vs_quadrature, 60.0},
    {"closed-form vs spinor polarization", check_closed_vs_spinor, 0.0},
    {"axis law", check_axis_law, 0.0},
    {"vanishing spin expectation", check_spin_expectation, 0.0},
    {"non-diffraction", check_nondiffraction, 0.0},
    {"J_z eigenstate", check_jz, 0.0},
    {"Bessel anchors", check_bessel, 0.0},
    {"transversality", check_transversality, 0.0},
    {"large-r asymptote", check_asymptote, 0.0},
};

}  // namespace

bool CheckResult::passed() const {
  if (!error.empty()) return false;
  if (time_limit > 0.0 && seconds >= time_limit) return false;
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.ok(); });
}

std::vector<CheckResult> run_acceptance(Suite suite, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  int id = 0;
  for (const auto& def : kChecks) {
    CheckResult result;
    result.id = ++id;
    result.name = def.name;
    result.time_limit = def.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      result.measurements = def.run(suite);
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

void print_result(std::ostream& out, const CheckResult& result) {
  char buffer[64];
  out << (result.passed() ? "PASS" : "FAIL") << "  " << result.id << "  " << result.name << "  ";
  if (!result.error.empty()) out << "error: " << result.error << "; ";
  for (std::size_t i = 0; i < result.measurements.size(); ++i) {
    const auto& m = result.measurements[i];
    std::snprintf(buffer, sizeof buffer, "%.3g %s %.3g", m.value, m.ok() ? "<=" : ">", m.bound);
    out << (i ? "; " : "") << m.label << " = " << buffer;
  }
  std::snprintf(buffer, sizeof buffer, "  (%.2f s", result.seconds);
  out << buffer;
  if (result.time_limit > 0.0) {
    std::snprintf(buffer, sizeof buffer, ", limit %.0f s", result.time_limit);
    out << buffer;
  }
  out << ")\n";
}

}  // namespace spinbeam
