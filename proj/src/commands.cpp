#include "spinbeam/commands.hpp"

#include <numbers>
#include <utility>

#include "spinbeam/error.hpp"
#include "spinbeam/polarization.hpp"
#include "spinbeam/specfun.hpp"

namespace spinbeam {

namespace {

using Cell = std::optional<double>;

const BeamSpec& require_beam(const RunConfig& config) {
  if (!config.beam) throw Error(ErrorKind::InvalidSpec, "beam: missing");
  return *config.beam;
}

std::optional<PolarizationVector> try_polarization(const Spinor& psi, const CylPoint& x) {
  try {
    return spin_polarization(psi, x);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UndefinedPolarization) throw;
    return std::nullopt;
  }
}

void note_failure(CommandResult& result, const std::string& where, const Error& e) {
  if (result.failures++ == 0) result.first_failure = where + ": " + e.what();
}

std::string point_label(double r, double phi, double z) {
  return "r=" + format_number(r) + " phi=" + format_number(phi) + " z=" + format_number(z);
}

}  // namespace

CommandResult run_field(const RunConfig& config) {
  const BeamSpec& beam = require_beam(config);
  const GridSpec& grid = config.grid;
  const Outputs& want = config.outputs;

  CommandResult result;
  result.table.columns = {"r", "phi", "z", "re_up", "im_up", "re_dn", "im_dn", "rho",
                          "s_r", "s_phi", "s_z", "s_x", "s_y"};
  for (double z : grid.z_values) {
    for (int i = 0; i < grid.n_r; ++i) {
      for (int p = 0; p < grid.n_phi; ++p) {
        const double r = grid.r_at(i);
        const double phi = grid.phi_at(p);
        std::vector<Cell> row(result.table.columns.size());
        row[0] = r;
        row[1] = phi;
        row[2] = z;
        try {
          const CylPoint x(r, phi, z);
          const Spinor psi = evaluate(beam, x);
          if (want.wavefunction) {
            row[3] = psi.up.real();
            row[4] = psi.up.imag();
            row[5] = psi.down.real();
            row[6] = psi.down.imag();
          }
          if (want.density) row[7] = probability_density(psi);
          if (want.polarization) {
            if (const auto s = try_polarization(psi, x)) {
              row[8] = s->s_r;
              row[9] = s->s_phi;
              row[10] = s->s_z;
              row[11] = s->s_x;
              row[12] = s->s_y;
            }
          }
        } catch (const Error& e) {
          for (std::size_t c = 3; c < row.size(); ++c) row[c].reset();
          note_failure(result, point_label(r, phi, z), e);
        }
        result.table.rows.push_back(std::move(row));
      }
    }
  }
  return result;
}

CommandResult run_profile(const RunConfig& config) {
  const BeamSpec& beam = require_beam(config);
  const GridSpec& grid = config.grid;
  if (grid.n_phi != 1) throw Error(ErrorKind::InvalidSpec, "grid.n_phi: profile needs n_phi = 1");
  if (grid.z_values.size() > 1) throw Error(ErrorKind::InvalidSpec, "grid.z_values: profile takes at most one z");

  CommandResult result;
  result.table.columns = {"r", "s_r", "s_phi", "s_z", "rho"};
  for (double z : grid.z_values) {
    for (int i = 0; i < grid.n_r; ++i) {
      const double r = grid.r_at(i);
      std::vector<Cell> row(result.table.columns.size());
      row[0] = r;
      try {
        const CylPoint x(r, 0.0, z);
        const Spinor psi = evaluate(beam, x);
        row[4] = probability_density(psi);
        if (const auto s = try_polarization(psi, x)) {
          row[1] = s->s_r;
          row[2] = s->s_phi;
          row[3] = s->s_z;
        }
      } catch (const Error& e) {
        for (std::size_t c = 1; c < row.size(); ++c) row[c].reset();
        note_failure(result, point_label(r, 0.0, z), e);
      }
      result.table.rows.push_back(std::move(row));
    }
  }
  return result;
}

ChargeReport run_charge(const RunConfig& config) {
  const BeamSpec& beam = require_beam(config);
  if (!beam.is_finite() || beam.configuration() != Configuration::Radial) {
    throw Error(ErrorKind::InvalidSpec,
                "beam: topological charge is defined only for finite radial beams");
  }
  const double r_max = config.charge.r_max.value_or(40.0 * beam.finite().spectrum.w0());
  return charge_report(beam, config.charge.z, config.charge.n_r, r_max, config.limit_spread);
}

Table charge_table(const ChargeReport& report) {
  Table table;
  table.columns = {"q_formula", "q_boundary", "q_integral", "s_z_axis", "s_z_infinity", "grid_resolution"};
  table.rows.push_back({report.q_formula, report.q_boundary, report.q_integral, report.s_z_axis,
                        report.s_z_infinity, static_cast<double>(report.grid_resolution)});
  return table;
}

CommandResult run_figure(const std::string& which, const std::string& variant, int n_r, int n_phi) {
  if (n_r < 2 || n_phi < 1) throw Error(ErrorKind::InvalidSpec, "figure: need n_r >= 2 and n_phi >= 1");
  static constexpr std::pair<int, int> kFig1[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const int index = variant.size() == 1 ? variant[0] - 'a' : -1;

  std::optional<BeamSpec> beam;
  double r_end = 0.0;
  if (which == "fig1") {
    if (index < 0 || index > 3) throw Error(ErrorKind::InvalidSpec, "figure: fig1 variants are a, b, c, d");
    const auto [twice_j, sigma] = kFig1[index];
    // kappa = 1, so r runs to the first zero of J_0.
    beam.emplace(Configuration::Radial, HalfInt::from_twice(twice_j), sigma, 2.0, NonDiffractive{1.0});
    r_end = specfun::bessel_j_zero(0, 1);
  } else if (which == "fig2") {
    if (index < 0 || index > 1) throw Error(ErrorKind::InvalidSpec, "figure: fig2 variants are a, b");
    beam.emplace(Configuration::Radial, HalfInt::from_twice(1), index == 0 ? 1 : -1, 100.0,
                 Finite{GaussianSpectrum(1.0), Method::ParaxialClosedForm, false});
    r_end = 3.36;
  } else {
    throw Error(ErrorKind::InvalidSpec, "figure: expected fig1 or fig2");
  }

  CommandResult result;
  result.table.columns = {"r", "phi", "s_x", "s_y", "s_z"};
  for (int i = 0; i < n_r; ++i) {
    const double r = r_end * i / (n_r - 1);
    for (int p = 0; p < (i == 0 ? 1 : n_phi); ++p) {
      const double phi = 2.0 * std::numbers::pi * p / n_phi;
      std::vector<Cell> row{r, phi, std::nullopt, std::nullopt, std::nullopt};
      try {
        const CylPoint x(r, phi, 0.0);
        if (const auto s = try_polarization(evaluate(*beam, x), x)) {
          row[2] = s->s_x;
          row[3] = s->s_y;
          row[4] = s->s_z;
        }
      } catch (const Error& e) {
        note_failure(result, point_label(r, phi, 0.0), e);
      }
      result.table.rows.push_back(std::move(row));
    }
  }
  return result;
}

}  // namespace spinbeam
