#pragma once

#include <string>

#include "spinbeam/config.hpp"
#include "spinbeam/output.hpp"
#include "spinbeam/topology.hpp"

namespace spinbeam {

/// A table plus the number of grid points whose evaluation failed (those rows
/// are emitted with every value column undefined).
struct CommandResult {
  Table table;
  int failures = 0;
  std::string first_failure;
};

/// One row per grid point in (z, r, phi) order with columns
/// r,phi,z,re_up,im_up,re_dn,im_dn,rho,s_r,s_phi,s_z,s_x,s_y.
CommandResult run_field(const RunConfig& config);

/// Radial cut at phi = 0: r,s_r,s_phi,s_z,rho. Needs n_phi == 1 and at most
/// one z value.
CommandResult run_profile(const RunConfig& config);

/// ChargeReport of the configured beam at config.charge.z.
ChargeReport run_charge(const RunConfig& config);
Table charge_table(const ChargeReport& report);

/// Vector-field samples r,phi,s_x,s_y,s_z on a polar grid for figure `which`
/// ("fig1" or "fig2") and variant "a".."d" ("a", "b" for fig2). The axis is
/// sampled once, at phi = 0.
CommandResult run_figure(const std::string& which, const std::string& variant, int n_r = 13,
                         int n_phi = 16);

}  // namespace spinbeam
