#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinbeam/beams.hpp"
#include "spinbeam/topology.hpp"

namespace spinbeam {

enum class Format { Csv, Json };

/// Sample points uniform in r over [r_min, r_max] and in phi over [0, 2 pi).
struct GridSpec {
  double r_min = 0.0;
  double r_max = 1.0;
  int n_r = 1;
  int n_phi = 1;
  std::vector<double> z_values{0.0};

  /// r_i = r_min + i (r_max - r_min) / (n_r - 1); a single sample sits at r_min.
  double r_at(int i) const;
  double phi_at(int i) const;
};

struct ChargeSettings {
  double z = 0.0;
  int n_r = 4000;
  /// Absolute radius; unset means 40 w0.
  std::optional<double> r_max;
};

struct Outputs {
  bool wavefunction = true;
  bool density = true;
  bool polarization = true;
};

struct RunConfig {
  std::optional<BeamSpec> beam;
  GridSpec grid;
  Outputs outputs;
  std::optional<Format> format;
  double limit_spread = kLimitSpread;
  ChargeSettings charge;
};

/// Parses a JSON run configuration. Every problem is reported as an
/// InvalidSpec error whose message starts with the offending field.
RunConfig parse_config(const std::string& text);

/// Reads the file at `path` ("-" for stdin) and parses it.
RunConfig load_config(const std::string& path);

Format parse_format(const std::string& name);

}  // namespace spinbeam
