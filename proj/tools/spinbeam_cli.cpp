#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "spinbeam/commands.hpp"
#include "spinbeam/error.hpp"
#include "spinbeam/verify.hpp"

using namespace spinbeam;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string config_path;
  std::string format;
  std::string out_path;
};

RunConfig load(const Flags& flags, bool required) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    config = load_config(flags.config_path);
  } else if (required) {
    throw UsageError("--config is required for this command");
  }
  if (!flags.format.empty()) config.format = parse_format(flags.format);
  return config;
}

void emit(const Flags& flags, const std::string& content) {
  if (flags.out_path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(flags.out_path, std::ios::binary);
  if (!out) throw UsageError("--out: cannot write " + flags.out_path);
  out << content;
  if (!out.flush()) throw std::runtime_error("--out: write failed for " + flags.out_path);
}

int finish_table(const Flags& flags, const CommandResult& result, Format format) {
  std::ostringstream text;
  write_table(text, result.table, format);
  emit(flags, text.str());
  if (result.failures > 0) {
    std::cerr << "spinbeam: " << result.failures << " point(s) failed to evaluate; first: "
              << result.first_failure << '\n';
    return kFailure;
  }
  return kOk;
}

bool is_usage(ErrorKind kind) {
  return kind == ErrorKind::InvalidSpec || kind == ErrorKind::InvalidSigma || kind == ErrorKind::InvalidOrder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-polarized electron beams: fields, polarization textures and topological charge"};
  app.require_subcommand(1);

  Flags flags;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path, "JSON run configuration (\"-\" for stdin)");
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out_path, "Output file (default stdout)");
  };

  auto* field = app.add_subcommand("field", "Sample the wavefunction, density and polarization on the grid");
  add_common(field);

  auto* profile = app.add_subcommand("profile", "Radial polarization profile at phi = 0");
  add_common(profile);

  std::optional<double> charge_z;
  auto* charge = app.add_subcommand("charge", "Topological charge of a finite radial beam");
  add_common(charge);
  charge->add_option("--z", charge_z, "Propagation distance (overrides charge.z)");

  std::string which;
  std::string variant;
  int fig_n_r = 13;
  int fig_n_phi = 16;
  auto* figure = app.add_subcommand("figure", "Polarization vectors for the reference figures");
  add_common(figure);
  figure->add_option("which", which, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  figure->add_option("variant", variant, "a, b, c or d")->required()->check(CLI::IsMember({"a", "b", "c", "d"}));
  figure->add_option("--n-r", fig_n_r, "Radial samples")->check(CLI::Range(2, 100000));
  figure->add_option("--n-phi", fig_n_phi, "Azimuthal samples per ring")->check(CLI::Range(1, 100000));

  std::string suite = "fast";
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  add_common(verify);
  verify->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (field->parsed()) {
      const RunConfig config = load(flags, true);
      return finish_table(flags, run_field(config), config.format.value_or(Format::Csv));
    }
    if (profile->parsed()) {
      const RunConfig config = load(flags, true);
      return finish_table(flags, run_profile(config), config.format.value_or(Format::Csv));
    }
    if (charge->parsed()) {
      RunConfig config = load(flags, true);
      if (charge_z) config.charge.z = *charge_z;
      const ChargeReport report = run_charge(config);
      CommandResult result;
      result.table = charge_table(report);
      return finish_table(flags, result, config.format.value_or(Format::Json));
    }
    if (figure->parsed()) {
      const RunConfig config = load(flags, false);
      return finish_table(flags, run_figure(which, variant, fig_n_r, fig_n_phi),
                          config.format.value_or(Format::Csv));
    }
    if (verify->parsed()) {
      load(flags, false);
      std::ostringstream report;
      int failed = 0;
      run_acceptance(suite == "full" ? Suite::Full : Suite::Fast, [&](const CheckResult& r) {
        print_result(report, r);
        if (flags.out_path.empty()) {
          std::cout << report.str();
          std::cout.flush();
          report.str("");
        }
        if (!r.passed()) ++failed;
      });
      report << (failed ? std::to_string(failed) + " check(s) failed\n" : std::string("all checks passed\n"));
      emit(flags, report.str());
      return failed ? kFailure : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "spinbeam: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "spinbeam: " << e.what() << '\n';
    return is_usage(e.kind()) ? kUsage : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "spinbeam: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
