#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace spinbeam {

enum class Suite { Fast, Full };

/// One measured quantity of a check and the bound it must stay within.
struct Measurement {
  std::string label;
  double value;
  double bound;

  bool ok() const { return value <= bound; }
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::vector<Measurement> measurements;
  double seconds = 0.0;
  /// Zero means no limit.
  double time_limit = 0.0;
  /// Set when the check threw instead of producing measurements.
  std::string error;

  bool passed() const;
};

/// Runs the acceptance checks in order, reporting each as soon as it finishes.
/// Fast uses smaller random samples and a reduced oracle grid; Full uses the
/// complete sample counts and parameter grids.
std::vector<CheckResult> run_acceptance(Suite suite,
                                        const std::function<void(const CheckResult&)>& on_result = {});

/// "PASS  3  name  label=value <= bound; ...  (0.12 s)"
void print_result(std::ostream& out, const CheckResult& result);

}  // namespace spinbeam
