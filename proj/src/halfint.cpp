#include "spinbeam/halfint.hpp"

#include <charconv>
#include <cmath>

#include "spinbeam/error.hpp"

namespace spinbeam {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(as_int());
  return std::to_string(twice_) + "/2";
}

namespace {

bool parse_int(std::string_view text, int& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

}  // namespace

HalfInt HalfInt::parse(const std::string& text) {
  const auto slash = text.find('/');
  int value = 0;
  if (slash != std::string::npos) {
    std::string_view view(text);
    if (view.substr(slash + 1) == "2" && parse_int(view.substr(0, slash), value)) {
      return from_twice(value);
    }
  } else if (parse_int(text, value)) {
    return integer(value);
  } else {
    try {
      std::size_t used = 0;
      const double d = std::stod(text, &used);
      const double twice = 2.0 * d;
      if (used == text.size() && std::isfinite(d) && twice == std::round(twice) &&
          std::abs(twice) < 1e9) {
        return from_twice(static_cast<int>(twice));
      }
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::Domain, "not a half-integer: '" + text + "'");
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::UnsupportedOrder: return "unsupported-order";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::InvalidSigma: return "invalid-sigma";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::Convergence: return "convergence-failure";
    case ErrorKind::Integrand: return "integrand";
    case ErrorKind::UndefinedPolarization: return "undefined-polarization";
    case ErrorKind::IllConvergedLimit: return "ill-converged-limit";
    case ErrorKind::Sampling: return "sampling";
  }
  return "unknown";
}

}  // namespace spinbeam
