#include "spinbeam/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace spinbeam::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool retired;
  int depth;
};

struct WorseFirst {
  const std::vector<Panel>* panels;
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const auto& l = (*panels)[lhs];
    const auto& r = (*panels)[rhs];
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

cplx checked(const Integrand& f, double x) {
  const cplx v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::Integrand,
                "integrand is not finite at x = " + std::to_string(x));
  }
  return v;
}

Panel evaluate_panel(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx mid = checked(f, center);
  cplx kronrod = kKronrodWeights[7] * mid;
  cplx gauss = kGaussWeights[3] * mid;
  double absolute = kKronrodWeights[7] * std::abs(mid);
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const cplx lo = checked(f, center - dx);
    const cplx hi = checked(f, center + dx);
    kronrod += kKronrodWeights[i] * (lo + hi);
    absolute += kKronrodWeights[i] * (std::abs(lo) + std::abs(hi));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  absolute *= std::abs(half);

  const double floor = 20.0 * kEps * absolute;
  double error = std::abs(kronrod - gauss);
  bool retired = false;
  if (error <= floor) {
    error = floor;
    retired = true;
  }
  return Panel{a, b, kronrod, error, retired, depth};
}

QuadResult summarize(std::vector<Panel> panels, long evaluations, double upper) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  QuadResult out;
  for (const auto& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.evaluations = evaluations;
  out.upper_limit = upper;
  return out;
}

}  // namespace

std::vector<double> uniform_breakpoints(double a, double b, double max_width) {
  const double span = b - a;
  const int count = std::max(1, static_cast<int>(std::ceil(span / max_width)));
  std::vector<double> points(count + 1);
  for (int i = 0; i <= count; ++i) points[i] = a + span * i / count;
  points.back() = b;
  return points;
}

QuadResult integrate(const Integrand& f, std::span<const double> breakpoints,
                     const QuadOptions& opts) {
  if (breakpoints.size() < 2) throw Error(ErrorKind::Domain, "integrate: need at least two breakpoints");
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    throw Error(ErrorKind::Domain, "integrate: tolerances must be positive");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) throw Error(ErrorKind::Domain, "integrate: interval must be finite");
    if (i > 0 && breakpoints[i] < breakpoints[i - 1]) {
      throw Error(ErrorKind::Domain, "integrate: breakpoints must be non-decreasing");
    }
  }

  std::vector<Panel> panels;
  long evaluations = 0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] == breakpoints[i - 1]) continue;
    panels.push_back(evaluate_panel(f, breakpoints[i - 1], breakpoints[i], 0));
    evaluations += 15;
  }
  const double upper = breakpoints.back();
  if (panels.empty()) return QuadResult{cplx{}, 0.0, 0, upper};

  std::priority_queue<std::size_t, std::vector<std::size_t>, WorseFirst> queue(
      WorseFirst{&panels});
  cplx total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    total += panels[i].value;
    total_error += panels[i].error;
    if (!panels[i].retired) queue.push(i);
  }

  while (total_error > opts.abs_tol + opts.rel_tol * std::abs(total) && !queue.empty()) {
    const std::size_t worst = queue.top();
    if (panels[worst].depth >= opts.max_depth ||
        static_cast<int>(panels.size()) >= opts.max_panels) {
      throw ConvergenceError("integrate: tolerance not met before subdivision limit",
                             summarize(panels, evaluations, upper));
    }
    queue.pop();
    const Panel parent = panels[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    Panel left = evaluate_panel(f, parent.a, mid, parent.depth + 1);
    Panel right = evaluate_panel(f, mid, parent.b, parent.depth + 1);
    evaluations += 30;
    total += left.value + right.value - parent.value;
    total_error += left.error + right.error - parent.error;

    panels[worst] = left;
    if (!left.retired) queue.push(worst);
    panels.push_back(right);
    if (!right.retired) queue.push(panels.size() - 1);

    // Periodic resummation keeps the running totals free of drift.
    if (panels.size() % 256 == 0) {
      total = {};
      total_error = 0.0;
      for (const auto& p : panels) {
        total += p.value;
        total_error += p.error;
      }
    }
  }
  return summarize(std::move(panels), evaluations, upper);
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
  if (!(a <= b)) throw Error(ErrorKind::Domain, "integrate: require a <= b");
  const std::array<double, 2> ends = {a, b};
  return integrate(f, std::span<const double>(ends), opts);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, double abs_tol,
                                   double decay_scale, const QuadOptions& opts) {
  if (!(decay_scale > 0.0) || !(abs_tol > 0.0)) {
    throw Error(ErrorKind::Domain, "integrate_semi_infinite: decay_scale and abs_tol must be positive");
  }
  // exp(-t^2) < abs_tol / 10
  const double t = std::sqrt(std::max(0.0, -std::log(abs_tol / 10.0)));
  const double upper = a + decay_scale * t;
  QuadOptions local = opts;
  local.abs_tol = abs_tol;
  // Panels of one decay scale so the bulk is resolved from the start.
  const auto points = uniform_breakpoints(a, upper, decay_scale);
  return integrate(f, std::span<const double>(points), local);
}

QuadResult integrate_algebraic_tail(const Integrand& f, double a, double scale,
                                    const QuadOptions& opts) {
  if (!(scale > 0.0)) throw Error(ErrorKind::Domain, "integrate_algebraic_tail: scale must be positive");
  const Integrand mapped = [&](double s) -> cplx {
    if (s <= 0.0) return cplx{};
    const double r = a + scale * (1.0 - s) / s;
    return f(r) * (scale / (s * s));
  };
  QuadResult out = integrate(mapped, 0.0, 1.0, opts);
  out.upper_limit = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace spinbeam::quad
