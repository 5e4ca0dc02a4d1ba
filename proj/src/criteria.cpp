#include "frogdrift/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frogdrift/quadrature.hpp"

namespace frogdrift::criteria {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_continuous(const Intensity& f, const char* op) {
  if (f.domain() != Domain::Continuous)
    throw std::invalid_argument(std::string(op) + " requires a continuous-domain intensity");
}

// Panel seeds: breakpoints of f plus a geometric ladder, so huge smooth
// spans cannot fool the rough pass of the adaptive rule.
std::vector<double> ladder_up(const Intensity& f, double lo, double hi) {
  std::vector<double> pts = f.breakpoints_in(lo, hi);
  for (double x = 1.0; x < hi; x *= 2.0)
    if (x > lo) pts.push_back(x);
  return pts;
}

std::vector<double> ladder_down_from(const Intensity& f, double t) {
  std::vector<double> pts = f.breakpoints_in(0.0, t);
  for (double d = 1.0; d < t; d *= 2.0) pts.push_back(t - d);
  return pts;
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Divergent: return "divergent";
    case Classification::Convergent: return "convergent";
    default: return "inconclusive";
  }
}

std::string to_string(ModelStatus s) {
  switch (s) {
    case ModelStatus::Transient: return "transient";
    case ModelStatus::NonTransient: return "non-transient";
    default: return "unknown";
  }
}

std::string to_string(CriterionVariant v) {
  return v == CriterionVariant::Standard ? "standard" : "remark6";
}

ClassifySchedule default_continuous_schedule() { return ClassifySchedule{16.0, 48, 1e-3, 0.75}; }

// Discrete partial sums cost O(J), which caps the horizon ladder.
ClassifySchedule default_discrete_schedule() { return ClassifySchedule{16.0, 20, 1e-3, 0.75}; }

double surviving_birth_mean(const Intensity& f, double t, double rel_tol) {
  require_continuous(f, "surviving_birth_mean");
  if (!(t >= 0.0)) throw std::invalid_argument("surviving_birth_mean requires t >= 0");
  if (t == 0.0) return 0.0;
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return integrate([&](double u) { return f(u) * std::exp(u - t); }, 0.0, t, opts,
                   ladder_down_from(f, t));
}

double immigration_mean(const Intensity& f, const DiscreteParams& params, long long j) {
  if (j < 1) throw std::invalid_argument("immigration_mean requires j >= 1");
  const double rho = params.rho();
  double tau = 0.0;  // tau_1 = 0
  for (long long i = 1; i < j; ++i) tau = rho * (tau + f(static_cast<double>(i)));
  return tau;
}

double criterion_integrand(const Intensity& f, double lambda, double t, CriterionVariant variant) {
  if (!(lambda > 0.0)) throw std::invalid_argument("criterion integrand requires lambda > 0");
  const double ft = f(t);
  const double decay = std::exp(-ft / (2.0 * lambda));
  return variant == CriterionVariant::Standard ? decay * ft : decay * (1.0 + ft);
}

double criterion_partial_integral(const Intensity& f, double lambda, double T, double rel_tol,
                                  CriterionVariant variant) {
  require_continuous(f, "criterion_partial_integral");
  if (!(T >= 0.0)) throw std::invalid_argument("partial integral requires T >= 0");
  if (T == 0.0) return 0.0;
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return integrate([&](double t) { return criterion_integrand(f, lambda, t, variant); }, 0.0, T,
                   opts, ladder_up(f, 0.0, T));
}

double criterion_partial_sum(const Intensity& f, const DiscreteParams& params, long long J) {
  if (J < 1) throw std::invalid_argument("partial sum requires J >= 1");
  const double coeff = params.decay_coefficient();
  double sum = 0.0;
  for (long long j = 1; j <= J; ++j) sum += std::exp(-coeff * f(static_cast<double>(j)));
  return sum;
}

namespace {

// Least-squares slope/intercept of y against x.
struct LineFit {
  double slope = 0.0, intercept = 0.0, sse = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit out;
  out.slope = sxx > 0 ? sxy / sxx : 0.0;
  out.intercept = my - out.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (out.intercept + out.slope * x[i]);
    out.sse += r * r;
  }
  return out;
}

// Tail-fit tuning.  The window in log-horizon coordinates distinguishes a
// geometrically decaying tail (exponential in u = log T) from a power-law
// tail (polynomial in u); the thresholds put an honest inconclusive band
// around each boundary.
constexpr double kSaturationFactor = 1e-3;   // x delta: increments numerically gone
constexpr double kNonDecreasingTol = 1e-3;   // ratios >= 1 - tol count as non-decreasing
constexpr double kTailFraction = 2.0 / 3.0;  // fit window share of the increments
constexpr int kMinFitPoints = 5;
constexpr double kExpRateMin = 0.03;     // |b| below this is too close to critical
constexpr double kPowerDivergent = -1.22;   // fitted u-exponent above this: tail not summable
constexpr double kPowerConvergent = -1.30;  // fitted u-exponent below this: tail summable

}  // namespace

CriterionReport classify(const std::function<double(double)>& partial,
                         const ClassifySchedule& schedule, CriterionVariant variant) {
  if (!(schedule.initial_horizon > 0.0) || schedule.doublings < 4 ||
      !(schedule.divergence_floor > 0.0) || !(schedule.convergence_ratio > 0.0) ||
      !(schedule.convergence_ratio < 1.0))
    throw std::invalid_argument("classify: invalid schedule");

  CriterionReport rep;
  rep.variant = variant;
  const int K = schedule.doublings;
  double horizon = schedule.initial_horizon;
  for (int k = 0; k <= K; ++k) {
    rep.checkpoints.emplace_back(horizon, partial(horizon));
    horizon *= 2.0;
  }
  for (int k = 0; k < K; ++k)
    rep.increments.push_back(std::max(0.0, rep.checkpoints[k + 1].second - rep.checkpoints[k].second));

  const auto& d = rep.increments;
  const double delta = schedule.divergence_floor;

  const auto classify_as = [&](Classification c) {
    rep.classification = c;
    rep.implied_status = c == Classification::Divergent    ? ModelStatus::Transient
                         : c == Classification::Convergent ? ModelStatus::NonTransient
                                                           : ModelStatus::Unknown;
    return rep;
  };

  // saturated: the partial value has numerically stopped moving
  bool saturated = true;
  for (int k = K - 3; k < K; ++k) saturated = saturated && d[k] < delta * kSaturationFactor;
  if (saturated) return classify_as(Classification::Convergent);

  bool have_ratios = true;
  double ratios[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const double prev = d[K - 4 + i], next = d[K - 3 + i];
    if (prev <= 0.0) have_ratios = false;
    else ratios[i] = next / prev;
  }
  if (have_ratios) {
    // geometric tail: remaining mass is a controlled geometric series
    if (ratios[0] <= schedule.convergence_ratio && ratios[1] <= schedule.convergence_ratio &&
        ratios[2] <= schedule.convergence_ratio)
      return classify_as(Classification::Convergent);
    // increments not decaying at all and still above the floor
    const bool non_decreasing = ratios[0] >= 1.0 - kNonDecreasingTol &&
                                ratios[1] >= 1.0 - kNonDecreasingTol &&
                                ratios[2] >= 1.0 - kNonDecreasingTol;
    const bool above_floor = d[K - 3] >= delta && d[K - 2] >= delta && d[K - 1] >= delta;
    if (non_decreasing && above_floor) return classify_as(Classification::Divergent);
  }

  // Tail model fit in u = log(horizon): log d ~ c - b*u (geometric in T)
  // versus log d ~ c + a*log u (power law in u).
  std::vector<double> us, lus, ys;
  const int window_start = K - std::max(kMinFitPoints, static_cast<int>(std::ceil(K * kTailFraction)));
  for (int k = std::max(0, window_start); k < K; ++k) {
    if (d[k] <= 1e-300) continue;
    const double u = std::log(rep.checkpoints[k].first);
    us.push_back(u);
    lus.push_back(std::log(u));
    ys.push_back(std::log(d[k]));
  }
  if (static_cast<int>(ys.size()) < kMinFitPoints)
    return classify_as(Classification::Inconclusive);

  const LineFit exp_fit = fit_line(us, ys);
  const LineFit pow_fit = fit_line(lus, ys);
  if (exp_fit.sse <= pow_fit.sse) {
    const double b = -exp_fit.slope;
    if (b >= kExpRateMin) return classify_as(Classification::Convergent);
    if (b <= -kExpRateMin) return classify_as(Classification::Divergent);
    return classify_as(Classification::Inconclusive);
  }
  const double a = pow_fit.slope;
  if (a <= kPowerConvergent) return classify_as(Classification::Convergent);
  if (a >= kPowerDivergent) return classify_as(Classification::Divergent);
  return classify_as(Classification::Inconclusive);
}

double expected_zero_upjumps(const Intensity& f, double T, double rel_tol) {
  require_continuous(f, "expected_zero_upjumps");
  if (!(T >= 0.0)) throw std::invalid_argument("expected_zero_upjumps requires T >= 0");
  if (T == 0.0) return 0.0;
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  const double inner_tol = std::max(rel_tol * 0.1, 1e-12);
  return integrate(
      [&](double t) {
        const double lt = surviving_birth_mean(f, t, inner_tol);
        return std::exp(-lt) * (1.0 - std::exp(-t)) * f(t);
      },
      0.0, T, opts, ladder_up(f, 0.0, T));
}

double expected_zero_visits(const Intensity& f, const DiscreteParams& params, long long J) {
  if (J < 1) throw std::invalid_argument("expected_zero_visits requires J >= 1");
  const double rho = params.rho();
  double tau = 0.0;
  double rho_pow = 1.0;
  double total = 0.0;
  for (long long j = 1; j <= J; ++j) {
    rho_pow *= rho;
    total += std::exp(-tau) * (1.0 - rho_pow);
    tau = rho * (tau + f(static_cast<double>(j)));  // advance to tau_{j+1}
  }
  return total;
}

double improper_limit(const std::function<double(double)>& partial, double initial_horizon,
                      double rel_tol, int max_doublings) {
  double T = initial_horizon;
  double value = partial(T);
  for (int k = 0; k < max_doublings; ++k) {
    T *= 2.0;
    const double next = partial(T);
    const double inc = next - value;
    value = next;
    if (inc < rel_tol) return value;
  }
  return kInf;
}

double left_side_mean(const Intensity& g, const ModelParams& params, double rel_tol) {
  if (const auto* c = std::get_if<ContinuousParams>(&params)) {
    require_continuous(g, "left_side_mean");
    const double two_lambda = c->drift_factor();
    double done = 0.0;  // incremental: integral over [0, T_prev]
    double prev = 0.0;
    auto partial = [&](double T) {
      QuadratureOptions opts;
      opts.rel_tol = 1e-10;
      done += integrate([&](double s) { return std::exp(-two_lambda * s) * g(s); }, prev, T, opts,
                        g.breakpoints_in(prev, T));
      prev = T;
      return done;
    };
    return improper_limit(partial, 16.0, rel_tol, 60);
  }
  const auto& dp = std::get<DiscreteParams>(params);
  const double rho = dp.rho();
  double sum = 0.0;
  long long prev = 0;
  auto partial = [&](double Jd) {
    const long long J = static_cast<long long>(Jd);
    double rho_pow = std::pow(rho, static_cast<double>(prev));
    for (long long j = prev + 1; j <= J; ++j) {
      rho_pow *= rho;
      sum += rho_pow * g(static_cast<double>(j));
    }
    prev = J;
    return sum;
  };
  return improper_limit(partial, 16.0, rel_tol, 40);
}

}  // namespace frogdrift::criteria
