#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frogdrift/intensity.hpp"
#include "frogdrift/model_params.hpp"

namespace frogdrift::criteria {

enum class Classification { Divergent, Convergent, Inconclusive };
enum class ModelStatus { Transient, NonTransient, Unknown };
enum class CriterionVariant { Standard, Remark6 };

std::string to_string(Classification c);
std::string to_string(ModelStatus s);
std::string to_string(CriterionVariant v);

/// Doubling-horizon schedule for divergence classification.
struct ClassifySchedule {
  double initial_horizon = 16.0;  // T0 (continuous) or J0 (discrete)
  int doublings = 48;
  double divergence_floor = 1e-3;   // delta
  double convergence_ratio = 0.75;  // r, geometric-tail acceptance
};

ClassifySchedule default_continuous_schedule();
ClassifySchedule default_discrete_schedule();

struct CriterionReport {
  std::vector<std::pair<double, double>> checkpoints;  // (horizon, partial value)
  std::vector<double> increments;
  Classification classification = Classification::Inconclusive;
  ModelStatus implied_status = ModelStatus::Unknown;
  CriterionVariant variant = CriterionVariant::Standard;
};

/// Mean number of births before time t whose particle is still alive at t:
/// int_0^t f(u) e^{-(t-u)} du.
double surviving_birth_mean(const Intensity& f, double t, double rel_tol = 1e-9);

/// Poisson immigration mean of the non-absorbing chain at step j:
/// sum_{i=1}^{j-1} rho^{j-i} f(i), evaluated by the stable forward recurrence.
double immigration_mean(const Intensity& f, const DiscreteParams& params, long long j);

/// e^{-f(t)/(2 lambda)} f(t), or the Remark-6 form e^{-f(t)/(2 lambda)} (1 + f(t)).
double criterion_integrand(const Intensity& f, double lambda, double t,
                           CriterionVariant variant = CriterionVariant::Standard);

/// int_0^T of the criterion integrand, split at the breakpoints of f.
double criterion_partial_integral(const Intensity& f, double lambda, double T,
                                  double rel_tol = 1e-9,
                                  CriterionVariant variant = CriterionVariant::Standard);

/// sum_{j=1}^{J} exp(-(1-p)/(2p-1) f(j)).
double criterion_partial_sum(const Intensity& f, const DiscreteParams& params, long long J);

/// Classify divergence of a nondecreasing partial function sampled on
/// doubling horizons.  partial(h) must be nondecreasing in h.
CriterionReport classify(const std::function<double(double)>& partial,
                         const ClassifySchedule& schedule,
                         CriterionVariant variant = CriterionVariant::Standard);

/// E[number of 0->1 jumps on [0, T]] for the non-absorbing birth-death
/// process with half drift: int_0^T e^{-lambda_t} (1 - e^{-t}) f(t) dt.
/// Callers with lambda != 1/2 rescale f first.
double expected_zero_upjumps(const Intensity& f, double T, double rel_tol = 1e-9);

/// E[number of zeros up to J] of the non-absorbing chain:
/// sum_{j=1}^{J} e^{-tau_j} (1 - rho^j).
double expected_zero_visits(const Intensity& f, const DiscreteParams& params, long long J);

/// Mean number of distinct left-side frogs that ever hit the origin.  The
/// left intensity is given as a function of distance s = |x| from the
/// origin.  Continuous: int_0^inf e^{-2 lambda s} g(s) ds; discrete:
/// sum_{j>=1} rho^j g(j).  Returns +inf when the tail keeps growing.
double left_side_mean(const Intensity& g_of_distance, const ModelParams& params,
                      double rel_tol = 1e-10);

/// Tail-doubling evaluator behind left_side_mean; exposed for tests.
/// partial(T) must be nondecreasing.  Doubles T until the increment falls
/// below rel_tol or max_doublings is hit (then +inf).
double improper_limit(const std::function<double(double)>& partial, double initial_horizon,
                      double rel_tol, int max_doublings);

}  // namespace frogdrift::criteria
