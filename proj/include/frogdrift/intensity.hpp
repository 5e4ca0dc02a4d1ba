#pragma once

#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace frogdrift {

enum class Domain { Continuous, DiscretePositiveInts };

/// Nonnegative intensity function on [0, inf) (or on the positive integers),
/// represented by exact closed forms plus breakpoint and monotonicity
/// metadata.  Values are immutable after construction; evaluation is pure.
class Intensity {
 public:
  static Intensity constant(double c);
  /// C * log(x + a).  Requires C >= 0 and a >= 1 so the value stays >= 0.
  static Intensity log_family(double C, double a);
  /// C1 * log(x + 1) + C2 * log(log(x + e)).
  static Intensity loglog_family(double C1, double C2);
  /// Continuous counterexample: 1 on [2^n, 2^n + 1) for n >= 1, t elsewhere.
  static Intensity example41();
  /// Discrete counterexample: 1 at j = 2^n for n >= 1, j elsewhere.
  static Intensity example42();
  /// Piecewise-linear interpolation through (breakpoints[i], values[i]),
  /// clamped to the end values outside the node range.
  static Intensity table(std::vector<double> breakpoints, std::vector<double> values);
  /// 0 on [0, r), inner(x - r) on [r, inf).
  static Intensity shifted(Intensity inner, double r);

  /// Pointwise value.  Piecewise branches use the half-open convention
  /// [lo, hi).  Throws std::domain_error outside the domain.
  double operator()(double x) const;

  Domain domain() const { return domain_; }

  /// Point from which the function is nondecreasing (0 for globally
  /// monotone families, +inf when no such point exists).
  double monotone_from() const { return monotone_from_; }

  /// All branch/discontinuity points inside [lo, hi], sorted, deduplicated.
  std::vector<double> breakpoints_in(double lo, double hi) const;

  /// Exact supremum of f over [lo, hi]; used as a thinning majorant.
  double window_sup(double lo, double hi) const;

  /// lim_{x -> b-} f(x), evaluated exactly on the branch left of b.
  double left_limit(double b) const;

  /// f~(x) = f(x / (2 lambda)) / (2 lambda): the intensity whose
  /// half-drift model matches the (f, lambda) model.
  Intensity rescaled_to_half_drift(double lambda) const;

  std::string describe() const;

 private:
  struct Constant {
    double c;
  };
  struct LogFamily {
    double C, a;
  };
  struct LogLogFamily {
    double C1, C2;
  };
  struct Example41Kind {};
  struct Example42Kind {};
  struct LinearTable {
    std::vector<double> xs, vs;
  };
  struct ShiftedKind {
    std::shared_ptr<const Intensity> inner;
    double r;
  };
  struct RescaledKind {
    std::shared_ptr<const Intensity> inner;
    double scale;  // f(x / scale) / scale
  };
  using Kind = std::variant<Constant, LogFamily, LogLogFamily, Example41Kind,
                            Example42Kind, LinearTable, ShiftedKind, RescaledKind>;

  Intensity(Kind kind, Domain domain, double monotone_from);

  Kind kind_;
  Domain domain_;
  double monotone_from_;
};

/// Grid-based monotonicity check on {from, from+step, ...} plus one-sided
/// limits at breakpoints.  Can prove non-monotonicity; for the built-in
/// families a true result is exact, for tables it is evidence only.
bool check_monotone(const Intensity& f, double from, double to, double grid_step);

}  // namespace frogdrift
