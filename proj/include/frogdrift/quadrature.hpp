#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace frogdrift {

/// Thrown when the adaptive rule exhausts its depth budget; carries the
/// best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best)
      : std::runtime_error(what), best_estimate(best) {}
  double best_estimate;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_floor = 1e-14;
  int max_depth = 40;
};

/// Adaptive composite Simpson over [a, b].  `interior_points` seeds the
/// initial panel edges (pass breakpoints of the integrand here; panels are
/// refined independently).
double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureOptions& opts = {},
                 std::vector<double> interior_points = {});

}  // namespace frogdrift
