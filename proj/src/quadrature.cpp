#include "frogdrift/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace frogdrift {

namespace {

struct PanelState {
  const std::function<double(double)>& g;
  double tol;
  int max_depth;
  bool converged = true;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(PanelState& st, double a, double fa, double m, double fm, double b, double fb,
              double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.g(lm);
  const double frm = st.g(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-300)
    return left + right + delta / 15.0;
  if (depth >= st.max_depth) {
    st.converged = false;
    return left + right + delta / 15.0;
  }
  return refine(st, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
         refine(st, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureOptions& opts, std::vector<double> interior_points) {
  if (!(a <= b)) throw std::invalid_argument("integrate requires a <= b");
  if (a == b) return 0.0;

  std::vector<double> edges;
  edges.push_back(a);
  for (double x : interior_points)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // rough pass fixes the error budget for each panel
  const std::size_t n = edges.size() - 1;
  std::vector<double> rough(n);
  double rough_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    rough[i] = simpson(g(lo), g(0.5 * (lo + hi)), g(hi), hi - lo);
    rough_total += std::abs(rough[i]);
  }
  const double tol_total = std::max(opts.abs_floor, opts.rel_tol * std::max(rough_total, 1.0e-30));

  double total = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    const double m = 0.5 * (lo + hi);
    const double fa = g(lo), fm = g(m), fb = g(hi);
    const double whole = simpson(fa, fm, fb, hi - lo);
    PanelState st{g, 0.0, opts.max_depth};
    const double tol_panel = tol_total / static_cast<double>(n);
    total += refine(st, lo, fa, m, fm, hi, fb, whole, tol_panel, 0);
    ok = ok && st.converged;
  }
  if (!ok) throw QuadratureError("adaptive quadrature hit its depth limit", total);
  return total;
}

}  // namespace frogdrift
