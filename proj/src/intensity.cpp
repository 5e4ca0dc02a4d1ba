#include "frogdrift/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace frogdrift {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_in_domain(double x) {
  if (!(x >= 0.0))  // catches negatives and NaN
    throw std::domain_error("intensity evaluated outside [0, inf)");
}

// Largest power of two <= x, starting at 2 (plateaus use n >= 1).
double pow2_at_most(double x) {
  double p = 2.0;
  while (p * 2.0 <= x) p *= 2.0;
  return p;
}

double eval_example41(double x) {
  if (x >= 2.0) {
    const double p = pow2_at_most(x);
    if (x < p + 1.0) return 1.0;
  }
  return x;
}

long long as_site_index(double x) {
  const long long j = std::llround(x);
  if (j < 1 || std::abs(x - static_cast<double>(j)) > 1e-9)
    throw std::domain_error("discrete intensity needs a positive integer site");
  return j;
}

bool is_power_of_two(long long j) { return j >= 2 && (j & (j - 1)) == 0; }

}  // namespace

Intensity::Intensity(Kind kind, Domain domain, double monotone_from)
    : kind_(std::move(kind)), domain_(domain), monotone_from_(monotone_from) {}

Intensity Intensity::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("constant intensity must be finite and >= 0");
  return Intensity(Constant{c}, Domain::Continuous, 0.0);
}

Intensity Intensity::log_family(double C, double a) {
  if (!(C >= 0.0) || !std::isfinite(C))
    throw std::invalid_argument("log family: C must be finite and >= 0");
  if (!(a >= 1.0) || !std::isfinite(a))
    throw std::invalid_argument("log family: shift a must be >= 1 (keeps f >= 0 on [0, inf))");
  return Intensity(LogFamily{C, a}, Domain::Continuous, 0.0);
}

Intensity Intensity::loglog_family(double C1, double C2) {
  if (!(C1 >= 0.0) || !(C2 >= 0.0) || !std::isfinite(C1) || !std::isfinite(C2))
    throw std::invalid_argument("loglog family: coefficients must be finite and >= 0");
  return Intensity(LogLogFamily{C1, C2}, Domain::Continuous, 0.0);
}

Intensity Intensity::example41() { return Intensity(Example41Kind{}, Domain::Continuous, kInf); }

Intensity Intensity::example42() {
  return Intensity(Example42Kind{}, Domain::DiscretePositiveInts, kInf);
}

Intensity Intensity::table(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.empty() || breakpoints.size() != values.size())
    throw std::invalid_argument("table intensity needs equally many breakpoints and values");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i]) || breakpoints[i] < 0.0)
      throw std::invalid_argument("table breakpoints must be finite and >= 0");
    if (i > 0 && !(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("table breakpoints must be strictly increasing");
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw std::invalid_argument("table values must be finite and >= 0");
  }
  // Nondecreasing tail of the node values fixes the monotone-from point.
  std::size_t i = values.size() - 1;
  while (i > 0 && values[i - 1] <= values[i]) --i;
  const double mono = (i == 0) ? 0.0 : breakpoints[i];
  return Intensity(LinearTable{std::move(breakpoints), std::move(values)}, Domain::Continuous,
                   mono);
}

Intensity Intensity::shifted(Intensity inner, double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("shift must be finite and >= 0");
  if (inner.domain() != Domain::Continuous)
    throw std::invalid_argument("shifted intensity requires a continuous inner function");
  const double im = inner.monotone_from();
  const double mono = (im == 0.0) ? 0.0 : r + im;
  return Intensity(ShiftedKind{std::make_shared<const Intensity>(std::move(inner)), r},
                   Domain::Continuous, mono);
}

double Intensity::operator()(double x) const {
  require_in_domain(x);
  if (domain_ == Domain::DiscretePositiveInts) {
    const long long j = as_site_index(x);
    return is_power_of_two(j) ? 1.0 : static_cast<double>(j);
  }
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return k.c;
        } else if constexpr (std::is_same_v<K, LogFamily>) {
          return k.C * std::log(x + k.a);
        } else if constexpr (std::is_same_v<K, LogLogFamily>) {
          return k.C1 * std::log(x + 1.0) + k.C2 * std::log(std::log(x + std::exp(1.0)));
        } else if constexpr (std::is_same_v<K, Example41Kind>) {
          return eval_example41(x);
        } else if constexpr (std::is_same_v<K, LinearTable>) {
          const auto& xs = k.xs;
          const auto& vs = k.vs;
          if (x <= xs.front()) return vs.front();
          if (x >= xs.back()) return vs.back();
          const auto it = std::upper_bound(xs.begin(), xs.end(), x);
          const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
          const double w = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
          return vs[hi - 1] + w * (vs[hi] - vs[hi - 1]);
        } else if constexpr (std::is_same_v<K, ShiftedKind>) {
          return x < k.r ? 0.0 : (*k.inner)(x - k.r);
        } else if constexpr (std::is_same_v<K, RescaledKind>) {
          return (*k.inner)(x / k.scale) / k.scale;
        } else {
          throw std::logic_error("unhandled intensity kind");
        }
      },
      kind_);
}

std::vector<double> Intensity::breakpoints_in(double lo, double hi) const {
  if (!(lo <= hi)) throw std::invalid_argument("breakpoints_in requires lo <= hi");
  lo = std::max(lo, 0.0);
  std::vector<double> out;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Example41Kind> || std::is_same_v<K, Example42Kind>) {
          for (double p = 2.0; p <= hi; p *= 2.0) {
            if (p >= lo) out.push_back(p);
            if (p + 1.0 >= lo && p + 1.0 <= hi && p + 1.0 > p) out.push_back(p + 1.0);
          }
        } else if constexpr (std::is_same_v<K, LinearTable>) {
          for (double x : k.xs)
            if (x >= lo && x <= hi) out.push_back(x);
        } else if constexpr (std::is_same_v<K, ShiftedKind>) {
          if (k.r >= lo && k.r <= hi) out.push_back(k.r);
          for (double b : k.inner->breakpoints_in(std::max(0.0, lo - k.r), hi - k.r))
            out.push_back(b + k.r);
        } else if constexpr (std::is_same_v<K, RescaledKind>) {
          for (double b : k.inner->breakpoints_in(lo / k.scale, hi / k.scale))
            out.push_back(b * k.scale);
        }
        // smooth families: none
      },
      kind_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Intensity::window_sup(double lo, double hi) const {
  if (!(0.0 <= lo && lo <= hi)) throw std::invalid_argument("window_sup requires 0 <= lo <= hi");
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return k.c;
        } else if constexpr (std::is_same_v<K, LogFamily> || std::is_same_v<K, LogLogFamily>) {
          return (*this)(hi);
        } else if constexpr (std::is_same_v<K, Example41Kind>) {
          // branches are monotone, so the sup sits at an endpoint or a
          // one-sided limit at a breakpoint
          double s = std::max((*this)(lo), left_limit(hi));
          if (hi > lo) s = std::max(s, (*this)(hi));
          for (double b : breakpoints_in(lo, hi)) {
            s = std::max(s, left_limit(b));
            if (b < hi) s = std::max(s, (*this)(b));
          }
          return s;
        } else if constexpr (std::is_same_v<K, Example42Kind>) {
          const long long j0 = static_cast<long long>(std::ceil(lo - 1e-9));
          const long long j1 = static_cast<long long>(std::floor(hi + 1e-9));
          double s = 0.0;
          // f(j) is either j or 1, so the top three sites decide the sup
          for (long long j = j1; j >= std::max<long long>(1, std::max(j0, j1 - 2)); --j)
            s = std::max(s, (*this)(static_cast<double>(j)));
          return s;
        } else if constexpr (std::is_same_v<K, LinearTable>) {
          double s = std::max((*this)(lo), (*this)(hi));
          for (double x : k.xs)
            if (x > lo && x < hi) s = std::max(s, (*this)(x));
          return s;
        } else if constexpr (std::is_same_v<K, ShiftedKind>) {
          if (hi <= k.r) return 0.0;
          return k.inner->window_sup(std::max(0.0, lo - k.r), hi - k.r);
        } else if constexpr (std::is_same_v<K, RescaledKind>) {
          return k.inner->window_sup(lo / k.scale, hi / k.scale) / k.scale;
        } else {
          throw std::logic_error("unhandled intensity kind");
        }
      },
      kind_);
}

double Intensity::left_limit(double b) const {
  require_in_domain(b);
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Example41Kind>) {
          if (b >= 2.0) {
            const double p = pow2_at_most(b);
            if (b == p) return b;            // t-branch runs up to 2^n
            if (b == p + 1.0) return 1.0;    // plateau runs up to 2^n + 1
          }
          return (*this)(b);
        } else if constexpr (std::is_same_v<K, ShiftedKind>) {
          return b <= k.r ? 0.0 : k.inner->left_limit(b - k.r);
        } else if constexpr (std::is_same_v<K, RescaledKind>) {
          return k.inner->left_limit(b / k.scale) / k.scale;
        } else {
          return (*this)(b);  // remaining kinds are continuous
        }
      },
      kind_);
}

Intensity Intensity::rescaled_to_half_drift(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("rescaling requires lambda > 0");
  if (domain_ != Domain::Continuous)
    throw std::invalid_argument("rescaling applies to continuous-domain intensities");
  if (lambda == 0.5) return *this;
  const double s = 2.0 * lambda;
  if (const auto* c = std::get_if<Constant>(&kind_)) return constant(c->c / s);
  if (const auto* r = std::get_if<RescaledKind>(&kind_)) {
    return Intensity(RescaledKind{r->inner, r->scale * s}, Domain::Continuous,
                     r->inner->monotone_from() * r->scale * s);
  }
  return Intensity(RescaledKind{std::make_shared<const Intensity>(*this), s}, Domain::Continuous,
                   monotone_from() * s);
}

std::string Intensity::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>)
          os << "constant(" << k.c << ")";
        else if constexpr (std::is_same_v<K, LogFamily>)
          os << k.C << "*log(x+" << k.a << ")";
        else if constexpr (std::is_same_v<K, LogLogFamily>)
          os << k.C1 << "*log(x+1)+" << k.C2 << "*loglog(x+e)";
        else if constexpr (std::is_same_v<K, Example41Kind>)
          os << "example41";
        else if constexpr (std::is_same_v<K, Example42Kind>)
          os << "example42";
        else if constexpr (std::is_same_v<K, LinearTable>)
          os << "table[" << k.xs.size() << " nodes]";
        else if constexpr (std::is_same_v<K, ShiftedKind>)
          os << "shift(" << k.inner->describe() << ", r=" << k.r << ")";
        else if constexpr (std::is_same_v<K, RescaledKind>)
          os << "rescaled(" << k.inner->describe() << ", s=" << k.scale << ")";
      },
      kind_);
  return os.str();
}

bool check_monotone(const Intensity& f, double from, double to, double grid_step) {
  if (!(from <= to) || !(grid_step > 0.0))
    throw std::invalid_argument("check_monotone requires from <= to and grid_step > 0");
  from = std::max(from, 0.0);
  const double tol = 1e-12;

  if (f.domain() == Domain::DiscretePositiveInts) {
    const long long step = std::max<long long>(1, static_cast<long long>(grid_step));
    double prev = -kInf;
    for (long long j = std::max<long long>(1, static_cast<long long>(std::ceil(from)));
         j <= static_cast<long long>(std::floor(to)); j += step) {
      const double v = f(static_cast<double>(j));
      if (v < prev - tol) return false;
      prev = v;
    }
    return true;
  }

  double prev = f(from);
  for (double x = from + grid_step; x < to + grid_step * 0.5; x += grid_step) {
    const double v = f(std::min(x, to));
    if (v < prev - tol) return false;
    prev = v;
  }
  for (double b : f.breakpoints_in(from, to)) {
    if (b <= from) continue;
    if (f(b) < f.left_limit(b) - tol) return false;  // downward jump
  }
  return true;
}

}  // namespace frogdrift
