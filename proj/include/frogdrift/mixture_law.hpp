#pragma once

#include <cstdint>
#include <vector>

namespace frogdrift {

namespace rng {
class Stream;
}

/// Law of Bernoulli(q) + Poisson(mu) with independent summands; the exact
/// marginal of both reduced processes.
class MixtureLaw {
 public:
  MixtureLaw(double bernoulli_q, double poisson_mean, std::size_t support_cap = 1 << 16);

  double bernoulli_q() const { return q_; }
  double poisson_mean() const { return mu_; }

  double pmf(std::uint64_t k) const;
  /// Tabulated pmf up to the point where cumulative mass >= 1 - 1e-12.
  const std::vector<double>& table() const { return table_; }
  /// Mass beyond the tabulated support.
  double tail_mass() const { return tail_; }
  double mean() const { return q_ + mu_; }

  std::uint64_t sample(rng::Stream& s) const;

 private:
  double q_, mu_;
  std::vector<double> table_;
  double tail_;
};

}  // namespace frogdrift
