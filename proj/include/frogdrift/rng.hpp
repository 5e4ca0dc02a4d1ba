#pragma once

#include <array>
#include <cstdint>

namespace frogdrift::rng {

/// Counter-based random stream (Philox 4x32-10).  Streams are keyed by the
/// master seed; the replica index selects a disjoint counter block, so any
/// (seed, replica) pair yields the same sequence regardless of how many
/// replicas run or in what order.
class Stream {
 public:
  Stream(std::uint64_t master_seed, std::uint64_t replica = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1), 53-bit resolution.
  double next_unit();
  /// Uniform on (0, 1); safe under log().
  double next_unit_open();

  /// One raw 128-bit block for a given counter; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                            const std::array<std::uint32_t, 2>& key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t replica_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int words_left_ = 0;
};

double sample_exponential(Stream& s, double rate);
/// Exact Poisson sampler: sequential inversion for small means, transformed
/// rejection (Hormann's PTRS) for large ones.
std::uint64_t sample_poisson(Stream& s, double mean);
/// Exact binomial sampler: Bernoulli sum for small n, geometric skips otherwise.
std::uint64_t sample_binomial(Stream& s, std::uint64_t trials, double p);
bool sample_bernoulli(Stream& s, double q);
/// G >= 0 with P(G >= k) = rho^k; sampled by inversion.
std::uint64_t sample_geometric_tail(Stream& s, double rho);

}  // namespace frogdrift::rng
