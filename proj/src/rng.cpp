#include "frogdrift/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace frogdrift::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Stream::block(const std::array<std::uint32_t, 4>& counter,
                                           const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> c = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    round_once(c, k);
  }
  return c;
}

Stream::Stream(std::uint64_t master_seed, std::uint64_t replica)
    : key_{static_cast<std::uint32_t>(master_seed),
           static_cast<std::uint32_t>(master_seed >> 32)},
      replica_(replica) {}

void Stream::refill() {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_index_), static_cast<std::uint32_t>(block_index_ >> 32),
      static_cast<std::uint32_t>(replica_), static_cast<std::uint32_t>(replica_ >> 32)};
  buffer_ = block(counter, key_);
  ++block_index_;
  words_left_ = 4;
}

std::uint64_t Stream::next_u64() {
  if (words_left_ < 2) refill();
  const std::uint32_t lo = buffer_[4 - words_left_];
  const std::uint32_t hi = buffer_[5 - words_left_];
  words_left_ -= 2;
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

double Stream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_exponential(Stream& s, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be > 0");
  return -std::log(s.next_unit_open()) / rate;
}

namespace {

// Sequential inversion by uniform products; exact for modest means.
std::uint64_t poisson_small(Stream& s, double mean) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = 1.0;
  for (;;) {
    prod *= s.next_unit_open();
    if (prod <= limit) return k;
    ++k;
  }
}

// Transformed rejection with squeeze (Hormann 1993), as used by NumPy; exact.
std::uint64_t poisson_ptrs(Stream& s, double mean) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = s.next_unit() - 0.5;
    const double v = s.next_unit_open();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * loglam - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

std::uint64_t sample_poisson(Stream& s, double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson mean must be >= 0");
  if (mean == 0.0) return 0;
  return mean < 10.0 ? poisson_small(s, mean) : poisson_ptrs(s, mean);
}

std::uint64_t sample_binomial(Stream& s, std::uint64_t trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial p must be in [0, 1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - sample_binomial(s, trials, 1.0 - p);
  if (trials <= 64) {
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
      if (s.next_unit() < p) ++k;
    return k;
  }
  // skip failure runs; run lengths are geometric with parameter p
  const double log_q = std::log1p(-p);
  std::uint64_t successes = 0;
  std::uint64_t position = 0;
  for (;;) {
    const double skip = std::floor(std::log(s.next_unit_open()) / log_q);
    if (skip >= static_cast<double>(trials)) return successes;
    position += static_cast<std::uint64_t>(skip) + 1;
    if (position > trials) return successes;
    ++successes;
  }
}

bool sample_bernoulli(Stream& s, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("bernoulli q must be in [0, 1]");
  return s.next_unit() < q;
}

std::uint64_t sample_geometric_tail(Stream& s, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("geometric rho must be in (0, 1)");
  const double g = std::floor(std::log(s.next_unit_open()) / std::log(rho));
  return static_cast<std::uint64_t>(g);
}

}  // namespace frogdrift::rng
