#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace logdet::rng {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC 2011). A 128-bit block is a pure function
// of (counter, key), so draws can be addressed by index and reproduced
// independently of execution order or thread placement.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr std::array<std::uint32_t, 4> block(
      std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// Maps two 32-bit words to a double in the open interval (0,1).
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t u = (std::uint64_t{hi} << 32) | lo;
  return static_cast<double>(u >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

// Inverse standard normal CDF (double accuracy); backed by GSL.
double inverse_normal_cdf(double p);

// One logical stream per (master seed, replica, domain). Domains keep the
// index spaces of unrelated consumers disjoint.
class RngStream {
 public:
  enum Domain : std::uint32_t {
    kMatrixEntries = 0,
    kLimitField = 1,
    kCalibration = 2,
  };

  RngStream(std::uint64_t master_seed, std::uint32_t replica,
            std::uint32_t domain = kMatrixEntries)
      : seed_(master_seed), replica_(replica), domain_(domain) {}

  std::uint64_t master_seed() const { return seed_; }
  std::uint32_t replica() const { return replica_; }

  std::array<std::uint32_t, 4> block(std::uint64_t index) const {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32), replica_, domain_};
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_),
        static_cast<std::uint32_t>(seed_ >> 32)};
    return Philox4x32::block(ctr, key);
  }

  // Two independent uniforms in (0,1) from one block.
  std::pair<double, double> uniform_pair(std::uint64_t index) const {
    const auto w = block(index);
    return {to_open_unit(w[0], w[1]), to_open_unit(w[2], w[3])};
  }

  double uniform(std::uint64_t index) const {
    const auto w = block(index);
    return to_open_unit(w[0], w[1]);
  }

  double normal(std::uint64_t index) const {
    return inverse_normal_cdf(uniform(index));
  }

 private:
  std::uint64_t seed_;
  std::uint32_t replica_;
  std::uint32_t domain_;
};

}  // namespace logdet::rng
