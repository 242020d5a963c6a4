#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace easm {

/// Independent sub-streams derived from one run seed. Deployment draws come
/// from one stream and election/tie draws from the other, so changing the
/// protocol never perturbs the deployed network.
enum class Stream : std::uint64_t { Deployment = 0, Election = 1 };

/// Thin wrapper over mt19937_64 whose output sequence is fixed by the
/// standard, with portable conversions to doubles and indices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_stream(std::uint64_t run_seed, Stream stream);

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, n). n must be positive.
  std::size_t pick(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace easm
