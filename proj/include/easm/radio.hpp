#pragma once

#include <cstdint>

namespace easm {

/// First-order radio model constants. Defaults are the reference values:
/// 5 nJ/bit electronics, 10 pJ/bit/m^2 free space, 0.0013 pJ/bit/m^4
/// multipath, 5 nJ/bit/signal aggregation, 70 m crossover, 4000-bit frames.
struct RadioParams {
  double e_elec = 5e-9;
  double eps_fs = 10e-12;
  double eps_mp = 0.0013e-12;
  double e_da = 5e-9;
  double d0 = 70.0;
  std::uint32_t msg_bits = 4000;

  bool operator==(const RadioParams&) const = default;
};

// Throws std::invalid_argument unless every constant is strictly positive.
void validate(const RadioParams& params);

// sqrt(eps_fs / eps_mp); about 87.7 m for the default constants.
double crossover_distance(const RadioParams& params);

double tx_cost(const RadioParams& params, std::uint64_t bits, double d);
double rx_cost(const RadioParams& params, std::uint64_t bits);
double aggregation_cost(const RadioParams& params, std::uint64_t bits, std::uint64_t n_signals);

}  // namespace easm
