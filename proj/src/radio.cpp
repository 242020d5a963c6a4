#include "easm/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace easm {

void validate(const RadioParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0; };
  if (!positive(p.e_elec)) throw std::invalid_argument("e_elec: must be positive");
  if (!positive(p.eps_fs)) throw std::invalid_argument("eps_fs: must be positive");
  if (!positive(p.eps_mp)) throw std::invalid_argument("eps_mp: must be positive");
  if (!positive(p.e_da)) throw std::invalid_argument("e_da: must be positive");
  if (!positive(p.d0)) throw std::invalid_argument("d0: must be positive");
  if (p.msg_bits == 0) throw std::invalid_argument("msg_bits: must be positive");
}

double crossover_distance(const RadioParams& p) { return std::sqrt(p.eps_fs / p.eps_mp); }

double tx_cost(const RadioParams& p, std::uint64_t bits, double d) {
  const auto l = static_cast<double>(bits);
  if (d < p.d0) return l * p.e_elec + l * p.eps_fs * d * d;
  const double d2 = d * d;
  return l * p.e_elec + l * p.eps_mp * d2 * d2;
}

double rx_cost(const RadioParams& p, std::uint64_t bits) {
  return static_cast<double>(bits) * p.e_elec;
}

double aggregation_cost(const RadioParams& p, std::uint64_t bits, std::uint64_t n_signals) {
  return static_cast<double>(bits) * p.e_da * static_cast<double>(n_signals);
}

}  // namespace easm
