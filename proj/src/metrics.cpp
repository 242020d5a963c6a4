#include "easm/metrics.hpp"

#include <stdexcept>
#include <string>

namespace easm {

bool half_dead(std::size_t alive, std::size_t n_nodes) { return alive <= n_nodes / 2; }

LifetimeSummary fold(std::span<const RoundReport> reports, std::size_t n_nodes) {
  LifetimeSummary s;
  s.alive_series.reserve(reports.size());
  s.energy_series.reserve(reports.size());
  s.bs_cumulative.reserve(reports.size());
  s.spent_cumulative.reserve(reports.size());

  std::uint64_t messages = 0;
  double spent = 0.0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const RoundReport& r = reports[i];
    if (r.round_index != i) {
      throw std::invalid_argument("fold: expected round " + std::to_string(i) + ", got " +
                                  std::to_string(r.round_index));
    }
    const std::size_t alive = r.alive_total();
    if (!s.fnd && !r.deaths.empty()) s.fnd = r.round_index;
    if (!s.hna && half_dead(alive, n_nodes)) s.hna = r.round_index;
    if (!s.lnd && alive == 0) s.lnd = r.round_index;

    messages += r.bs_messages_total();
    spent += r.energy_spent;
    s.alive_series.push_back(alive);
    s.energy_series.push_back(r.energy_remaining_total);
    s.bs_cumulative.push_back(messages);
    s.spent_cumulative.push_back(spent);
  }
  return s;
}

std::vector<std::pair<double, std::uint64_t>> messages_vs_energy(const LifetimeSummary& summary) {
  std::vector<std::pair<double, std::uint64_t>> out;
  out.reserve(summary.bs_cumulative.size());
  for (std::size_t i = 0; i < summary.bs_cumulative.size(); ++i) {
    out.emplace_back(summary.spent_cumulative[i], summary.bs_cumulative[i]);
  }
  return out;
}

}  // namespace easm
