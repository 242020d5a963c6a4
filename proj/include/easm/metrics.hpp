#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "easm/round_engine.hpp"

namespace easm {

/// Round index of a lifetime milestone; empty when the round budget ran out
/// first.
using Milestone = std::optional<std::uint32_t>;

struct LifetimeSummary {
  Milestone fnd;  // first node dies
  Milestone hna;  // at most half of the nodes alive
  Milestone lnd;  // last node dies
  std::vector<std::size_t> alive_series;
  std::vector<double> energy_series;
  std::vector<std::uint64_t> bs_cumulative;
  std::vector<double> spent_cumulative;
};

// True once at least half of n_nodes have died.
bool half_dead(std::size_t alive, std::size_t n_nodes);

/// Folds reports (consecutive rounds starting at 0) into lifetime
/// milestones and plot series. Throws std::invalid_argument on gaps or
/// reordering.
LifetimeSummary fold(std::span<const RoundReport> reports, std::size_t n_nodes);

/// (cumulative joules spent, cumulative BS messages) per round.
std::vector<std::pair<double, std::uint64_t>> messages_vs_energy(const LifetimeSummary& summary);

}  // namespace easm
