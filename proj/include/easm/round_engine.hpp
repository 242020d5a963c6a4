#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "easm/network.hpp"
#include "easm/protocols.hpp"
#include "easm/radio.hpp"
#include "easm/rng.hpp"

namespace easm {

struct ClusterAssignment {
  std::map<NodeId, std::vector<NodeId>> clusters;  // cluster head -> members
  std::vector<NodeId> direct_to_bs;                // only when no head was elected
};

/// Joins every alive non-head node to its nearest cluster head. Exact
/// distance ties consume one draw from `rng`; no draw is made otherwise.
/// With no heads, every alive node transmits directly to the base station.
ClusterAssignment form_clusters(std::span<const Node> nodes, std::span<const NodeId> ch_set,
                                Rng& rng);

struct SteadyStateTally {
  double energy_spent = 0.0;
  std::uint64_t ch_messages = 0;      // aggregated frames delivered to the BS
  std::uint64_t direct_messages = 0;  // raw frames sent straight to the BS
};

/// Charges one data frame per alive node. Members pay transmission to their
/// head; heads pay reception per member, aggregation of members + 1 signals
/// and transmission to the BS; direct nodes pay transmission to the BS.
/// Residual energies may go negative here.
SteadyStateTally run_steady_state(std::span<Node> nodes, const ClusterAssignment& assignment,
                                  const RadioParams& radio, Position bs_pos);

struct RoundReport {
  std::uint32_t round_index = 0;
  std::size_t ch_count = 0;
  std::array<std::size_t, 3> alive_by_class{};  // indexed by NodeClass
  double energy_spent = 0.0;                    // pre-clamp sum of all charges
  double energy_clamped = 0.0;                  // overshoot removed by clamping at zero
  double energy_remaining_total = 0.0;
  std::uint64_t bs_messages = 0;  // cluster-head aggregates
  std::uint64_t bs_direct_messages = 0;
  std::vector<NodeId> deaths;  // nodes found depleted at the start of this round
  std::vector<NodeId> cluster_heads;

  std::size_t alive_total() const {
    return alive_by_class[0] + alive_by_class[1] + alive_by_class[2];
  }
  std::uint64_t bs_messages_total() const { return bs_messages + bs_direct_messages; }
};

/// One full round: refresh liveness, elect, form clusters, run the steady
/// state, clamp negative residuals, report. The round number is ctx.round.
RoundReport run_round(std::vector<Node>& nodes, ProtocolKind protocol, const ElectionContext& ctx,
                      const RadioParams& radio, Position bs_pos, Rng& rng);

/// Owns one run's population and election stream and advances it round by
/// round.
class Simulation {
 public:
  Simulation(std::vector<Node> nodes, ProtocolKind protocol, ElectionContext ctx,
             RadioParams radio, Position bs_pos, Rng election_rng);

  RoundReport step();

  std::span<const Node> nodes() const { return nodes_; }
  std::uint32_t next_round() const { return ctx_.round; }
  bool all_dead() const;

 private:
  std::vector<Node> nodes_;
  ProtocolKind protocol_;
  ElectionContext ctx_;
  RadioParams radio_;
  Position bs_pos_;
  Rng rng_;
};

}  // namespace easm
