#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "easm/network.hpp"
#include "easm/rng.hpp"

namespace easm {

enum class ProtocolKind : std::uint8_t { Leach, Eehc, Easm };

inline constexpr std::array<ProtocolKind, 3> kProtocols{ProtocolKind::Leach, ProtocolKind::Eehc,
                                                       ProtocolKind::Easm};

std::string_view to_string(ProtocolKind kind);
std::optional<ProtocolKind> parse_protocol(std::string_view name);

/// Which epoch length re-enables the full EASM threshold for a node that
/// keeps losing elections: the network-wide 1/p_opt, or its own class 1/p_i.
enum class ResetTrigger : std::uint8_t { OptimalEpoch, ClassEpoch };

std::string_view to_string(ResetTrigger trigger);
std::optional<ResetTrigger> parse_reset_trigger(std::string_view name);

struct ElectionContext {
  std::uint32_t round = 0;
  double p_opt = 0.1;
  HeterogeneityParams het{};
  ResetTrigger reset_trigger = ResetTrigger::ClassEpoch;
};

/// Per-class election probability. LEACH is class-blind; EEHC and EASM
/// weight p_opt by each class's share of the total initial energy.
double class_probability(ProtocolKind kind, NodeClass c, const ElectionContext& ctx);

// Rounds per epoch for election probability p: round(1/p), at least 1.
std::uint32_t epoch_length(double p);

/// Self-election threshold for one node in round ctx.round, in [0, 1].
/// Zero for dead or ineligible nodes. EASM scales the rotation term by the
/// residual energy fraction unless the node has gone a full reset epoch
/// without being elected. Throws std::domain_error on a non-positive
/// rotation denominator.
double threshold(ProtocolKind kind, const Node& node, double p_i, const ElectionContext& ctx);

/// One election round. Alive nodes are visited in ascending id order and
/// each draws exactly one uniform number; dead nodes draw nothing. Nodes
/// rejoin G at the start of each of their class epochs. Returns elected ids
/// in ascending order and updates the nodes' rotation state.
std::vector<NodeId> elect(ProtocolKind kind, std::span<Node> nodes, const ElectionContext& ctx,
                          Rng& rng);

}  // namespace easm
