#include "easm/round_engine.hpp"

#include <algorithm>
#include <utility>

namespace easm {

ClusterAssignment form_clusters(std::span<const Node> nodes, std::span<const NodeId> ch_set,
                                Rng& rng) {
  ClusterAssignment out;
  if (ch_set.empty()) {
    for (const Node& node : nodes) {
      if (node.alive) out.direct_to_bs.push_back(node.id);
    }
    return out;
  }

  std::vector<bool> is_head(nodes.size(), false);
  for (NodeId id : ch_set) {
    is_head[id] = true;
    out.clusters[id];
  }

  std::vector<NodeId> nearest;
  for (const Node& node : nodes) {
    if (!node.alive || is_head[node.id]) continue;
    double best = 0.0;
    nearest.clear();
    for (NodeId head : ch_set) {
      const double d2 = distance_squared(node.pos, nodes[head].pos);
      if (nearest.empty() || d2 < best) {
        best = d2;
        nearest.assign(1, head);
      } else if (d2 == best) {
        nearest.push_back(head);
      }
    }
    const NodeId chosen = nearest.size() == 1 ? nearest.front() : nearest[rng.pick(nearest.size())];
    out.clusters[chosen].push_back(node.id);
  }
  return out;
}

SteadyStateTally run_steady_state(std::span<Node> nodes, const ClusterAssignment& assignment,
                                  const RadioParams& radio, Position bs_pos) {
  SteadyStateTally tally;
  const std::uint64_t bits = radio.msg_bits;
  auto charge = [&](Node& node, double joules) {
    node.e_residual -= joules;
    tally.energy_spent += joules;
  };

  for (const auto& [head_id, members] : assignment.clusters) {
    Node& head = nodes[head_id];
    for (NodeId member_id : members) {
      Node& member = nodes[member_id];
      charge(member, tx_cost(radio, bits, distance(member.pos, head.pos)));
    }
    const auto n_members = static_cast<std::uint64_t>(members.size());
    charge(head, rx_cost(radio, bits) * static_cast<double>(n_members));
    charge(head, aggregation_cost(radio, bits, n_members + 1));
    charge(head, tx_cost(radio, bits, distance(head.pos, bs_pos)));
    ++tally.ch_messages;
  }
  for (NodeId id : assignment.direct_to_bs) {
    Node& node = nodes[id];
    charge(node, tx_cost(radio, bits, distance(node.pos, bs_pos)));
    ++tally.direct_messages;
  }
  return tally;
}

RoundReport run_round(std::vector<Node>& nodes, ProtocolKind protocol, const ElectionContext& ctx,
                      const RadioParams& radio, Position bs_pos, Rng& rng) {
  RoundReport report;
  report.round_index = ctx.round;

  for (Node& node : nodes) {
    const bool alive = node.e_residual > 0.0;
    if (node.alive && !alive) report.deaths.push_back(node.id);
    node.alive = alive;
    if (alive) ++report.alive_by_class[static_cast<std::size_t>(node.node_class)];
  }

  report.cluster_heads = elect(protocol, nodes, ctx, rng);
  report.ch_count = report.cluster_heads.size();

  const ClusterAssignment assignment = form_clusters(nodes, report.cluster_heads, rng);
  const SteadyStateTally tally = run_steady_state(nodes, assignment, radio, bs_pos);
  report.energy_spent = tally.energy_spent;
  report.bs_messages = tally.ch_messages;
  report.bs_direct_messages = tally.direct_messages;

  for (Node& node : nodes) {
    if (node.e_residual < 0.0) {
      report.energy_clamped += -node.e_residual;
      node.e_residual = 0.0;
    }
    report.energy_remaining_total += node.e_residual;
  }
  return report;
}

Simulation::Simulation(std::vector<Node> nodes, ProtocolKind protocol, ElectionContext ctx,
                       RadioParams radio, Position bs_pos, Rng election_rng)
    : nodes_(std::move(nodes)),
      protocol_(protocol),
      ctx_(ctx),
      radio_(radio),
      bs_pos_(bs_pos),
      rng_(std::move(election_rng)) {}

RoundReport Simulation::step() {
  RoundReport report = run_round(nodes_, protocol_, ctx_, radio_, bs_pos_, rng_);
  ++ctx_.round;
  return report;
}

bool Simulation::all_dead() const {
  return std::none_of(nodes_.begin(), nodes_.end(),
                      [](const Node& n) { return n.e_residual > 0.0; });
}

}  // namespace easm
