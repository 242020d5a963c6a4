#include "easm/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace easm {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Leach: return "leach";
    case ProtocolKind::Eehc: return "eehc";
    case ProtocolKind::Easm: return "easm";
  }
  return "unknown";
}

std::optional<ProtocolKind> parse_protocol(std::string_view name) {
  for (ProtocolKind kind : kProtocols) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(ResetTrigger trigger) {
  return trigger == ResetTrigger::OptimalEpoch ? "p_opt" : "class";
}

std::optional<ResetTrigger> parse_reset_trigger(std::string_view name) {
  if (name == "p_opt") return ResetTrigger::OptimalEpoch;
  if (name == "class") return ResetTrigger::ClassEpoch;
  return std::nullopt;
}

double class_probability(ProtocolKind kind, NodeClass c, const ElectionContext& ctx) {
  if (kind == ProtocolKind::Leach) return ctx.p_opt;
  const double p_normal = ctx.p_opt / ctx.het.energy_multiplier();
  switch (c) {
    case NodeClass::Normal: return p_normal;
    case NodeClass::Advanced: return p_normal * (1.0 + ctx.het.alpha);
    case NodeClass::Super: return p_normal * (1.0 + ctx.het.beta);
  }
  return p_normal;
}

std::uint32_t epoch_length(double p) {
  const long rounds = std::lround(1.0 / p);
  return rounds < 1 ? 1U : static_cast<std::uint32_t>(rounds);
}

double threshold(ProtocolKind kind, const Node& node, double p_i, const ElectionContext& ctx) {
  if (!node.alive || !node.eligible) return 0.0;

  const std::uint32_t slot = ctx.round % epoch_length(p_i);
  const double denominator = 1.0 - p_i * static_cast<double>(slot);
  if (!(denominator > 0.0)) {
    throw std::domain_error("threshold: non-positive rotation denominator");
  }
  double t = p_i / denominator;

  if (kind == ProtocolKind::Easm) {
    const double reset_epoch = ctx.reset_trigger == ResetTrigger::OptimalEpoch
                                   ? static_cast<double>(epoch_length(ctx.p_opt))
                                   : static_cast<double>(epoch_length(p_i));
    if (static_cast<double>(node.rounds_since_ch) < reset_epoch) {
      t *= std::clamp(node.e_residual / node.e_initial, 0.0, 1.0);
    }
  }
  return std::clamp(t, 0.0, 1.0);
}

std::vector<NodeId> elect(ProtocolKind kind, std::span<Node> nodes, const ElectionContext& ctx,
                          Rng& rng) {
  std::vector<NodeId> heads;
  for (Node& node : nodes) {
    if (!node.alive) {
      node.eligible = false;
      continue;
    }
    const double p_i = class_probability(kind, node.node_class, ctx);
    // G is refilled at the start of every class epoch.
    if (ctx.round % epoch_length(p_i) == 0) node.eligible = true;

    const double t = threshold(kind, node, p_i, ctx);
    const double u = rng.uniform();
    if (u < t) {
      heads.push_back(node.id);
      node.eligible = false;
      node.rounds_since_ch = 0;
    } else if (node.eligible) {
      ++node.rounds_since_ch;
    }
  }
  return heads;
}

}  // namespace easm
