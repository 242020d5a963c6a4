#include "easm/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "easm/rng.hpp"

namespace easm {

double distance_squared(Position a, Position b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(Position a, Position b) { return std::sqrt(distance_squared(a, b)); }

std::string_view to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Normal: return "normal";
    case NodeClass::Advanced: return "advanced";
    case NodeClass::Super: return "super";
  }
  return "unknown";
}

std::size_t ClassCounts::of(NodeClass c) const {
  switch (c) {
    case NodeClass::Normal: return normal;
    case NodeClass::Advanced: return advanced;
    case NodeClass::Super: return super_nodes;
  }
  return 0;
}

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(field) + ": " + what);
}

}  // namespace

void validate(const NetworkConfig& config) {
  require(config.n_nodes >= 1, "n_nodes", "must be at least 1");
  require(std::isfinite(config.field_side) && config.field_side > 0, "field_side",
          "must be positive");
  require(std::isfinite(config.e0) && config.e0 > 0, "e0", "must be positive");
  require(std::isfinite(config.bs_pos.x) && std::isfinite(config.bs_pos.y), "bs_pos",
          "must be finite");
  const auto& het = config.het;
  require(het.m >= 0 && het.m <= 1, "m", "must lie in [0, 1]");
  require(het.m0 >= 0 && het.m0 <= 1, "m0", "must lie in [0, 1]");
  require(het.alpha >= 0 && std::isfinite(het.alpha), "alpha", "must be non-negative");
  require(het.beta >= het.alpha && std::isfinite(het.beta), "beta", "must be at least alpha");
}

ClassCounts class_counts(const NetworkConfig& config) {
  const auto n = static_cast<double>(config.n_nodes);
  const long enriched = std::lround(n * config.het.m);
  const long supers = std::lround(n * config.het.m * config.het.m0);
  const long advanced = enriched - supers;
  const long normal = static_cast<long>(config.n_nodes) - enriched;
  if (supers < 0 || advanced < 0 || normal < 0) {
    throw std::invalid_argument("heterogeneity: rounded class counts would be negative");
  }
  return ClassCounts{static_cast<std::size_t>(normal), static_cast<std::size_t>(advanced),
                     static_cast<std::size_t>(supers)};
}

double initial_energy(NodeClass c, double e0, const HeterogeneityParams& het) {
  switch (c) {
    case NodeClass::Normal: return e0;
    case NodeClass::Advanced: return e0 * (1.0 + het.alpha);
    case NodeClass::Super: return e0 * (1.0 + het.beta);
  }
  return e0;
}

double total_initial_energy(const NetworkConfig& config) {
  return static_cast<double>(config.n_nodes) * config.e0 * config.het.energy_multiplier();
}

std::vector<Node> deploy(const NetworkConfig& config) {
  validate(config);
  const ClassCounts counts = class_counts(config);
  Rng rng = Rng::for_stream(config.rng_seed, Stream::Deployment);

  std::vector<Node> nodes;
  nodes.reserve(config.n_nodes);
  for (std::size_t i = 0; i < config.n_nodes; ++i) {
    Node node;
    node.id = static_cast<NodeId>(i);
    node.pos.x = rng.uniform() * config.field_side;
    node.pos.y = rng.uniform() * config.field_side;
    if (i < counts.super_nodes) {
      node.node_class = NodeClass::Super;
    } else if (i < counts.super_nodes + counts.advanced) {
      node.node_class = NodeClass::Advanced;
    } else {
      node.node_class = NodeClass::Normal;
    }
    node.e_initial = initial_energy(node.node_class, config.e0, config.het);
    node.e_residual = node.e_initial;
    nodes.push_back(node);
  }
  return nodes;
}

}  // namespace easm
