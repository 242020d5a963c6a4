#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace easm {

using NodeId = std::uint32_t;

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

double distance(Position a, Position b);
double distance_squared(Position a, Position b);

enum class NodeClass : std::uint8_t { Normal = 0, Advanced = 1, Super = 2 };

inline constexpr std::array<NodeClass, 3> kNodeClasses{NodeClass::Normal, NodeClass::Advanced,
                                                      NodeClass::Super};

std::string_view to_string(NodeClass c);

/// Three-level population: a fraction `m` of the nodes is enriched, and of
/// those a fraction `m0` are super nodes (energy factor 1+beta); the rest are
/// advanced (1+alpha).
struct HeterogeneityParams {
  double m = 0.0;
  double m0 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  // 1 + m(alpha + m0(beta - alpha)); ratio of total to homogeneous energy.
  double energy_multiplier() const { return 1.0 + m * (alpha + m0 * (beta - alpha)); }

  bool operator==(const HeterogeneityParams&) const = default;
};

struct NetworkConfig {
  std::size_t n_nodes = 100;
  double field_side = 100.0;
  Position bs_pos{50.0, 175.0};
  HeterogeneityParams het{};
  double e0 = 0.5;  // joules, normal-node battery
  std::uint64_t rng_seed = 1;

  bool operator==(const NetworkConfig&) const = default;
};

struct Node {
  NodeId id = 0;
  Position pos{};
  NodeClass node_class = NodeClass::Normal;
  double e_initial = 0.0;
  double e_residual = 0.0;
  // Consecutive eligible rounds without serving as cluster head.
  std::uint32_t rounds_since_ch = 0;
  bool eligible = true;  // member of the candidate set G
  bool alive = true;

  bool operator==(const Node&) const = default;
};

struct ClassCounts {
  std::size_t normal = 0;
  std::size_t advanced = 0;
  std::size_t super_nodes = 0;

  std::size_t total() const { return normal + advanced + super_nodes; }
  std::size_t of(NodeClass c) const;
};

// Throws std::invalid_argument naming the offending field.
void validate(const NetworkConfig& config);

ClassCounts class_counts(const NetworkConfig& config);
double initial_energy(NodeClass c, double e0, const HeterogeneityParams& het);
double total_initial_energy(const NetworkConfig& config);

/// Uniform deployment over the field square, drawn from the deployment
/// stream of `config.rng_seed`. Node i gets position draws (x, y) in id
/// order; the first n_super ids are super nodes, then advanced, then normal.
std::vector<Node> deploy(const NetworkConfig& config);

}  // namespace easm
