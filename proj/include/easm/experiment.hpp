#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "easm/metrics.hpp"
#include "easm/network.hpp"
#include "easm/protocols.hpp"
#include "easm/radio.hpp"
#include "easm/round_engine.hpp"

namespace easm {

/// Invalid configuration; `key()` names the offending setting.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  NetworkConfig network{};
  RadioParams radio{};
  ProtocolKind protocol = ProtocolKind::Easm;
  double p_opt = 0.1;
  ResetTrigger reset_trigger = ResetTrigger::ClassEpoch;
  std::uint32_t max_rounds = 5000;
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path output_dir = "out";
};

// alpha=1.5, m=0.5, beta=3, m0=0.4 on the 100-node reference field.
ExperimentConfig scenario_one();
// alpha=2, m=0.3, beta=5, m0=0.6.
ExperimentConfig scenario_two();

// Throws ConfigError.
void validate(const ExperimentConfig& config);

enum class Execution { Serial, Parallel };

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<Node> deployment;  // population before round 0
  std::vector<RoundReport> reports;
  LifetimeSummary summary;
};

/// Deploy from `seed` and run until every node is dead or the round budget
/// is spent.
RunResult simulate(const ExperimentConfig& config, std::uint64_t seed);

/// One simulation per seed, returned sorted by seed. The parallel path
/// spreads seeds over OpenMP threads; the serial path is the reference it
/// must match exactly.
std::vector<RunResult> run_seeds(const ExperimentConfig& config,
                                 Execution exec = Execution::Parallel);

struct MilestoneStats {
  std::size_t reached = 0;  // seeds that hit the milestone within budget
  std::optional<double> mean;
  std::optional<double> stddev;  // sample std; 0 for a single seed
};

struct ProtocolStats {
  ProtocolKind protocol = ProtocolKind::Easm;
  std::size_t runs = 0;
  MilestoneStats fnd;
  MilestoneStats hna;
  MilestoneStats lnd;
  // Per-round means across seeds; a finished run contributes its final
  // state (all dead, zero energy) to later rounds.
  std::vector<double> mean_alive;
  std::vector<double> mean_energy;
};

ProtocolStats aggregate(ProtocolKind protocol, std::span<const RunResult> runs);

struct ExperimentResult {
  std::vector<RunResult> runs;
  ProtocolStats stats;
};

/// Runs every seed of `config` and writes rounds_<protocol>_seed<seed>.csv,
/// messages_<protocol>_seed<seed>.csv and summary.csv into the output
/// directory.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                Execution exec = Execution::Parallel);

struct ComparisonResult {
  std::vector<ProtocolStats> rows;            // one per protocol, in input order
  std::vector<std::vector<RunResult>> runs;   // parallel to rows
};

/// Runs each config over the shared seeds. The configs must differ only in
/// their protocol. Writes per-run files, summary.csv, comparison.csv and
/// series_<protocol>.csv into the first config's output directory.
ComparisonResult compare(std::span<const ExperimentConfig> configs,
                         Execution exec = Execution::Parallel);

// The three protocols on `base`, otherwise unchanged.
std::vector<ExperimentConfig> protocol_variants(const ExperimentConfig& base);

struct SweepSpec {
  std::string parameter;  // m, m0, alpha or beta
  std::vector<double> values;
};

struct SweepRow {
  std::string parameter;
  double value = 0.0;
  ProtocolStats stats;
};

/// Re-runs `config` (or every protocol when `all_protocols`) with one
/// heterogeneity parameter set to each value in turn. Writes sweep.csv.
std::vector<SweepRow> sweep(const ExperimentConfig& config, const SweepSpec& spec,
                            bool all_protocols, Execution exec = Execution::Parallel);

}  // namespace easm
