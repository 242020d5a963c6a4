#include "easm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "easm/csv.hpp"
#include "easm/rng.hpp"

namespace easm {

ExperimentConfig scenario_one() {
  ExperimentConfig cfg;
  cfg.network.het = HeterogeneityParams{0.5, 0.4, 1.5, 3.0};
  return cfg;
}

ExperimentConfig scenario_two() {
  ExperimentConfig cfg;
  cfg.network.het = HeterogeneityParams{0.3, 0.6, 2.0, 5.0};
  return cfg;
}

namespace {

// Field names raised by the model validators, keyed to config-file names.
const std::map<std::string, std::string>& config_keys() {
  static const std::map<std::string, std::string> keys{
      {"n_nodes", "network.nodes"},     {"field_side", "network.field_side"},
      {"bs_pos", "network.bs_x"},       {"e0", "network.e0"},
      {"m", "heterogeneity.m"},         {"m0", "heterogeneity.m0"},
      {"alpha", "heterogeneity.alpha"}, {"beta", "heterogeneity.beta"},
      {"heterogeneity", "heterogeneity"}, {"e_elec", "radio.e_elec"},
      {"eps_fs", "radio.eps_fs"},       {"eps_mp", "radio.eps_mp"},
      {"e_da", "radio.e_da"},           {"d0", "radio.d0"},
      {"msg_bits", "radio.msg_bits"},
  };
  return keys;
}

[[noreturn]] void rethrow_as_config_error(const std::invalid_argument& e) {
  const std::string what = e.what();
  const auto colon = what.find(':');
  const std::string field = what.substr(0, colon);
  const auto it = config_keys().find(field);
  const std::string detail = colon == std::string::npos ? what : what.substr(colon + 2);
  throw ConfigError(it != config_keys().end() ? it->second : field, detail);
}

}  // namespace

void validate(const ExperimentConfig& config) {
  try {
    validate(config.network);
    class_counts(config.network);
    validate(config.radio);
  } catch (const std::invalid_argument& e) {
    rethrow_as_config_error(e);
  }
  if (!(config.p_opt > 0.0 && config.p_opt <= 1.0)) {
    throw ConfigError("protocol.p_opt", "must lie in (0, 1]");
  }
  if (config.max_rounds < 1) throw ConfigError("experiment.max_rounds", "must be at least 1");
  if (config.seeds.empty()) throw ConfigError("experiment.seeds", "must not be empty");
  const std::set<std::uint64_t> unique(config.seeds.begin(), config.seeds.end());
  if (unique.size() != config.seeds.size()) {
    throw ConfigError("experiment.seeds", "duplicate seed");
  }
}

RunResult simulate(const ExperimentConfig& config, std::uint64_t seed) {
  NetworkConfig network = config.network;
  network.rng_seed = seed;

  RunResult result;
  result.seed = seed;
  result.deployment = deploy(network);

  const ElectionContext ctx{0, config.p_opt, network.het, config.reset_trigger};
  Simulation sim(result.deployment, config.protocol, ctx, config.radio, network.bs_pos,
                 Rng::for_stream(seed, Stream::Election));
  while (sim.next_round() < config.max_rounds) {
    result.reports.push_back(sim.step());
    if (result.reports.back().alive_total() == 0) break;
  }
  result.summary = fold(result.reports, network.n_nodes);
  return result;
}

std::vector<RunResult> run_seeds(const ExperimentConfig& config, Execution exec) {
  validate(config);
  std::vector<std::uint64_t> seeds = config.seeds;
  std::sort(seeds.begin(), seeds.end());

  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
  std::vector<RunResult> results(seeds.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) results[i] = simulate(config, seeds[i]);
    return results;
  }

  std::vector<std::exception_ptr> errors(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = simulate(config, seeds[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

namespace {

MilestoneStats milestone_stats(std::span<const RunResult> runs, Milestone LifetimeSummary::*field) {
  std::vector<double> values;
  for (const RunResult& run : runs) {
    if (const Milestone& m = run.summary.*field) values.push_back(static_cast<double>(*m));
  }
  MilestoneStats stats;
  stats.reached = values.size();
  if (values.empty()) return stats;

  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  stats.mean = mean;
  stats.stddev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return stats;
}

}  // namespace

ProtocolStats aggregate(ProtocolKind protocol, std::span<const RunResult> runs) {
  ProtocolStats stats;
  stats.protocol = protocol;
  stats.runs = runs.size();
  stats.fnd = milestone_stats(runs, &LifetimeSummary::fnd);
  stats.hna = milestone_stats(runs, &LifetimeSummary::hna);
  stats.lnd = milestone_stats(runs, &LifetimeSummary::lnd);

  std::size_t length = 0;
  for (const RunResult& run : runs) length = std::max(length, run.summary.alive_series.size());
  stats.mean_alive.assign(length, 0.0);
  stats.mean_energy.assign(length, 0.0);
  if (runs.empty()) return stats;

  for (const RunResult& run : runs) {
    const auto& alive = run.summary.alive_series;
    const auto& energy = run.summary.energy_series;
    for (std::size_t r = 0; r < length && !alive.empty(); ++r) {
      const std::size_t k = std::min(r, alive.size() - 1);
      stats.mean_alive[r] += static_cast<double>(alive[k]);
      stats.mean_energy[r] += energy[k];
    }
  }
  const auto n = static_cast<double>(runs.size());
  for (std::size_t r = 0; r < length; ++r) {
    stats.mean_alive[r] /= n;
    stats.mean_energy[r] /= n;
  }
  return stats;
}

namespace {

void prepare_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw OutputError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw OutputError("failed writing " + path.string());
}

std::string run_stem(ProtocolKind protocol, std::uint64_t seed) {
  return std::string(to_string(protocol)) + "_seed" + std::to_string(seed) + ".csv";
}

void write_runs(const std::filesystem::path& dir, ProtocolKind protocol,
                std::span<const RunResult> runs) {
  for (const RunResult& run : runs) {
    write_file(dir / ("rounds_" + run_stem(protocol, run.seed)),
               [&](std::ostream& out) { csv::write_rounds(out, run.reports); });
    write_file(dir / ("messages_" + run_stem(protocol, run.seed)),
               [&](std::ostream& out) { csv::write_messages(out, run.reports); });
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, Execution exec) {
  validate(config);
  prepare_dir(config.output_dir);

  ExperimentResult result;
  result.runs = run_seeds(config, exec);
  result.stats = aggregate(config.protocol, result.runs);

  write_runs(config.output_dir, config.protocol, result.runs);
  write_file(config.output_dir / "summary.csv", [&](std::ostream& out) {
    csv::write_summary_header(out);
    csv::write_summary_rows(out, config.protocol, result.runs);
  });
  return result;
}

std::vector<ExperimentConfig> protocol_variants(const ExperimentConfig& base) {
  std::vector<ExperimentConfig> configs;
  for (ProtocolKind kind : kProtocols) {
    ExperimentConfig cfg = base;
    cfg.protocol = kind;
    configs.push_back(cfg);
  }
  return configs;
}

namespace {

bool same_except_protocol(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.network == b.network && a.radio == b.radio && a.p_opt == b.p_opt &&
         a.reset_trigger == b.reset_trigger && a.max_rounds == b.max_rounds &&
         a.seeds == b.seeds && a.output_dir == b.output_dir;
}

}  // namespace

ComparisonResult compare(std::span<const ExperimentConfig> configs, Execution exec) {
  if (configs.empty()) throw ConfigError("protocol", "nothing to compare");
  for (const ExperimentConfig& cfg : configs) {
    validate(cfg);
    if (!same_except_protocol(cfg, configs.front())) {
      throw ConfigError("protocol", "compared configs may differ only in protocol");
    }
  }
  const std::filesystem::path& dir = configs.front().output_dir;
  prepare_dir(dir);

  ComparisonResult result;
  for (const ExperimentConfig& cfg : configs) {
    result.runs.push_back(run_seeds(cfg, exec));
    result.rows.push_back(aggregate(cfg.protocol, result.runs.back()));
  }

  for (std::size_t i = 0; i < configs.size(); ++i) {
    const ProtocolKind protocol = configs[i].protocol;
    write_runs(dir, protocol, result.runs[i]);
    write_file(dir / ("series_" + std::string(to_string(protocol)) + ".csv"),
               [&](std::ostream& out) { csv::write_series(out, result.rows[i]); });
  }
  write_file(dir / "summary.csv", [&](std::ostream& out) {
    csv::write_summary_header(out);
    for (std::size_t i = 0; i < configs.size(); ++i) {
      csv::write_summary_rows(out, configs[i].protocol, result.runs[i]);
    }
  });
  write_file(dir / "comparison.csv",
             [&](std::ostream& out) { csv::write_comparison(out, result.rows); });
  return result;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config, const SweepSpec& spec,
                            bool all_protocols, Execution exec) {
  static const std::map<std::string, double HeterogeneityParams::*> fields{
      {"m", &HeterogeneityParams::m},
      {"m0", &HeterogeneityParams::m0},
      {"alpha", &HeterogeneityParams::alpha},
      {"beta", &HeterogeneityParams::beta},
  };
  const auto field = fields.find(spec.parameter);
  if (field == fields.end()) {
    throw ConfigError("sweep.parameter", "expected m, m0, alpha or beta, got '" +
                                             spec.parameter + "'");
  }
  if (spec.values.empty()) throw ConfigError("sweep.values", "must not be empty");
  validate(config);
  prepare_dir(config.output_dir);

  std::vector<SweepRow> rows;
  for (double value : spec.values) {
    ExperimentConfig point = config;
    point.network.het.*(field->second) = value;
    try {
      validate(point);
    } catch (const ConfigError& e) {
      throw ConfigError("sweep.values", e.what());
    }
    const std::vector<ExperimentConfig> variants =
        all_protocols ? protocol_variants(point) : std::vector<ExperimentConfig>{point};
    for (const ExperimentConfig& cfg : variants) {
      const std::vector<RunResult> runs = run_seeds(cfg, exec);
      rows.push_back(SweepRow{spec.parameter, value, aggregate(cfg.protocol, runs)});
    }
  }
  write_file(config.output_dir / "sweep.csv",
             [&](std::ostream& out) { csv::write_sweep(out, rows); });
  return rows;
}

}  // namespace easm
