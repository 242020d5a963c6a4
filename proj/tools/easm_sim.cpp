// Command-line driver: single-protocol runs, three-way comparisons and
// heterogeneity sweeps, all emitting plot-ready CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "easm/config.hpp"
#include "easm/csv.hpp"
#include "easm/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct CommonOptions {
  std::string config_path;
  int scenario = 1;
  std::string protocol;
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint32_t> rounds;
  std::string out;
  bool serial = false;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--config", opts.config_path, "Experiment config (INI)");
  cmd.add_option("--scenario", opts.scenario, "Built-in base scenario applied before --config")
      ->check(CLI::IsMember({1, 2}));
  cmd.add_option("--protocol", opts.protocol, "leach | eehc | easm");
  cmd.add_option("--seed", opts.seeds, "Run seed (repeatable); replaces the config's seeds")
      ->take_all();
  cmd.add_option("--rounds", opts.rounds, "Round budget per run");
  cmd.add_option("--out", opts.out, "Output directory");
  cmd.add_flag("--serial", opts.serial, "Run seeds on one thread");
}

easm::ExperimentConfig resolve(const CommonOptions& opts) {
  easm::ExperimentConfig cfg = opts.scenario == 2 ? easm::scenario_two() : easm::scenario_one();
  if (!opts.config_path.empty()) cfg = easm::load_config(opts.config_path, cfg);
  if (!opts.protocol.empty()) {
    const auto kind = easm::parse_protocol(opts.protocol);
    if (!kind) throw easm::ConfigError("--protocol", "unknown protocol '" + opts.protocol + "'");
    cfg.protocol = *kind;
  }
  if (!opts.seeds.empty()) cfg.seeds = opts.seeds;
  if (opts.rounds) cfg.max_rounds = *opts.rounds;
  if (!opts.out.empty()) cfg.output_dir = opts.out;
  easm::validate(cfg);
  return cfg;
}

easm::Execution execution(const CommonOptions& opts) {
  return opts.serial ? easm::Execution::Serial : easm::Execution::Parallel;
}

void print_stats(const easm::ProtocolStats& s) {
  using easm::csv::format_double;
  auto show = [](const easm::MilestoneStats& m) {
    if (!m.mean) return std::string("not reached");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f +- %.1f (%zu)", *m.mean, *m.stddev, m.reached);
    return std::string(buf);
  };
  std::cout << to_string(s.protocol) << ": runs=" << s.runs << "  FND " << show(s.fnd) << "  HNA "
            << show(s.hna) << "  LND " << show(s.lnd) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based simulator for clustered heterogeneous sensor networks"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Simulate one protocol over every seed");
  add_common(*run, run_opts);

  CommonOptions cmp_opts;
  CLI::App* cmp = app.add_subcommand("compare", "Simulate LEACH, EEHC and EASM on shared seeds");
  add_common(*cmp, cmp_opts);

  CommonOptions sweep_opts;
  std::string sweep_param;
  std::vector<double> sweep_values;
  bool sweep_all = false;
  CLI::App* sw = app.add_subcommand("sweep", "Vary one heterogeneity parameter over a list");
  add_common(*sw, sweep_opts);
  sw->add_option("--param", sweep_param, "m | m0 | alpha | beta")->required();
  sw->add_option("--values", sweep_values, "Comma-separated values")->required()->delimiter(',');
  sw->add_flag("--all-protocols", sweep_all, "Sweep all three protocols");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) {
      const auto cfg = resolve(run_opts);
      const auto result = easm::run_experiment(cfg, execution(run_opts));
      print_stats(result.stats);
    } else if (cmp->parsed()) {
      const auto cfg = resolve(cmp_opts);
      const auto configs = easm::protocol_variants(cfg);
      const auto result = easm::compare(configs, execution(cmp_opts));
      for (const auto& row : result.rows) print_stats(row);
    } else if (sw->parsed()) {
      const auto cfg = resolve(sweep_opts);
      const auto rows =
          easm::sweep(cfg, easm::SweepSpec{sweep_param, sweep_values}, sweep_all,
                      execution(sweep_opts));
      for (const auto& row : rows) {
        std::cout << row.parameter << '=' << easm::csv::format_double(row.value) << "  ";
        print_stats(row.stats);
      }
    }
  } catch (const easm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const easm::OutputError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
