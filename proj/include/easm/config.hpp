#pragma once

#include <filesystem>
#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "easm/experiment.hpp"

namespace easm {

/// INI-style experiment description. Recognised sections and keys:
///
///   [network]       nodes, field_side, bs_x, bs_y, e0
///   [heterogeneity] m, m0, alpha, beta
///   [radio]         e_elec, eps_fs, eps_mp, e_da, d0, msg_bits
///   [protocol]      name (leach|eehc|easm), p_opt, reset_trigger (p_opt|class)
///   [experiment]    max_rounds, seeds, output_dir
///
/// Missing keys keep the value in `base`. `seeds` accepts a comma list with
/// inclusive ranges, e.g. "1-30" or "3,7,10-12". Unknown sections or keys
/// and malformed values throw ConfigError naming "section.key".
ExperimentConfig parse_config(std::istream& in, const ExperimentConfig& base = scenario_one());
ExperimentConfig load_config(const std::filesystem::path& path,
                             const ExperimentConfig& base = scenario_one());

std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace easm
