#include "easm/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <string>

namespace easm {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(key, "cannot parse '" + raw + "' as a number");
  }
  return value;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"network", {"nodes", "field_side", "bs_x", "bs_y", "e0"}},
      {"heterogeneity", {"m", "m0", "alpha", "beta"}},
      {"radio", {"e_elec", "eps_fs", "eps_mp", "e_da", "d0", "msg_bits"}},
      {"protocol", {"name", "p_opt", "reset_trigger"}},
      {"experiment", {"max_rounds", "seeds", "output_dir"}},
  };
  return keys;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw ConfigError("experiment.seeds", "empty seed entry");
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      seeds.push_back(parse_number<std::uint64_t>("experiment.seeds", item));
    } else {
      const auto lo = parse_number<std::uint64_t>("experiment.seeds", item.substr(0, dash));
      const auto hi = parse_number<std::uint64_t>("experiment.seeds", item.substr(dash + 1));
      if (hi < lo) throw ConfigError("experiment.seeds", "descending range '" + item + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return seeds;
}

ExperimentConfig parse_config(std::istream& in, const ExperimentConfig& base) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }

  ExperimentConfig cfg = base;
  for (const auto& [section, entries] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) {
      if (entries.empty()) throw ConfigError(section, "key outside of any section");
      throw ConfigError(section, "unknown section");
    }
    for (const auto& [key, node] : entries) {
      const std::string full = section + "." + key;
      if (!known->second.contains(key)) throw ConfigError(full, "unknown key");
      const std::string raw = node.get_value<std::string>();
      auto num = [&] { return parse_number<double>(full, raw); };

      if (section == "network") {
        if (key == "nodes") cfg.network.n_nodes = parse_number<std::size_t>(full, raw);
        if (key == "field_side") cfg.network.field_side = num();
        if (key == "bs_x") cfg.network.bs_pos.x = num();
        if (key == "bs_y") cfg.network.bs_pos.y = num();
        if (key == "e0") cfg.network.e0 = num();
      } else if (section == "heterogeneity") {
        if (key == "m") cfg.network.het.m = num();
        if (key == "m0") cfg.network.het.m0 = num();
        if (key == "alpha") cfg.network.het.alpha = num();
        if (key == "beta") cfg.network.het.beta = num();
      } else if (section == "radio") {
        if (key == "e_elec") cfg.radio.e_elec = num();
        if (key == "eps_fs") cfg.radio.eps_fs = num();
        if (key == "eps_mp") cfg.radio.eps_mp = num();
        if (key == "e_da") cfg.radio.e_da = num();
        if (key == "d0") cfg.radio.d0 = num();
        if (key == "msg_bits") cfg.radio.msg_bits = parse_number<std::uint32_t>(full, raw);
      } else if (section == "protocol") {
        if (key == "name") {
          const auto kind = parse_protocol(trim(raw));
          if (!kind) throw ConfigError(full, "expected leach, eehc or easm, got '" + raw + "'");
          cfg.protocol = *kind;
        }
        if (key == "p_opt") cfg.p_opt = num();
        if (key == "reset_trigger") {
          const auto trigger = parse_reset_trigger(trim(raw));
          if (!trigger) throw ConfigError(full, "expected p_opt or class, got '" + raw + "'");
          cfg.reset_trigger = *trigger;
        }
      } else if (section == "experiment") {
        if (key == "max_rounds") cfg.max_rounds = parse_number<std::uint32_t>(full, raw);
        if (key == "seeds") cfg.seeds = parse_seed_list(raw);
        if (key == "output_dir") cfg.output_dir = trim(raw);
      }
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, const ExperimentConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  return parse_config(in, base);
}

}  // namespace easm
