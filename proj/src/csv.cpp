#include "easm/csv.hpp"

#include <charconv>

namespace easm::csv {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_milestone(const Milestone& m) { return m ? std::to_string(*m) : "NA"; }

namespace {

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

void write_stats_columns(std::ostream& out, const ProtocolStats& s) {
  out << format_optional(s.fnd.mean) << ',' << format_optional(s.fnd.stddev) << ','
      << format_optional(s.hna.mean) << ',' << format_optional(s.hna.stddev) << ','
      << format_optional(s.lnd.mean) << ',' << format_optional(s.lnd.stddev);
}

}  // namespace

void write_rounds(std::ostream& out, std::span<const RoundReport> reports) {
  out << "round,alive_normal,alive_advanced,alive_super,alive_total,ch_count,"
         "energy_remaining_j,energy_spent_cum_j,bs_messages_cum\n";
  double spent = 0.0;
  std::uint64_t messages = 0;
  for (const RoundReport& r : reports) {
    spent += r.energy_spent;
    messages += r.bs_messages_total();
    out << r.round_index << ',' << r.alive_by_class[0] << ',' << r.alive_by_class[1] << ','
        << r.alive_by_class[2] << ',' << r.alive_total() << ',' << r.ch_count << ','
        << format_double(r.energy_remaining_total) << ',' << format_double(spent) << ','
        << messages << '\n';
  }
}

void write_messages(std::ostream& out, std::span<const RoundReport> reports) {
  out << "round,energy_spent_cum_j,bs_messages_cum,bs_ch_messages_cum,bs_direct_messages_cum\n";
  double spent = 0.0;
  std::uint64_t ch = 0;
  std::uint64_t direct = 0;
  for (const RoundReport& r : reports) {
    spent += r.energy_spent;
    ch += r.bs_messages;
    direct += r.bs_direct_messages;
    out << r.round_index << ',' << format_double(spent) << ',' << ch + direct << ',' << ch << ','
        << direct << '\n';
  }
}

void write_summary_header(std::ostream& out) { out << "protocol,seed,fnd,hna,lnd\n"; }

void write_summary_rows(std::ostream& out, ProtocolKind protocol, std::span<const RunResult> runs) {
  for (const RunResult& run : runs) {
    out << to_string(protocol) << ',' << run.seed << ',' << format_milestone(run.summary.fnd)
        << ',' << format_milestone(run.summary.hna) << ',' << format_milestone(run.summary.lnd)
        << '\n';
  }
}

void write_comparison(std::ostream& out, std::span<const ProtocolStats> rows) {
  out << "protocol,fnd_mean,fnd_std,hna_mean,hna_std,lnd_mean,lnd_std\n";
  for (const ProtocolStats& s : rows) {
    out << to_string(s.protocol) << ',';
    write_stats_columns(out, s);
    out << '\n';
  }
}

void write_series(std::ostream& out, const ProtocolStats& stats) {
  out << "round,alive_mean,energy_remaining_mean_j\n";
  for (std::size_t r = 0; r < stats.mean_alive.size(); ++r) {
    out << r << ',' << format_double(stats.mean_alive[r]) << ','
        << format_double(stats.mean_energy[r]) << '\n';
  }
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows) {
  out << "parameter,value,protocol,fnd_mean,fnd_std,hna_mean,hna_std,lnd_mean,lnd_std\n";
  for (const SweepRow& row : rows) {
    out << row.parameter << ',' << format_double(row.value) << ',' << to_string(row.stats.protocol)
        << ',';
    write_stats_columns(out, row.stats);
    out << '\n';
  }
}

}  // namespace easm::csv
