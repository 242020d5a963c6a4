#pragma once

#include <ostream>
#include <span>
#include <string>

#include "easm/experiment.hpp"

namespace easm::csv {

// Shortest round-trip decimal form.
std::string format_double(double v);
std::string format_milestone(const Milestone& m);  // "NA" when not reached

void write_rounds(std::ostream& out, std::span<const RoundReport> reports);
void write_messages(std::ostream& out, std::span<const RoundReport> reports);
void write_summary_header(std::ostream& out);
void write_summary_rows(std::ostream& out, ProtocolKind protocol, std::span<const RunResult> runs);
void write_comparison(std::ostream& out, std::span<const ProtocolStats> rows);
void write_series(std::ostream& out, const ProtocolStats& stats);
void write_sweep(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace easm::csv
