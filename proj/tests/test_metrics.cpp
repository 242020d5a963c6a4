#include <doctest.h>

#include <stdexcept>

#include "easm/metrics.hpp"

using namespace easm;

namespace {

RoundReport report(std::uint32_t round, std::size_t alive, std::vector<NodeId> deaths = {},
                   double spent = 0.0, std::uint64_t messages = 0) {
  RoundReport r;
  r.round_index = round;
  r.alive_by_class = {alive, 0, 0};
  r.deaths = std::move(deaths);
  r.energy_spent = spent;
  r.bs_messages = messages;
  return r;
}

// Two nodes; node 0 found dead at round 100, node 1 at round 600.
std::vector<RoundReport> two_node_trace() {
  std::vector<RoundReport> reports;
  for (std::uint32_t r = 0; r <= 600; ++r) {
    const std::size_t alive = r < 100 ? 2 : r < 600 ? 1 : 0;
    std::vector<NodeId> deaths;
    if (r == 100) deaths = {0};
    if (r == 600) deaths = {1};
    reports.push_back(report(r, alive, deaths));
  }
  return reports;
}

}  // namespace

TEST_CASE("hand-traced two-node fold") {
  const auto s = fold(two_node_trace(), 2);
  CHECK(s.fnd == 100U);
  CHECK(s.hna == 100U);
  CHECK(s.lnd == 600U);
  CHECK(s.alive_series.size() == 601);
  CHECK(s.alive_series[99] == 2);
  CHECK(s.alive_series[100] == 1);
}

TEST_CASE("milestones not reached within the budget") {
  std::vector<RoundReport> reports;
  for (std::uint32_t r = 0; r < 50; ++r) reports.push_back(report(r, 10));
  const auto s = fold(reports, 10);
  CHECK_FALSE(s.fnd.has_value());
  CHECK_FALSE(s.hna.has_value());
  CHECK_FALSE(s.lnd.has_value());
}

TEST_CASE("simultaneous death") {
  std::vector<RoundReport> reports;
  for (std::uint32_t r = 0; r < 30; ++r) reports.push_back(report(r, 4));
  reports.push_back(report(30, 0, {0, 1, 2, 3}));
  const auto s = fold(reports, 4);
  CHECK(s.fnd == 30U);
  CHECK(s.hna == 30U);
  CHECK(s.lnd == 30U);
}

TEST_CASE("half-dead boundary") {
  CHECK_FALSE(half_dead(51, 100));
  CHECK(half_dead(50, 100));
  CHECK_FALSE(half_dead(2, 3));
  CHECK(half_dead(1, 3));
  CHECK(half_dead(1, 2));
  CHECK(half_dead(0, 1));
}

TEST_CASE("out-of-order reports are rejected") {
  std::vector<RoundReport> reports{report(0, 2), report(2, 2)};
  CHECK_THROWS_AS(fold(reports, 2), std::invalid_argument);
  std::vector<RoundReport> late_start{report(1, 2)};
  CHECK_THROWS_AS(fold(late_start, 2), std::invalid_argument);
}

TEST_CASE("messages versus energy") {
  CHECK(messages_vs_energy(fold({}, 5)).empty());

  std::vector<RoundReport> one{report(0, 100, {}, 0.01, 10)};
  const auto pairs = messages_vs_energy(fold(one, 100));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].second == 10);
  CHECK(pairs[0].first == 0.01);

  std::vector<RoundReport> many;
  for (std::uint32_t r = 0; r < 40; ++r) {
    RoundReport rr = report(r, 10, {}, 0.001 * (r % 3), r % 4);
    rr.bs_direct_messages = r % 2;
    many.push_back(rr);
  }
  const auto series = messages_vs_energy(fold(many, 10));
  for (std::size_t i = 1; i < series.size(); ++i) {
    CHECK(series[i].first >= series[i - 1].first);
    CHECK(series[i].second >= series[i - 1].second);
  }
  CHECK(series.back().second == 60 + 20);  // sum of r % 4 plus r % 2 over 40 rounds
}
