#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "easm/round_engine.hpp"
#include "oracle.hpp"

using namespace easm;

namespace {

Node at(NodeId id, double x, double y, double energy = 0.5) {
  Node n;
  n.id = id;
  n.pos = {x, y};
  n.e_initial = energy;
  n.e_residual = energy;
  return n;
}

double residual_sum(const std::vector<Node>& nodes) {
  return std::accumulate(nodes.begin(), nodes.end(), 0.0,
                         [](double s, const Node& n) { return s + n.e_residual; });
}

ElectionContext scenario_one_ctx() {
  ElectionContext ctx;
  ctx.het = HeterogeneityParams{0.5, 0.4, 1.5, 3.0};
  return ctx;
}

}  // namespace

TEST_CASE("form_clusters") {
  SUBCASE("single head takes everybody") {
    std::vector<Node> nodes{at(0, 0, 0), at(1, 10, 0), at(2, 90, 90), at(3, 40, 5)};
    Rng rng(1);
    const std::vector<NodeId> heads{2};
    const auto a = form_clusters(nodes, heads, rng);
    REQUIRE(a.clusters.size() == 1);
    CHECK(a.clusters.at(2) == std::vector<NodeId>{0, 1, 3});
    CHECK(a.direct_to_bs.empty());
  }
  SUBCASE("nearest head wins and dead nodes are skipped") {
    std::vector<Node> nodes{at(0, 0, 0), at(1, 100, 0), at(2, 10, 0), at(3, 95, 0), at(4, 50, 1)};
    nodes[4].alive = false;
    Rng rng(1);
    const std::vector<NodeId> heads{0, 1};
    const auto a = form_clusters(nodes, heads, rng);
    CHECK(a.clusters.at(0) == std::vector<NodeId>{2});
    CHECK(a.clusters.at(1) == std::vector<NodeId>{3});
  }
  SUBCASE("exact ties are broken by the seeded stream") {
    std::vector<Node> nodes{at(0, 0, 0), at(1, 20, 0), at(2, 10, 5)};
    const std::vector<NodeId> heads{0, 1};
    std::set<NodeId> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
      Rng first(seed);
      Rng second(seed);
      const auto a = form_clusters(nodes, heads, first);
      const auto b = form_clusters(nodes, heads, second);
      CHECK(a.clusters == b.clusters);
      for (const auto& [head, members] : a.clusters) {
        if (!members.empty()) seen.insert(head);
      }
    }
    CHECK(seen == std::set<NodeId>{0, 1});
  }
  SUBCASE("no heads sends every alive node to the base station") {
    std::vector<Node> nodes{at(0, 1, 1), at(1, 2, 2), at(2, 3, 3), at(3, 4, 4), at(4, 5, 5),
                            at(5, 6, 6)};
    nodes[5].alive = false;
    Rng rng(1);
    const auto a = form_clusters(nodes, {}, rng);
    CHECK(a.clusters.empty());
    CHECK(a.direct_to_bs == std::vector<NodeId>{0, 1, 2, 3, 4});

    const RadioParams radio;
    const Position bs{50, 175};
    const double before = residual_sum(nodes);
    const auto tally = run_steady_state(nodes, a, radio, bs);
    double expected = 0.0;
    for (NodeId id : a.direct_to_bs) expected += tx_cost(radio, 4000, distance(nodes[id].pos, bs));
    CHECK(tally.energy_spent == doctest::Approx(expected).epsilon(1e-14));
    CHECK(before - residual_sum(nodes) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(tally.direct_messages == 5);
    CHECK(tally.ch_messages == 0);
  }
}

TEST_CASE("run_steady_state charges") {
  const RadioParams radio;
  const Position bs{50, 175};
  SUBCASE("lone head 125 m from the base station") {
    std::vector<Node> nodes{at(0, 50, 50)};
    ClusterAssignment a;
    a.clusters[0];
    const auto tally = run_steady_state(nodes, a, radio, bs);
    CHECK(tally.energy_spent == doctest::Approx(2e-5 + 1.28953125e-3).epsilon(1e-12));
    CHECK(nodes[0].e_residual == doctest::Approx(0.5 - 1.30953125e-3).epsilon(1e-12));
    CHECK(tally.ch_messages == 1);
  }
  SUBCASE("member 50 m from its head") {
    std::vector<Node> nodes{at(0, 50, 50), at(1, 80, 90)};
    ClusterAssignment a;
    a.clusters[0] = {1};
    run_steady_state(nodes, a, radio, bs);
    CHECK(0.5 - nodes[1].e_residual == doctest::Approx(1.2e-4).epsilon(1e-10));
  }
  SUBCASE("nothing alive") {
    std::vector<Node> nodes{at(0, 1, 1, 0.0)};
    nodes[0].alive = false;
    Rng rng(1);
    const auto tally = run_steady_state(nodes, form_clusters(nodes, {}, rng), radio, bs);
    CHECK(tally.energy_spent == 0.0);
    CHECK(tally.ch_messages + tally.direct_messages == 0);
  }
}

TEST_CASE("hand-placed four-node round matches the radio law term by term") {
  // Head at the origin, members at 50 m, 60 m (free space) and 80 m
  // (multipath), base station 150 m away.
  std::vector<Node> nodes{at(0, 0, 0), at(1, 30, 40), at(2, 0, 60), at(3, 80, 0)};
  const Position bs{0, 150};
  Rng rng(1);
  const std::vector<NodeId> heads{0};
  const auto a = form_clusters(nodes, heads, rng);
  const double before = residual_sum(nodes);
  const auto tally = run_steady_state(nodes, a, RadioParams{}, bs);

  const double hand = 1.2e-4 + 1.64e-4 + 2.32992e-4 + 3 * 2e-5 + 4 * 2e-5 + 2.6525e-3;
  CHECK(std::abs(tally.energy_spent - hand) <= 1e-12);
  CHECK(std::abs((before - residual_sum(nodes)) - hand) <= 1e-12);
}

TEST_CASE("run_round on a fresh scenario-one network") {
  NetworkConfig cfg;
  cfg.het = HeterogeneityParams{0.5, 0.4, 1.5, 3.0};
  auto nodes = deploy(cfg);
  Rng rng = Rng::for_stream(cfg.rng_seed, Stream::Election);
  const auto report = run_round(nodes, ProtocolKind::Easm, scenario_one_ctx(), RadioParams{},
                                cfg.bs_pos, rng);
  CHECK(report.round_index == 0);
  CHECK(report.alive_by_class[0] == 50);
  CHECK(report.alive_by_class[1] == 30);
  CHECK(report.alive_by_class[2] == 20);
  CHECK(report.deaths.empty());
  CHECK(report.energy_remaining_total <= 102.5);
  CHECK(report.energy_remaining_total == doctest::Approx(102.5 - report.energy_spent));
  CHECK(report.ch_count == report.cluster_heads.size());
  CHECK(report.bs_messages_total() ==
        (report.ch_count == 0 ? 100 : report.ch_count));
}

TEST_CASE("run_round with exhausted batteries") {
  std::vector<Node> nodes{at(0, 1, 1, 0.5), at(1, 2, 2, 0.5)};
  for (Node& n : nodes) n.e_residual = 0.0;
  Rng rng(1);
  const auto report =
      run_round(nodes, ProtocolKind::Leach, ElectionContext{}, RadioParams{}, {50, 175}, rng);
  CHECK(report.alive_total() == 0);
  CHECK(report.energy_spent == 0.0);
  CHECK(report.deaths == std::vector<NodeId>{0, 1});
  CHECK(report.bs_messages_total() == 0);
}

TEST_CASE("death is detected at the next round boundary and clamped") {
  std::vector<Node> nodes{at(0, 50, 50, 1e-4)};
  Rng rng(1);
  ElectionContext ctx;
  auto first = run_round(nodes, ProtocolKind::Leach, ctx, RadioParams{}, {50, 175}, rng);
  CHECK(first.alive_total() == 1);
  CHECK(first.deaths.empty());
  CHECK(nodes[0].e_residual == 0.0);
  CHECK(first.energy_clamped == doctest::Approx(first.energy_spent - 1e-4));
  ctx.round = 1;
  auto second = run_round(nodes, ProtocolKind::Leach, ctx, RadioParams{}, {50, 175}, rng);
  CHECK(second.deaths == std::vector<NodeId>{0});
  CHECK(second.alive_total() == 0);
}

TEST_CASE("energy accounting balances on random small networks") {
  std::mt19937_64 gen(31337);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    NetworkConfig cfg;
    cfg.n_nodes = 1 + gen() % 10;
    cfg.e0 = 0.002 + 0.01 * unit(gen);
    cfg.het = HeterogeneityParams{unit(gen), unit(gen), 1.0, 2.0};
    cfg.rng_seed = gen();
    auto nodes = deploy(cfg);
    const ProtocolKind kind = kProtocols[gen() % 3];
    Simulation sim(nodes, kind, ElectionContext{0, 0.1, cfg.het, ResetTrigger::ClassEpoch},
                   RadioParams{}, cfg.bs_pos, Rng(gen()));
    double previous_remaining = total_initial_energy(cfg) + 1.0;
    std::vector<double> previous_residual(nodes.size(), 1e9);
    for (int r = 0; r < 60 && !sim.all_dead(); ++r) {
      const std::vector<Node> before(sim.nodes().begin(), sim.nodes().end());
      const RoundReport report = sim.step();
      double before_sum = 0.0;
      double after_sum = 0.0;
      for (const Node& n : before) before_sum += n.e_residual;
      for (const Node& n : sim.nodes()) after_sum += n.e_residual;
      CHECK(std::abs(before_sum - (after_sum - report.energy_clamped) - report.energy_spent) <=
            1e-12);
      CHECK(report.energy_remaining_total <= previous_remaining);
      previous_remaining = report.energy_remaining_total;
      for (const Node& n : sim.nodes()) {
        CHECK(n.e_residual >= 0.0);
        CHECK(n.e_residual <= previous_residual[n.id]);
        previous_residual[n.id] = n.e_residual;
      }
    }
  }
}

TEST_CASE("simulation is a pure function of its inputs") {
  NetworkConfig cfg;
  cfg.het = HeterogeneityParams{0.5, 0.4, 1.5, 3.0};
  auto make = [&] {
    return Simulation(deploy(cfg), ProtocolKind::Easm, scenario_one_ctx(), RadioParams{},
                      cfg.bs_pos, Rng::for_stream(cfg.rng_seed, Stream::Election));
  };
  Simulation a = make();
  Simulation b = make();
  for (int r = 0; r < 300; ++r) {
    const auto ra = a.step();
    const auto rb = b.step();
    CHECK(ra.cluster_heads == rb.cluster_heads);
    CHECK(ra.energy_spent == rb.energy_spent);
    CHECK(ra.energy_remaining_total == rb.energy_remaining_total);
  }
  CHECK(std::equal(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end()));
}

TEST_CASE("steady state agrees with the brute-force oracle") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + gen() % 30;
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(at(static_cast<NodeId>(i), coord(gen), coord(gen)));
    std::vector<NodeId> heads;
    for (std::size_t i = 0; i < n; ++i)
      if (gen() % 5 == 0) heads.push_back(static_cast<NodeId>(i));
    const Position bs{50, 175};

    const auto expected = oracle::round_cost(nodes, heads, bs, oracle::Radio{});
    REQUIRE_FALSE(expected.tie);
    Rng rng(1);
    const auto a = form_clusters(nodes, heads, rng);
    const auto tally = run_steady_state(nodes, a, RadioParams{}, bs);
    CHECK(std::abs(tally.energy_spent - expected.total) <= 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs((0.5 - nodes[i].e_residual) - expected.per_node[i]) <= 1e-12);
    }
  }
}
