#include <doctest.h>

#include <atomic>

#include "ising/anneal.hpp"
#include "ising/errors.hpp"
#include "ising/evaluate.hpp"
#include "ising/gen.hpp"
#include "test_support.hpp"

using namespace ising;
using namespace test_support;

TEST_CASE("flip_probability schedule") {
  AnnealParams p;
  p.sweeps = 1000;
  p.flip_fraction0 = 0.20; // N = 500, N_rf = 100
  p.decay_rate = 0.99;
  CHECK(flip_probability(p, 0) == 0.20);
  CHECK(flip_probability(p, 999) ==
        doctest::Approx(8.7e-6).epsilon(0.01)); // 0.20 * 0.99^999

  p.flip_fraction0 = 0.0;
  for (std::int32_t k : {0, 1, 500, 999}) CHECK(flip_probability(p, k) == 0.0);

  CHECK_THROWS_AS(flip_probability(p, -1), config_error);
  CHECK_THROWS_AS(flip_probability(p, 1000), config_error);
}

TEST_CASE("default_params_for") {
  Graph g = random_graph(100, 200, 1);
  AnnealParams gdi = default_params_for(Strategy::gdi, g);
  AnnealParams std_ = default_params_for(Strategy::standard, g);
  CHECK(gdi.flip_fraction0 == 0.04);
  CHECK(std_.flip_fraction0 == 5.0 * gdi.flip_fraction0);
  CHECK(gdi.decay_rate == 0.99);
  CHECK(gdi.sweeps == 1000);

  AnnealParams det = gdi;
  det.deterministic = true;
  det.workers = 8;
  CHECK(det.validated().workers == 1); // deterministic forces one worker
  CHECK(gdi.validated().workers >= 1);
}

TEST_CASE("params validation") {
  AnnealParams p;
  p.sweeps = 0;
  CHECK_THROWS_AS(p.validated(), config_error);
  p.sweeps = 10;
  p.flip_fraction0 = 1.5;
  CHECK_THROWS_AS(p.validated(), config_error);
  p.flip_fraction0 = 0.1;
  p.decay_rate = 1.0;
  CHECK_THROWS_AS(p.validated(), config_error);
  p.decay_rate = 0.5;
  CHECK_NOTHROW(p.validated());
}

TEST_CASE("anneal finds the 2-node optimum") {
  Graph g = Graph::parse_gset("2 1\n1 2 1");
  MinCutProblem p = MinCutProblem::make_unchecked(g, {1, 1, 1});
  AnnealParams params;
  params.sweeps = 50;
  params.flip_fraction0 = 0.2;
  params.decay_rate = 0.9;
  params.deterministic = true;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    params.seed = seed;
    AnnealResult r = anneal(p, params);
    CHECK(cut_value(g, r.state) == 1);
    CHECK(imbalance(r.state) == 0);
    CHECK(r.trace.size() == 50);
  }
}

TEST_CASE("anneal finds the 4-cycle optimum") {
  Graph c4 = Graph::parse_gset("4 4\n1 2 1\n2 3 1\n3 4 1\n4 1 1");
  CHECK(exhaustive_balanced_optimum(c4, 0) == 2);
  MinCutProblem p = MinCutProblem::make_unchecked(c4, {1, 1, 1});
  AnnealParams params;
  params.sweeps = 100;
  params.flip_fraction0 = 0.2;
  params.decay_rate = 0.9;
  params.deterministic = true;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    params.seed = seed;
    AnnealResult r = anneal(p, params);
    if (cut_value(c4, r.state) == 2 && imbalance(r.state) == 0) hits++;
  }
  // A=B=1 leaves the alternating state as a competing local minimum; most
  // seeds still settle on the optimum and the best-of protocol always does.
  CHECK(hits >= 6);

  MinCutProblem tuned = MinCutProblem::with_default_coefficients(c4);
  for (std::uint64_t seed = 1; seed <= 5; seed++) {
    params.seed = seed;
    AnnealResult r = anneal(tuned, params);
    CHECK(cut_value(c4, r.state) == 2);
    CHECK(imbalance(r.state) == 0);
  }
}

TEST_CASE("greedy descent never increases the Hamiltonian") {
  Rng rng(1234);
  for (int t = 0; t < 5; t++) {
    auto n = static_cast<std::int32_t>(8 + rng.next_below(30));
    Graph g = random_weighted_graph(n, rng.next_below(3 * n + 1), rng);
    Coefficients c{1, 4, 1};
    MinCutProblem p = MinCutProblem::make_unchecked(g, c);

    AnnealParams params;
    params.sweeps = 20;
    params.flip_fraction0 = 0.0;
    params.deterministic = true;
    params.seed = rng.next();

    std::int64_t prev = INT64_MAX;
    int violations = 0;
    AnnealHooks hooks;
    hooks.on_update = [&](std::int32_t, std::span<const Spin> spins) {
      SpinState s(spins.begin(), spins.end());
      std::int64_t h = naive_hamiltonian_scaled(g, c, s);
      if (h > prev) violations++;
      prev = h;
    };
    anneal(p, params, &hooks);
    CHECK(violations == 0);
  }
}

TEST_CASE("every node is visited exactly once per sweep") {
  Graph g = random_graph(37, 60, 3);
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 11;
  params.deterministic = true;
  std::int64_t updates = 0;
  AnnealHooks hooks;
  hooks.on_update = [&](std::int32_t, std::span<const Spin>) { updates++; };
  anneal(p, params, &hooks);
  CHECK(updates == 11 * 37);
}

TEST_CASE("gdi counter matches the spin sum at every sweep barrier") {
  Graph g = random_graph(1000, 3000, 17);
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 50;
  params.strategy = Strategy::gdi;
  params.workers = 4;
  params.flip_fraction0 = 0.2; // plenty of concurrent counter traffic
  params.decay_rate = 0.99;
  params.seed = 7;

  std::atomic<int> mismatches{0};
  std::atomic<int> barriers{0};
  AnnealHooks hooks;
  hooks.on_sweep_end = [&](std::int32_t, std::span<const Spin> spins,
                           std::int64_t counter) {
    std::int64_t total = 0;
    for (Spin s : spins) total += s;
    if (total != counter) mismatches.fetch_add(1);
    barriers.fetch_add(1);
  };
  anneal(p, params, &hooks);
  CHECK(barriers.load() == 50);
  CHECK(mismatches.load() == 0);
}

TEST_CASE("deterministic runs are bit-reproducible") {
  Graph g = random_graph(200, 800, 9);
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 60;
  params.deterministic = true;
  params.seed = 42;

  AnnealResult a = anneal(p, params);
  AnnealResult b = anneal(p, params);
  CHECK(a.state == b.state);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t k = 0; k < a.trace.size(); k++) {
    CHECK(a.trace[k].hamiltonian_scaled == b.trace[k].hamiltonian_scaled);
    CHECK(a.trace[k].cut == b.trace[k].cut);
    CHECK(a.trace[k].imbalance == b.trace[k].imbalance);
    CHECK(a.trace[k].flip_probability == b.trace[k].flip_probability);
  }
}

TEST_CASE("one parallel worker reproduces deterministic mode") {
  Graph g = random_graph(300, 900, 21);
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 40;
  params.seed = 13;

  params.deterministic = true;
  AnnealResult det = anneal(p, params);
  params.deterministic = false;
  params.workers = 1;
  AnnealResult one = anneal(p, params);
  CHECK(det.state == one.state);
  for (std::size_t k = 0; k < det.trace.size(); k++)
    CHECK(det.trace[k].hamiltonian_scaled == one.trace[k].hamiltonian_scaled);
}

TEST_CASE("standard and gdi coincide in deterministic mode") {
  Rng rng(88);
  for (int t = 0; t < 5; t++) {
    auto n = static_cast<std::int32_t>(10 + rng.next_below(40));
    Graph g = random_graph(n, 2 * n, rng.next());
    MinCutProblem p = MinCutProblem::with_default_coefficients(g);
    AnnealParams params;
    params.sweeps = 40;
    params.deterministic = true;
    params.seed = rng.next();

    params.strategy = Strategy::standard;
    AnnealResult s = anneal(p, params);
    params.strategy = Strategy::gdi;
    AnnealResult d = anneal(p, params);
    CHECK(s.state == d.state);
  }
}

TEST_CASE("trace has one record per sweep with non-increasing flip probability") {
  Graph g = random_graph(50, 100, 5);
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 30;
  params.flip_fraction0 = 0.3;
  params.decay_rate = 0.95;
  params.deterministic = true;
  AnnealResult r = anneal(p, params);
  REQUIRE(r.trace.size() == 30);
  for (std::size_t k = 0; k < r.trace.size(); k++) {
    CHECK(r.trace[k].flip_probability ==
          flip_probability(params, static_cast<std::int32_t>(k)));
    if (k > 0)
      CHECK(r.trace[k].flip_probability <= r.trace[k - 1].flip_probability);
  }
}

TEST_CASE("single-node graph anneals without incident") {
  Graph g = Graph::from_edges(1, {});
  MinCutProblem p = MinCutProblem::with_default_coefficients(g);
  AnnealParams params;
  params.sweeps = 5;
  params.deterministic = true;
  AnnealResult r = anneal(p, params);
  CHECK(r.state.size() == 1);
  CHECK(imbalance(r.state) == 1);
}
