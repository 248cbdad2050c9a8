#include <doctest.h>

#include "ising/errors.hpp"
#include "ising/evaluate.hpp"
#include "ising/gen.hpp"
#include "test_support.hpp"

using namespace ising;
using namespace test_support;

TEST_CASE("cut_value worked examples") {
  Graph g2 = Graph::parse_gset("2 1\n1 2 1");
  CHECK(cut_value(g2, {1, -1}) == 1);

  // C4 split into adjacent pairs -> 2 (confirmed optimal by enumeration)
  Graph c4 = Graph::parse_gset("4 4\n1 2 1\n2 3 1\n3 4 1\n4 1 1");
  CHECK(cut_value(c4, {1, 1, -1, -1}) == 2);
  CHECK(exhaustive_balanced_optimum(c4, 0) == 2);

  // K4 split 2/2: 6 edges, 2 internal, 4 crossing
  Graph k4 = Graph::parse_gset("4 6\n1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1");
  CHECK(cut_value(k4, {1, 1, -1, -1}) == 4);

  CHECK_THROWS_AS(cut_value(k4, {1, 1, -1}), domain_error);
}

TEST_CASE("imbalance worked examples") {
  CHECK(imbalance({1, -1, 1, -1}) == 0);
  CHECK(imbalance({1, 1, 1, 1, 1}) == 5);
  CHECK(imbalance({1, 1, -1}) == 1);
}

TEST_CASE("oracle: path graph P4 balanced optimum") {
  Graph p4 = Graph::parse_gset("4 3\n1 2 1\n2 3 1\n3 4 1");
  OracleResult r = brute_force_balanced_mincut(p4, 0);
  CHECK(r.cut == 1);
  CHECK(r.witness == SpinState{1, 1, -1, -1}); // {1,2} | {3,4}
  CHECK(r.cut == exhaustive_balanced_optimum(p4, 0));
}

TEST_CASE("oracle: K4 and separable components") {
  Graph k4 = Graph::parse_gset("4 6\n1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1");
  CHECK(brute_force_balanced_mincut(k4, 0).cut == 4);

  Graph two_edges = Graph::parse_gset("4 2\n1 2 1\n3 4 1");
  CHECK(brute_force_balanced_mincut(two_edges, 0).cut == 0);
}

TEST_CASE("oracle guards") {
  Graph big = Graph::from_edges(25, {});
  CHECK_THROWS_AS(brute_force_balanced_mincut(big, 0), capacity_error);

  Graph odd = Graph::from_edges(3, {});
  CHECK_THROWS_AS(brute_force_balanced_mincut(odd, 0), domain_error);
  CHECK_NOTHROW(brute_force_balanced_mincut(odd, 1));
}

TEST_CASE("oracle matches the 2^N reference on random instances") {
  Rng rng(606);
  for (int t = 0; t < 30; t++) {
    auto n = static_cast<std::int32_t>(4 + rng.next_below(9)); // 4..12
    Graph g = random_weighted_graph(n, rng.next_below(2 * n + 1), rng);
    std::int64_t bound = (n % 2) + 2 * static_cast<std::int64_t>(rng.next_below(3));
    OracleResult r = brute_force_balanced_mincut(g, bound);
    CHECK(r.cut == exhaustive_balanced_optimum(g, bound));
    CHECK(imbalance(r.witness) <= bound);
    CHECK(cut_value(g, r.witness) == r.cut);
    CHECK(r.witness[0] == 1);
  }
}

TEST_CASE("oracle lower-bounds any feasible state") {
  Rng rng(77);
  Graph g = random_connected_gnp(10, 0.4, 11);
  OracleResult r = brute_force_balanced_mincut(g, 0);
  for (int t = 0; t < 200; t++) {
    SpinState s = random_state(10, rng);
    if (imbalance(s) > 0) continue;
    CHECK(cut_value(g, s) >= r.cut);
  }
}

TEST_CASE("score ties the Hamiltonian identity together") {
  Rng rng(404);
  for (int t = 0; t < 100; t++) {
    auto n = static_cast<std::int32_t>(2 + rng.next_below(30));
    Graph g = random_weighted_graph(n, rng.next_below(3 * n + 1), rng);
    Coefficients c{static_cast<std::int64_t>(1 + rng.next_below(9)),
                   static_cast<std::int64_t>(1 + rng.next_below(9)), 1};
    MinCutProblem p = MinCutProblem::make_unchecked(g, c);
    SpinState s = random_state(n, rng);

    PartitionScore sc = score(p, s);
    CHECK(sc.cut == naive_cut(g, s));
    CHECK(sc.imbalance == imbalance(s));
    CHECK(sc.imbalance % 2 == n % 2);
    CHECK(sc.hamiltonian_scaled ==
          c.a_num * sc.imbalance * sc.imbalance + c.b_num * sc.cut);
    CHECK(sc.hamiltonian_scaled == global_hamiltonian_scaled(p, s));

    // negation invariance
    SpinState neg(s.size());
    for (std::size_t i = 0; i < s.size(); i++) neg[i] = static_cast<Spin>(-s[i]);
    CHECK(cut_value(g, neg) == sc.cut);
    CHECK(imbalance(neg) == sc.imbalance);
  }
}
