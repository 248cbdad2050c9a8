#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ising/model.hpp"

namespace ising {

enum class Strategy { standard, gdi };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& name); // throws config_error

struct AnnealParams {
  std::int32_t sweeps = 1000;
  double flip_fraction0 = 0.04;  // P_f at sweep 0
  double decay_rate = 0.99;      // per-sweep multiplier on P_f
  Strategy strategy = Strategy::gdi;
  std::int32_t workers = 0;      // 0 = hardware parallelism
  std::uint64_t seed = 1;
  bool deterministic = false;    // single-worker sequential mode

  // Throws config_error on violations; resolves workers (deterministic forces
  // 1, 0 becomes hardware parallelism).
  AnnealParams validated() const;
};

// P_f at sweep k: flip_fraction0 * decay_rate^k.
double flip_probability(const AnnealParams& params, std::int32_t sweep_index);

// gdi: flip_fraction0 = 0.04; standard: 5x that (0.20). Both: decay 0.99,
// 1000 sweeps, hardware worker count.
AnnealParams default_params_for(Strategy strategy, const Graph& g);

struct TraceRecord {
  std::int64_t hamiltonian_scaled;
  double hamiltonian;
  std::int64_t cut;
  std::int64_t imbalance;
  double flip_probability;
  double seconds; // update-phase wall time of this sweep
};

struct AnnealResult {
  SpinState state;
  std::vector<TraceRecord> trace; // exactly params.sweeps records
  double seconds;                 // total update-phase wall time
};

// Test/observer hooks. on_sweep_end runs single-threaded at the sweep barrier
// with the live spins and the balance counter value (gdi keeps it during the
// sweep; standard recomputes it at the barrier). on_update fires after every
// node visit and is honored only when a single worker runs.
struct AnnealHooks {
  std::function<void(std::int32_t sweep, std::span<const Spin> spins,
                     std::int64_t balance_counter)>
      on_sweep_end;
  std::function<void(std::int32_t node, std::span<const Spin> spins)> on_update;
};

// Alg: random +-1 init from the seed, then `sweeps` passes; each pass visits
// every node once, sets it to the argmin of its candidate energies (exact
// ties -> unbiased coin), then flips it with probability P_f; P_f decays at
// the sweep barrier.
//   standard: balance excluding i is re-summed over the whole spin array per
//             visit, unsynchronized (racy reads across cells are permitted).
//   gdi:      balance comes from one shared counter, read once per visit;
//             every spin change (argmin or flip) applies its signed delta
//             with one atomic add.
AnnealResult anneal(const MinCutProblem& problem, const AnnealParams& params,
                    const AnnealHooks* hooks = nullptr);

} // namespace ising
