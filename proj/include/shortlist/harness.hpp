#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shortlist/constraints.hpp"
#include "shortlist/shortlist_core.hpp"
#include "shortlist/stream_windows.hpp"
#include "shortlist/submodular.hpp"

namespace shortlist {

// A loaded experiment instance: objective + constraint + stream length.
// Hardness instances draw their per-trial stream (one type-A item plus all
// type-B items) from the trial seed; everything else streams the full ground.
struct Instance {
  OraclePtr objective;
  ConstraintOracle constraint;
  std::string objective_kind;   // coverage | modular | facility | hardness
  std::string constraint_kind;  // uniform | partition | graphic | matchoid
  int n = 0;
  std::optional<HardnessLayout> hardness;
};

struct GenSpec {
  std::string kind = "coverage";
  std::string constraint = "uniform";  // uniform | partition | graphic | matching
  int n = 40;
  int k = 4;
  std::uint64_t seed = 1;
  int universe = 0;    // coverage; 0 = default n
  int cover_size = 3;  // coverage: ids covered per item
  int vertices = 0;    // graphic / matching; 0 = default k + 1
};

std::string generate_instance(const GenSpec& spec);
Instance load_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);

std::string mode_name(RunMode mode);
RunMode mode_from_name(const std::string& name);

// Stream items for one trial, chaining all per-trial randomness off `rng` in
// a fixed order (hardness family draw, then the shuffle, then the plan).
std::vector<ItemId> trial_items(const Instance& inst, Rng& rng);

struct TrialRow {
  std::uint64_t seed = 0;
  double f_out = 0.0;
  std::optional<double> f_opt;
  double f_greedy = 0.0;
  double f_best_of_shortlist = 0.0;
  std::optional<double> ratio;  // f_out / f_opt, only when opt was computed
  double ratio_vs_greedy = 0.0;
  int shortlist_size = 0;
  int shortlist_bound = 0;
  std::size_t buffer_hw = 0;
  std::uint64_t eval_count = 0;
  double amortized_evals = 0.0;
  double wall_ms = 0.0;  // excluded from determinism guarantees
  bool feasible_ok = true;
  bool cap_ok = true;
  bool buffer_ok = true;
};

struct SweepConfig {
  AlgoConfig algo;
  int trials = 10;
  std::uint64_t base_seed = 1;
  bool with_opt = false;
  int opt_limit = 20;
  int threads = 1;
};

struct SweepResult {
  std::vector<TrialRow> rows;
  bool hard_failure = false;  // any feasibility or cap violation
};

TrialRow run_single(const Instance& inst, const AlgoConfig& algo,
                    std::uint64_t seed, bool with_opt = false,
                    int opt_limit = 20);
SweepResult run_sweep(const Instance& inst, const SweepConfig& cfg);

// ceil(4 k beta C(alpha*beta, alpha) ln(2/epsilon)); preemption mode uses k.
int shortlist_cap_bound(int k, int alpha, int beta, double epsilon,
                        RunMode mode);

std::string sweep_to_json(const Instance& inst, const SweepConfig& cfg,
                          const SweepResult& res);
std::string sweep_to_csv(const SweepResult& res);

struct CompareConfig {
  AlgoConfig base;          // mode taken as the left side
  RunMode other = RunMode::Streaming;
  int trials = 10;
  std::uint64_t base_seed = 1;
};

struct CompareResult {
  bool identical = true;
  // First divergence, empty when identical: seed + window + what differed.
  std::string divergence;
  double mean_buffer_base = 0.0;
  double mean_buffer_other = 0.0;
};

// Runs both modes on the same seeds and compares outputs window by window.
// full/streaming must match on (A, A*); full/preemption compares A* and
// requires the preemption shortlist to embed into the full one.
CompareResult compare_modes(const Instance& inst, const CompareConfig& cfg);

std::string compare_to_json(const Instance& inst, const CompareConfig& cfg,
                            const CompareResult& res);

}  // namespace shortlist
