// Command line front end: instance generation, sweeps, mode comparison,
// offline baselines, objective checking, and the bare secretary subroutine.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shortlist/baselines.hpp"
#include "shortlist/harness.hpp"
#include "shortlist/replacement_secretary.hpp"

namespace {

using nlohmann::json;
using namespace shortlist;

void emit(std::string text, const std::string& out_path) {
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int default_threads() {
  const char* env = std::getenv("SHORTLIST_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

json set_to_json(const ItemSet& s) {
  json arr = json::array();
  for (ItemId e : s) arr.push_back(e);
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online submodular maximization with shortlists"};
  app.require_subcommand(1);

  GenSpec gen;
  std::string gen_out;
  auto* cmd_gen = app.add_subcommand("gen", "Generate an instance file");
  cmd_gen->add_option("--kind", gen.kind, "coverage|modular|facility|hardness")
      ->default_val("coverage");
  cmd_gen->add_option("--constraint", gen.constraint,
                      "uniform|partition|graphic|matching")
      ->default_val("uniform");
  cmd_gen->add_option("--n", gen.n, "stream length")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--k", gen.k, "rank parameter")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--seed", gen.seed, "generator seed");
  cmd_gen->add_option("--universe", gen.universe,
                      "coverage universe / facility clients (0 = n)");
  cmd_gen->add_option("--cover-size", gen.cover_size, "ids covered per item");
  cmd_gen->add_option("--vertices", gen.vertices,
                      "graph vertices (0 = default)");
  cmd_gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  std::string run_instance, run_mode = "full", run_format = "json", run_out;
  SweepConfig sweep;
  auto* cmd_run = app.add_subcommand("run", "Run seeded trial sweeps");
  cmd_run->add_option("--instance", run_instance, "instance JSON path")
      ->required();
  cmd_run->add_option("--mode", run_mode, "full|preemption|streaming");
  cmd_run->add_option("--epsilon", sweep.algo.epsilon, "accuracy parameter")
      ->check(CLI::Range(1e-9, 1.999999));
  cmd_run->add_option("--alpha", sweep.algo.alpha, "window numerator")
      ->check(CLI::PositiveNumber);
  cmd_run->add_option("--beta", sweep.algo.beta, "slots per window unit")
      ->check(CLI::PositiveNumber);
  cmd_run->add_option("--trials", sweep.trials, "number of seeded trials")
      ->check(CLI::PositiveNumber);
  cmd_run->add_option("--seed", sweep.base_seed, "first trial seed");
  cmd_run->add_flag("--with-opt", sweep.with_opt,
                    "also compute the exhaustive optimum per trial");
  cmd_run->add_option("--opt-limit", sweep.opt_limit,
                      "largest pool exhaustive search accepts");
  cmd_run->add_option("--threads", sweep.threads,
                      "worker threads (default SHORTLIST_THREADS or 1)");
  cmd_run->add_option("--format", run_format, "json|csv");
  cmd_run->add_option("-o,--output", run_out, "output path (default stdout)");

  std::string cmp_instance, cmp_mode = "full", cmp_other = "streaming", cmp_out;
  CompareConfig cmp;
  auto* cmd_cmp =
      app.add_subcommand("compare", "Run two modes on identical seeds");
  cmd_cmp->add_option("--instance", cmp_instance, "instance JSON path")
      ->required();
  cmd_cmp->add_option("--mode", cmp_mode, "left mode");
  cmd_cmp->add_option("--other", cmp_other, "right mode");
  cmd_cmp->add_option("--epsilon", cmp.base.epsilon, "accuracy parameter")
      ->check(CLI::Range(1e-9, 1.999999));
  cmd_cmp->add_option("--alpha", cmp.base.alpha, "window numerator")
      ->check(CLI::PositiveNumber);
  cmd_cmp->add_option("--beta", cmp.base.beta, "slots per window unit")
      ->check(CLI::PositiveNumber);
  cmd_cmp->add_option("--trials", cmp.trials, "number of seeded trials")
      ->check(CLI::PositiveNumber);
  cmd_cmp->add_option("--seed", cmp.base_seed, "first trial seed");
  cmd_cmp->add_option("-o,--output", cmp_out, "output path (default stdout)");

  std::string opt_instance, opt_out;
  int opt_limit = 20;
  auto* cmd_opt =
      app.add_subcommand("opt", "Exhaustive optimum over the ground set");
  cmd_opt->add_option("--instance", opt_instance, "instance JSON path")
      ->required();
  cmd_opt->add_option("--limit", opt_limit,
                      "largest ground exhaustive search accepts");
  cmd_opt->add_option("-o,--output", opt_out, "output path (default stdout)");

  std::string greedy_instance, greedy_out;
  auto* cmd_greedy =
      app.add_subcommand("greedy", "Offline greedy over the ground set");
  cmd_greedy->add_option("--instance", greedy_instance, "instance JSON path")
      ->required();
  cmd_greedy->add_option("-o,--output", greedy_out,
                         "output path (default stdout)");

  std::string chk_instance, chk_out;
  int chk_max_n = 12;
  auto* cmd_chk = app.add_subcommand(
      "check-fn", "Exhaustively test monotonicity and diminishing returns");
  cmd_chk->add_option("--instance", chk_instance, "instance JSON path")
      ->required();
  cmd_chk->add_option("--max-n", chk_max_n, "ground prefix size to test")
      ->check(CLI::Range(1, 16));
  cmd_chk->add_option("-o,--output", chk_out, "output path (default stdout)");

  int sec_n = 200;
  double sec_delta = 0.2;
  int sec_trials = 5000;
  std::uint64_t sec_seed = 0, sec_values_seed = 12345;
  std::string sec_out;
  auto* cmd_sec = app.add_subcommand(
      "secretary-max", "Measure the single-item subroutine's capture rate");
  cmd_sec->add_option("--n", sec_n, "stream length")->check(CLI::PositiveNumber);
  cmd_sec->add_option("--delta", sec_delta, "failure parameter")
      ->check(CLI::Range(1e-9, 1.999999));
  cmd_sec->add_option("--trials", sec_trials, "number of shuffled orders")
      ->check(CLI::PositiveNumber);
  cmd_sec->add_option("--seed", sec_seed, "first shuffle seed");
  cmd_sec->add_option("--values-seed", sec_values_seed,
                      "seed for the fixed value vector");
  cmd_sec->add_option("-o,--output", sec_out, "output path (default stdout)");

  sweep.threads = default_threads();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      emit(generate_instance(gen), gen_out);
      return 0;
    }
    if (*cmd_run) {
      Instance inst = load_instance_file(run_instance);
      sweep.algo.mode = mode_from_name(run_mode);
      SweepResult res = run_sweep(inst, sweep);
      if (run_format == "csv") {
        emit(sweep_to_csv(res), run_out);
      } else if (run_format == "json") {
        emit(sweep_to_json(inst, sweep, res), run_out);
      } else {
        throw std::invalid_argument("format: expected json|csv");
      }
      if (res.hard_failure) {
        std::cerr << "hard invariant violation in at least one trial\n";
        return 2;
      }
      return 0;
    }
    if (*cmd_cmp) {
      Instance inst = load_instance_file(cmp_instance);
      cmp.base.mode = mode_from_name(cmp_mode);
      cmp.other = mode_from_name(cmp_other);
      CompareResult res = compare_modes(inst, cmp);
      emit(compare_to_json(inst, cmp, res), cmp_out);
      return res.identical ? 0 : 2;
    }
    if (*cmd_opt) {
      Instance inst = load_instance_file(opt_instance);
      BaselineResult r =
          exhaustive_opt(*inst.objective, inst.constraint, opt_limit);
      json out{{"value", r.value}, {"set", set_to_json(r.set)}};
      emit(out.dump(2), opt_out);
      return 0;
    }
    if (*cmd_greedy) {
      Instance inst = load_instance_file(greedy_instance);
      BaselineResult r = offline_greedy(*inst.objective, inst.constraint);
      json out{{"value", r.value}, {"set", set_to_json(r.set)}};
      emit(out.dump(2), greedy_out);
      return 0;
    }
    if (*cmd_chk) {
      Instance inst = load_instance_file(chk_instance);
      const int n = std::min(chk_max_n, inst.objective->ground_size());
      SubmodularityReport rep = check_submodular(*inst.objective, n);
      json out{{"ok", rep.ok}, {"tested_prefix", n}, {"witness", rep.witness}};
      emit(out.dump(2), chk_out);
      return rep.ok ? 0 : 1;
    }
    if (*cmd_sec) {
      Rng vrng(sec_values_seed);
      std::vector<double> values(static_cast<std::size_t>(sec_n));
      for (auto& v : values) v = rng_unit(vrng);
      const auto best =
          std::max_element(values.begin(), values.end()) - values.begin();

      const ReplacementConfig rc = ReplacementConfig::make(sec_n, sec_delta);
      int captured = 0;
      int max_selected = 0;
      double mean_selected = 0.0;
      std::vector<ItemId> order(static_cast<std::size_t>(sec_n));
      std::iota(order.begin(), order.end(), 0);
      for (int t = 0; t < sec_trials; ++t) {
        Rng rng(sec_seed + static_cast<std::uint64_t>(t));
        shuffle_items(order, rng);
        ReplacementRun run(rc);
        for (ItemId e : order) run.step(values[static_cast<std::size_t>(e)], e);
        const ReplacementOutcome out = run.finalize();
        bool hit = false;
        for (const auto& sel : out.selections) {
          if (sel.item == static_cast<ItemId>(best)) hit = true;
        }
        captured += hit;
        const int count = static_cast<int>(out.selections.size());
        mean_selected += count;
        max_selected = std::max(max_selected, count);
      }
      mean_selected /= sec_trials;

      json out{{"n", sec_n},
               {"delta", sec_delta},
               {"warmup", rc.warmup},
               {"cap", rc.cap},
               {"trials", sec_trials},
               {"capture_rate", static_cast<double>(captured) / sec_trials},
               {"mean_selected", mean_selected},
               {"max_selected", max_selected}};
      emit(out.dump(2), sec_out);
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
