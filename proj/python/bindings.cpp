// Thin python surface over the JSON-speaking harness entry points.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shortlist/baselines.hpp"
#include "shortlist/harness.hpp"

namespace py = pybind11;
using namespace shortlist;

PYBIND11_MODULE(_shortlist, m) {
  m.doc() = "Online submodular maximization with shortlists";

  m.def(
      "generate",
      [](const std::string& kind, const std::string& constraint, int n, int k,
         std::uint64_t seed, int universe, int cover_size, int vertices) {
        GenSpec spec;
        spec.kind = kind;
        spec.constraint = constraint;
        spec.n = n;
        spec.k = k;
        spec.seed = seed;
        spec.universe = universe;
        spec.cover_size = cover_size;
        spec.vertices = vertices;
        return generate_instance(spec);
      },
      py::arg("kind") = "coverage", py::arg("constraint") = "uniform",
      py::arg("n") = 40, py::arg("k") = 4, py::arg("seed") = 1,
      py::arg("universe") = 0, py::arg("cover_size") = 3,
      py::arg("vertices") = 0,
      "Generate an instance and return its JSON text");

  m.def(
      "run",
      [](const std::string& instance_json, const std::string& mode,
         double epsilon, int alpha, int beta, int trials, std::uint64_t seed,
         bool with_opt, int opt_limit, int threads) {
        Instance inst = load_instance(instance_json);
        SweepConfig cfg;
        cfg.algo.mode = mode_from_name(mode);
        cfg.algo.epsilon = epsilon;
        cfg.algo.alpha = alpha;
        cfg.algo.beta = beta;
        cfg.trials = trials;
        cfg.base_seed = seed;
        cfg.with_opt = with_opt;
        cfg.opt_limit = opt_limit;
        cfg.threads = threads;
        SweepResult res = run_sweep(inst, cfg);
        return sweep_to_json(inst, cfg, res);
      },
      py::arg("instance_json"), py::arg("mode") = "full",
      py::arg("epsilon") = 0.2, py::arg("alpha") = 1, py::arg("beta") = 1,
      py::arg("trials") = 10, py::arg("seed") = 1, py::arg("with_opt") = false,
      py::arg("opt_limit") = 20, py::arg("threads") = 1,
      "Run seeded trials and return the sweep report JSON");

  m.def(
      "compare",
      [](const std::string& instance_json, const std::string& mode,
         const std::string& other, double epsilon, int alpha, int beta,
         int trials, std::uint64_t seed) {
        Instance inst = load_instance(instance_json);
        CompareConfig cfg;
        cfg.base.mode = mode_from_name(mode);
        cfg.base.epsilon = epsilon;
        cfg.base.alpha = alpha;
        cfg.base.beta = beta;
        cfg.other = mode_from_name(other);
        cfg.trials = trials;
        cfg.base_seed = seed;
        CompareResult res = compare_modes(inst, cfg);
        return compare_to_json(inst, cfg, res);
      },
      py::arg("instance_json"), py::arg("mode") = "full",
      py::arg("other") = "streaming", py::arg("epsilon") = 0.2,
      py::arg("alpha") = 1, py::arg("beta") = 1, py::arg("trials") = 10,
      py::arg("seed") = 1,
      "Run two modes on identical seeds and return the comparison JSON");

  m.def(
      "opt",
      [](const std::string& instance_json, int limit) {
        Instance inst = load_instance(instance_json);
        BaselineResult r =
            exhaustive_opt(*inst.objective, inst.constraint, limit);
        return py::make_tuple(r.value, r.set.ids());
      },
      py::arg("instance_json"), py::arg("limit") = 20,
      "Exhaustive optimum over the ground set: (value, ids)");

  m.def(
      "greedy",
      [](const std::string& instance_json) {
        Instance inst = load_instance(instance_json);
        BaselineResult r = offline_greedy(*inst.objective, inst.constraint);
        return py::make_tuple(r.value, r.set.ids());
      },
      py::arg("instance_json"),
      "Offline greedy over the ground set: (value, ids)");

  m.def(
      "check_fn",
      [](const std::string& instance_json, int max_n) {
        Instance inst = load_instance(instance_json);
        const int n = std::min(max_n, inst.objective->ground_size());
        SubmodularityReport rep = check_submodular(*inst.objective, n);
        return py::make_tuple(rep.ok, rep.witness);
      },
      py::arg("instance_json"), py::arg("max_n") = 12,
      "Exhaustively test monotonicity and diminishing returns: (ok, witness)");
}
