#include "shortlist/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "shortlist/baselines.hpp"

namespace shortlist {

using nlohmann::json;

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Full: return "full";
    case RunMode::Preemption: return "preemption";
    case RunMode::Streaming: return "streaming";
  }
  return "full";
}

RunMode mode_from_name(const std::string& name) {
  if (name == "full") return RunMode::Full;
  if (name == "preemption") return RunMode::Preemption;
  if (name == "streaming") return RunMode::Streaming;
  throw std::invalid_argument("mode: expected full|preemption|streaming, got " +
                              name);
}

namespace {

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
  }
  return acc;
}

json matroid_to_json_uniform(int ground, int k) {
  return json{{"type", "uniform"}, {"ground", ground}, {"k", k}};
}

MatroidPtr parse_matroid(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") {
    return make_uniform_matroid(j.at("ground").get<int>(),
                                j.at("k").get<int>());
  }
  if (type == "partition") {
    std::vector<std::vector<ItemId>> blocks;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back(b.get<std::vector<ItemId>>());
    }
    return make_partition_matroid(j.at("ground").get<int>(), std::move(blocks),
                                  j.at("caps").get<std::vector<int>>());
  }
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return make_graphic_matroid(j.at("vertices").get<int>(), std::move(edges));
  }
  throw std::invalid_argument("instance: unknown matroid type " + type);
}

ConstraintOracle parse_constraint(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "matchoid") {
    std::vector<MatchoidMember> members;
    for (const auto& m : j.at("members")) {
      MatchoidMember mem;
      mem.matroid = parse_matroid(m.at("matroid"));
      mem.ground = ItemSet(m.at("ground_ids").get<std::vector<ItemId>>());
      members.push_back(std::move(mem));
    }
    auto q = std::make_shared<Matchoid>(j.at("p").get<int>(),
                                        j.at("ground").get<int>(),
                                        std::move(members));
    ConstraintOracle c{MatchoidPtr(q)};
    if (j.contains("k")) c.set_k(j.at("k").get<int>());
    return c;
  }
  return ConstraintOracle{parse_matroid(j)};
}

}  // namespace

std::string generate_instance(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be positive");
  if (spec.k < 1) throw std::invalid_argument("generate: k must be positive");
  Rng rng(spec.seed);
  json inst;
  inst["schema_version"] = 1;
  inst["n"] = spec.n;

  json cons;
  if (spec.kind == "hardness") {
    if (spec.n % (2 * spec.k) != 0) {
      throw std::invalid_argument(
          "generate: hardness needs n divisible by 2k");
    }
    const int L = spec.n / (2 * spec.k);
    const int ground = L + spec.n - 1;
    inst["type"] = "hardness";
    inst["params"] = json{{"k", spec.k}, {"L", L}, {"ground", ground}};
    cons = matroid_to_json_uniform(ground, spec.k + 1);
  } else if (spec.kind == "coverage") {
    const int universe = spec.universe > 0 ? spec.universe : spec.n;
    if (spec.cover_size < 1 || spec.cover_size > universe) {
      throw std::invalid_argument("generate: cover size outside the universe");
    }
    json covers = json::array();
    for (int e = 0; e < spec.n; ++e) {
      // sample cover_size distinct universe ids
      std::vector<int> pool(universe);
      std::iota(pool.begin(), pool.end(), 0);
      std::vector<int> cover;
      for (int c = 0; c < spec.cover_size; ++c) {
        std::size_t idx = rng_below(rng, pool.size());
        cover.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
      }
      std::sort(cover.begin(), cover.end());
      covers.push_back(cover);
    }
    std::vector<double> weights(universe, 1.0);
    inst["type"] = "coverage";
    inst["params"] = json{{"universe", universe},
                          {"covers", covers},
                          {"weights", weights}};
  } else if (spec.kind == "modular") {
    std::vector<double> weights(spec.n);
    for (auto& w : weights) w = rng_unit(rng);
    inst["type"] = "modular";
    inst["params"] = json{{"weights", weights}};
  } else if (spec.kind == "facility") {
    const int clients = spec.universe > 0 ? spec.universe : spec.n;
    json sim = json::array();
    for (int r = 0; r < clients; ++r) {
      std::vector<double> row(spec.n);
      for (auto& v : row) v = rng_unit(rng);
      sim.push_back(row);
    }
    inst["type"] = "facility";
    inst["params"] = json{{"similarity", sim}};
  } else {
    throw std::invalid_argument("generate: unknown objective kind " +
                                spec.kind);
  }

  if (spec.kind != "hardness") {
    if (spec.constraint == "uniform") {
      cons = matroid_to_json_uniform(spec.n, spec.k);
    } else if (spec.constraint == "partition") {
      if (spec.n < spec.k) {
        throw std::invalid_argument("generate: partition needs n >= k blocks");
      }
      json blocks = json::array();
      std::vector<int> caps(spec.k, 1);
      for (int b = 0; b < spec.k; ++b) {
        // balanced contiguous chunks covering the ground exactly
        const int lo = static_cast<int>(static_cast<long long>(spec.n) * b / spec.k);
        const int hi = static_cast<int>(static_cast<long long>(spec.n) * (b + 1) / spec.k);
        std::vector<int> ids;
        for (int e = lo; e < hi; ++e) ids.push_back(e);
        blocks.push_back(ids);
      }
      cons = json{{"type", "partition"},
                  {"ground", spec.n},
                  {"blocks", blocks},
                  {"caps", caps}};
    } else if (spec.constraint == "graphic") {
      const int vertices = spec.vertices > 0 ? spec.vertices : spec.k + 1;
      json edges = json::array();
      for (int e = 0; e < spec.n; ++e) {
        int u = static_cast<int>(rng_below(rng, vertices));
        int v = static_cast<int>(rng_below(rng, vertices));
        while (v == u) v = static_cast<int>(rng_below(rng, vertices));
        edges.push_back(json::array({std::min(u, v), std::max(u, v)}));
      }
      cons = json{{"type", "graphic"}, {"vertices", vertices}, {"edges", edges}};
    } else if (spec.constraint == "matching") {
      const int vertices = spec.vertices > 0 ? spec.vertices : 2 * spec.k + 1;
      std::vector<std::vector<int>> incident(vertices);
      json edges = json::array();
      for (int e = 0; e < spec.n; ++e) {
        int u = static_cast<int>(rng_below(rng, vertices));
        int v = static_cast<int>(rng_below(rng, vertices));
        while (v == u) v = static_cast<int>(rng_below(rng, vertices));
        incident[u].push_back(e);
        incident[v].push_back(e);
        edges.push_back(json::array({std::min(u, v), std::max(u, v)}));
      }
      json members = json::array();
      for (int v = 0; v < vertices; ++v) {
        members.push_back(
            json{{"matroid", matroid_to_json_uniform(spec.n, 1)},
                 {"ground_ids", incident[v]}});
      }
      cons = json{{"type", "matchoid"},
                  {"p", 2},
                  {"ground", spec.n},
                  {"members", members},
                  {"edges", edges}};
    } else {
      throw std::invalid_argument("generate: unknown constraint " +
                                  spec.constraint);
    }
  }

  inst["constraint"] = cons;
  std::ostringstream name;
  name << spec.kind << "-"
       << (spec.kind == "hardness" ? "uniform" : spec.constraint) << "-n"
       << spec.n << "-k" << spec.k << "-seed" << spec.seed;
  inst["name"] = name.str();

  // Matchoids carry their greedy rank bound so loads are self-contained.
  if (cons.at("type") == "matchoid") {
    Instance probe;
    probe.constraint = parse_constraint(cons);
    inst["constraint"]["k"] = probe.constraint.k();
  }
  return inst.dump(2);
}

Instance load_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("instance: malformed JSON: ") +
                                ex.what());
  }
  try {
    Instance inst;
    inst.n = j.at("n").get<int>();
    if (inst.n < 0) throw std::invalid_argument("instance: negative n");
    inst.objective_kind = j.at("type").get<std::string>();
    const json& params = j.at("params");
    if (inst.objective_kind == "coverage") {
      std::vector<ItemSet> covers;
      for (const auto& c : params.at("covers")) {
        covers.push_back(ItemSet(c.get<std::vector<ItemId>>()));
      }
      inst.objective = make_coverage(
          params.at("universe").get<int>(), std::move(covers),
          params.at("weights").get<std::vector<double>>());
    } else if (inst.objective_kind == "modular") {
      inst.objective =
          make_modular(params.at("weights").get<std::vector<double>>());
    } else if (inst.objective_kind == "facility") {
      std::vector<std::vector<double>> sim;
      for (const auto& row : params.at("similarity")) {
        sim.push_back(row.get<std::vector<double>>());
      }
      inst.objective = make_facility_location(std::move(sim));
    } else if (inst.objective_kind == "hardness") {
      const int k = params.at("k").get<int>();
      const int L = params.at("L").get<int>();
      const int ground = params.at("ground").get<int>();
      if (ground != L + inst.n - 1) {
        throw std::invalid_argument(
            "instance: hardness ground must equal L + n - 1");
      }
      inst.objective = make_hardness_function(k, L, ground);
      inst.hardness = HardnessLayout{k, L, ground};
    } else {
      throw std::invalid_argument("instance: unknown objective type " +
                                  inst.objective_kind);
    }
    inst.constraint = parse_constraint(j.at("constraint"));
    inst.constraint_kind = j.at("constraint").at("type").get<std::string>();
    if (!inst.hardness &&
        inst.constraint.ground_size() != inst.objective->ground_size()) {
      throw std::invalid_argument(
          "instance: constraint and objective grounds disagree");
    }
    if (!inst.hardness && inst.n != inst.objective->ground_size()) {
      throw std::invalid_argument("instance: n must match the ground size");
    }
    return inst;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("instance: missing field: ") +
                                ex.what());
  }
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("instance: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::vector<ItemId> trial_items(const Instance& inst, Rng& rng) {
  if (!inst.hardness) {
    std::vector<ItemId> items(inst.objective->ground_size());
    std::iota(items.begin(), items.end(), 0);
    return items;
  }
  // One uniformly drawn type-A item plus every type-B item.
  const HardnessLayout& hl = *inst.hardness;
  std::vector<ItemId> items;
  items.reserve(static_cast<std::size_t>(inst.n));
  items.push_back(static_cast<ItemId>(rng_below(rng, hl.L)));
  for (ItemId e = hl.L; e < hl.ground; ++e) items.push_back(e);
  return items;
}

int shortlist_cap_bound(int k, int alpha, int beta, double epsilon,
                        RunMode mode) {
  if (k < 1 || alpha < 1 || beta < 1 || epsilon <= 0.0 || epsilon >= 2.0) {
    throw std::invalid_argument("cap bound: parameters out of range");
  }
  if (mode == RunMode::Preemption) return k;
  const double raw = 4.0 * k * beta *
                     static_cast<double>(binomial(alpha * beta, alpha)) *
                     std::log(2.0 / epsilon);
  return static_cast<int>(std::ceil(raw));
}

TrialRow run_single(const Instance& inst, const AlgoConfig& algo,
                    std::uint64_t seed, bool with_opt, int opt_limit) {
  Rng rng(seed);
  const std::vector<ItemId> items = trial_items(inst, rng);
  ArrivalOrder order = make_arrival_order(items, rng);
  WindowPlan plan = build_window_plan(static_cast<int>(items.size()),
                                      inst.constraint.k(), algo.alpha,
                                      algo.beta, rng);
  CountingOracle counted{inst.objective};

  const auto t0 = std::chrono::steady_clock::now();
  RunResult run = run_shortlist(counted, inst.constraint, order, plan, algo);
  const auto t1 = std::chrono::steady_clock::now();

  TrialRow row;
  row.seed = seed;
  row.f_out = run.f_output;
  row.shortlist_size = static_cast<int>(run.shortlist.size());
  row.shortlist_bound = shortlist_cap_bound(inst.constraint.k(), algo.alpha,
                                            algo.beta, algo.epsilon, algo.mode);
  row.cap_ok = row.shortlist_size <= row.shortlist_bound;
  row.buffer_hw = run.counters.buffer_high_water;
  row.buffer_ok = run.counters.buffer_budget_ok;
  row.feasible_ok = run.counters.working_always_feasible &&
                    run.counters.output_in_shortlist &&
                    run.counters.output_in_working &&
                    inst.constraint.feasible(run.output);
  row.eval_count = counted.calls();
  row.amortized_evals =
      items.empty() ? 0.0
                    : static_cast<double>(row.eval_count) /
                          static_cast<double>(items.size());
  row.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  row.f_greedy = offline_greedy(*inst.objective, inst.constraint, items).value;
  row.f_best_of_shortlist =
      offline_greedy(*inst.objective, inst.constraint, run.shortlist.ids())
          .value;
  if (with_opt) {
    row.f_opt =
        exhaustive_opt(*inst.objective, inst.constraint, opt_limit, items)
            .value;
    if (*row.f_opt > 0.0) row.ratio = row.f_out / *row.f_opt;
  }
  row.ratio_vs_greedy = row.f_greedy > 0.0 ? row.f_out / row.f_greedy : 0.0;
  return row;
}

SweepResult run_sweep(const Instance& inst, const SweepConfig& cfg) {
  SweepResult res;
  res.rows.resize(static_cast<std::size_t>(cfg.trials));
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (int t = 0; t < cfg.trials; ++t) {
      res.rows[static_cast<std::size_t>(t)] =
          run_single(inst, cfg.algo, cfg.base_seed + static_cast<std::uint64_t>(t),
                     cfg.with_opt, cfg.opt_limit);
    }
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int t = w; t < cfg.trials; t += threads) {
          res.rows[static_cast<std::size_t>(t)] = run_single(
              inst, cfg.algo, cfg.base_seed + static_cast<std::uint64_t>(t),
              cfg.with_opt, cfg.opt_limit);
        }
      });
    }
    for (auto& th : workers) th.join();
  }
  for (const TrialRow& row : res.rows) {
    if (!row.feasible_ok || !row.cap_ok) res.hard_failure = true;
  }
  return res;
}

namespace {

json row_to_json(const TrialRow& r) {
  json j;
  j["seed"] = r.seed;
  j["f_out"] = r.f_out;
  if (r.f_opt) j["f_opt"] = *r.f_opt; else j["f_opt"] = nullptr;
  j["f_greedy"] = r.f_greedy;
  j["f_best_of_shortlist"] = r.f_best_of_shortlist;
  if (r.ratio) j["ratio"] = *r.ratio; else j["ratio"] = nullptr;
  j["ratio_vs_greedy"] = r.ratio_vs_greedy;
  j["shortlist_size"] = r.shortlist_size;
  j["shortlist_bound"] = r.shortlist_bound;
  j["buffer_hw"] = r.buffer_hw;
  j["eval_count"] = r.eval_count;
  j["amortized_evals"] = r.amortized_evals;
  j["wall_ms"] = r.wall_ms;
  j["feasible_ok"] = r.feasible_ok;
  j["cap_ok"] = r.cap_ok;
  j["buffer_ok"] = r.buffer_ok;
  return j;
}

json config_echo(const Instance& inst, const AlgoConfig& algo, int trials,
                 std::uint64_t base_seed) {
  json j;
  j["objective"] = inst.objective_kind;
  j["constraint"] = inst.constraint_kind;
  j["n"] = inst.n;
  j["k"] = inst.constraint.k();
  j["p"] = inst.constraint.p();
  j["mode"] = mode_name(algo.mode);
  j["epsilon"] = algo.epsilon;
  j["alpha"] = algo.alpha;
  j["beta"] = algo.beta;
  j["trials"] = trials;
  j["base_seed"] = base_seed;
  return j;
}

}  // namespace

std::string sweep_to_json(const Instance& inst, const SweepConfig& cfg,
                          const SweepResult& res) {
  json out;
  out["schema_version"] = 1;
  out["config"] = config_echo(inst, cfg.algo, cfg.trials, cfg.base_seed);

  json rows = json::array();
  std::vector<double> ratios, greedy_ratios, f_outs, buffers, amortized;
  double mean_shortlist = 0.0;
  int max_shortlist = 0;
  int viol_feas = 0, viol_cap = 0, viol_buf = 0;
  for (const TrialRow& r : res.rows) {
    rows.push_back(row_to_json(r));
    if (r.ratio) ratios.push_back(*r.ratio);
    greedy_ratios.push_back(r.ratio_vs_greedy);
    f_outs.push_back(r.f_out);
    buffers.push_back(static_cast<double>(r.buffer_hw));
    amortized.push_back(r.amortized_evals);
    mean_shortlist += r.shortlist_size;
    max_shortlist = std::max(max_shortlist, r.shortlist_size);
    viol_feas += !r.feasible_ok;
    viol_cap += !r.cap_ok;
    viol_buf += !r.buffer_ok;
  }
  if (!res.rows.empty()) mean_shortlist /= static_cast<double>(res.rows.size());
  out["rows"] = rows;

  json agg;
  RatioStats fo = summarize(f_outs);
  agg["mean_f_out"] = fo.mean;
  agg["std_f_out"] = fo.stddev;
  if (!ratios.empty()) {
    RatioStats rs = summarize(ratios);
    agg["mean_ratio"] = rs.mean;
    agg["std_ratio"] = rs.stddev;
    agg["ratio_ci95"] = json::array({rs.lo95, rs.hi95});
  }
  RatioStats gs = summarize(greedy_ratios);
  agg["mean_ratio_vs_greedy"] = gs.mean;
  agg["mean_shortlist"] = mean_shortlist;
  agg["max_shortlist"] = max_shortlist;
  agg["mean_buffer_hw"] = summarize(buffers).mean;
  agg["mean_amortized_evals"] = summarize(amortized).mean;
  agg["violations"] = json{{"feasibility", viol_feas},
                           {"cap", viol_cap},
                           {"buffer", viol_buf}};
  if (inst.constraint.is_matchoid()) {
    agg["reference_ratio"] =
        reference_ratio_matchoid(inst.constraint.p(), cfg.algo.epsilon);
    agg["reference_ratio_limit"] =
        reference_ratio_matchoid(inst.constraint.p(), 0.0);
  } else {
    agg["reference_ratio"] = reference_ratio_matroid(cfg.algo.epsilon);
    agg["reference_ratio_limit"] = reference_ratio_matroid(0.0);
  }
  out["aggregate"] = agg;
  return out.dump(2);
}

std::string sweep_to_csv(const SweepResult& res) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "seed,f_out,f_opt,f_greedy,f_best_of_shortlist,ratio,ratio_vs_greedy,"
        "shortlist_size,shortlist_bound,buffer_hw,eval_count,amortized_evals,"
        "wall_ms,feasible_ok,cap_ok,buffer_ok\n";
  for (const TrialRow& r : res.rows) {
    os << r.seed << ',' << r.f_out << ',';
    if (r.f_opt) os << *r.f_opt;
    os << ',' << r.f_greedy << ',' << r.f_best_of_shortlist << ',';
    if (r.ratio) os << *r.ratio;
    os << ',' << r.ratio_vs_greedy << ',' << r.shortlist_size << ','
       << r.shortlist_bound << ',' << r.buffer_hw << ',' << r.eval_count << ','
       << r.amortized_evals << ',' << r.wall_ms << ',' << int{r.feasible_ok}
       << ',' << int{r.cap_ok} << ',' << int{r.buffer_ok} << '\n';
  }
  return os.str();
}

CompareResult compare_modes(const Instance& inst, const CompareConfig& cfg) {
  CompareResult res;
  AlgoConfig left = cfg.base;
  left.record_audit = true;
  AlgoConfig right = cfg.base;
  right.mode = cfg.other;
  right.record_audit = true;

  const bool preemption_pair = (left.mode == RunMode::Preemption) !=
                               (right.mode == RunMode::Preemption);

  double buf_left = 0.0, buf_right = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(t);

    auto run_one = [&](const AlgoConfig& algo) {
      Rng rng(seed);
      const std::vector<ItemId> items = trial_items(inst, rng);
      ArrivalOrder order = make_arrival_order(items, rng);
      WindowPlan plan = build_window_plan(static_cast<int>(items.size()),
                                          inst.constraint.k(), algo.alpha,
                                          algo.beta, rng);
      return run_shortlist(*inst.objective, inst.constraint, order, plan, algo);
    };
    RunResult a = run_one(left);
    RunResult b = run_one(right);
    buf_left += static_cast<double>(a.counters.buffer_high_water);
    buf_right += static_cast<double>(b.counters.buffer_high_water);

    auto diverge = [&](int window, const std::string& what) {
      std::ostringstream os;
      os << "seed=" << seed << " window=" << window << " " << what;
      res.identical = false;
      if (res.divergence.empty()) res.divergence = os.str();
    };

    for (std::size_t w = 0; w < std::min(a.audits.size(), b.audits.size());
         ++w) {
      const WindowAudit& wa = a.audits[w];
      const WindowAudit& wb = b.audits[w];
      if (wa.chosen_slots != wb.chosen_slots) {
        diverge(wa.window, "chosen subsequence differs");
        break;
      }
      if (wa.s_w != wb.s_w || wa.sbar_w != wb.sbar_w) {
        diverge(wa.window, "window additions or removals differ");
        break;
      }
      if (!preemption_pair && wa.shortlist_after != wb.shortlist_after) {
        diverge(wa.window, "shortlist differs");
        break;
      }
    }
    if (!res.identical) continue;

    if (preemption_pair) {
      const RunResult& pre = left.mode == RunMode::Preemption ? a : b;
      const RunResult& full = left.mode == RunMode::Preemption ? b : a;
      if (a.output != b.output) {
        diverge(-1, "final outputs differ");
      } else if (!pre.shortlist.subset_of(full.shortlist)) {
        diverge(-1, "preemption shortlist not contained in the full one");
      }
    } else {
      if (a.shortlist != b.shortlist) {
        diverge(-1, "final shortlists differ");
      } else if (a.output != b.output) {
        diverge(-1, "final outputs differ");
      }
    }
  }
  if (cfg.trials > 0) {
    buf_left /= cfg.trials;
    buf_right /= cfg.trials;
  }
  res.mean_buffer_base = buf_left;
  res.mean_buffer_other = buf_right;
  return res;
}

std::string compare_to_json(const Instance& inst, const CompareConfig& cfg,
                            const CompareResult& res) {
  json out;
  out["schema_version"] = 1;
  out["config"] = config_echo(inst, cfg.base, cfg.trials, cfg.base_seed);
  out["config"]["other_mode"] = mode_name(cfg.other);
  out["identical"] = res.identical;
  out["divergence"] = res.divergence;
  out["mean_buffer_base"] = res.mean_buffer_base;
  out["mean_buffer_other"] = res.mean_buffer_other;
  return out.dump(2);
}

}  // namespace shortlist
