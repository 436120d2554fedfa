#include "shortlist/shortlist_core.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace shortlist {

namespace {

bool validate_config(const AlgoConfig& cfg) {
  return cfg.epsilon > 0.0 && cfg.epsilon < 2.0 && cfg.alpha >= 1 &&
         cfg.beta >= 1;
}

}  // namespace

ItemSet Tracker::realized_adds() const {
  ItemSet out;
  for (const auto& a : added) {
    if (a.has_value()) out.insert(*a);
  }
  return out;
}

RunState::RunState(const SubmodularOracle& f, const ConstraintOracle& c,
                   const WindowPlan& plan, AlgoConfig cfg)
    : f_(f), c_(c), plan_(plan), cfg_(cfg) {
  if (!validate_config(cfg_)) {
    throw std::invalid_argument("run: epsilon in (0,2), alpha/beta >= 1");
  }
  if (cfg_.mode == RunMode::Preemption &&
      (cfg_.alpha != 1 || cfg_.beta != 1)) {
    throw std::invalid_argument("run: preemption mode requires alpha=beta=1");
  }
  f_working_ = f_.eval(working_);
  trackers_.push_back(Tracker{{}, {}, {}, working_, f_working_, {}});
}

void RunState::process_slot(int window, int slot_in_window,
                            const std::vector<ItemId>& items) {
  if (finished_ || window != current_window_ ||
      slot_in_window != slots_seen_in_window_) {
    throw std::logic_error("run: slots must be fed in plan order");
  }
  if (slot_in_window >= plan_.slots_per_window()) {
    throw std::logic_error("run: slot index outside the window");
  }

  if (cfg_.record_audit && slot_in_window == 0) {
    WindowAudit audit;
    audit.window = window;
    audit.s_before = working_;
    audit.r_before = pool_;
    open_audit_ = std::move(audit);
  }
  if (open_audit_) open_audit_->slot_items.push_back(items);

  seen_total_ += items.size();
  counters_.max_slot_size = std::max(counters_.max_slot_size, items.size());
  // Peak retention for this slot happens once the raw slot is fully buffered
  // and before eviction; fresh arrivals are disjoint from the core.
  note_buffer(items.size());

  std::size_t live = 0;
  const double delta = cfg_.epsilon / 2.0;

  // Secretary pass per live tracker: the pool sentinel first, then the slot
  // in arrival order. Selections join the shortlist immediately; in
  // preemption mode each new record discards the slot's previous
  // contribution, so one slot adds at most one item.
  for (const Tracker& t : trackers_) {
    if (t.complete(cfg_.alpha)) continue;
    ++live;
    ReplacementRun run(ReplacementConfig::make(
        static_cast<int>(items.size()) + 1, delta));
    double sentinel = kNegInf;
    for (ItemId x : pool_) {
      if (t.working.contains(x) || t.removed_union.contains(x)) continue;
      GainResult g = c_.gain(f_, x, t.working, t.f_working);
      if (g.feasible && g.gain > sentinel) sentinel = g.gain;
    }
    // The sentinel holds the pool's best exchange but is not an item: it
    // primes the running max without ever being selected or consuming cap.
    run.step(sentinel, -1, false);
    ItemId slot_contribution = -1;
    for (ItemId e : items) {
      GainResult g = c_.gain(f_, e, t.working, t.f_working);
      if (!run.step(g.feasible ? g.gain : kNegInf, e)) continue;
      if (cfg_.mode == RunMode::Preemption) {
        slot_contribution = e;
      } else {
        shortlist_.insert(e);
      }
    }
    if (cfg_.mode == RunMode::Preemption && slot_contribution >= 0) {
      shortlist_.insert(slot_contribution);
    }
  }
  counters_.max_live_trackers = std::max(counters_.max_live_trackers, live);

  // Extend every live tracker by the last strict record of the value
  // sequence its secretary pass saw: the pool (summarized by its best
  // candidate) sits at position one, then the slot in arrival order. Using
  // the same record rule here means a tied maximum resolves to the item the
  // shortlist actually captured, not to an arbitrary id.
  const std::size_t existing = trackers_.size();
  std::vector<Tracker> children;
  for (std::size_t idx = 0; idx < existing; ++idx) {
    const Tracker& t = trackers_[idx];
    if (t.complete(cfg_.alpha)) continue;

    bool found = false;
    double best_gain = kNegInf;
    ItemSet best_removed;
    ItemId best_id = -1;

    // Best pool candidate; ties prefer the smaller removal set, then id.
    for (ItemId x : pool_) {
      if (t.working.contains(x) || t.removed_union.contains(x)) continue;
      GainResult g = c_.gain(f_, x, t.working, t.f_working);
      if (!g.feasible) continue;
      bool wins = !found;
      if (!wins) {
        if (g.gain != best_gain) {
          wins = g.gain > best_gain;
        } else if (g.removed != best_removed) {
          wins = g.removed < best_removed;
        } else {
          wins = x < best_id;
        }
      }
      if (wins) {
        found = true;
        best_gain = g.gain;
        best_removed = g.removed;
        best_id = x;
      }
    }
    // Slot items displace the standing best only on a strict improvement.
    for (ItemId e : items) {
      GainResult g = c_.gain(f_, e, t.working, t.f_working);
      if (!g.feasible) continue;
      if (!found || g.gain > best_gain) {
        found = true;
        best_gain = g.gain;
        best_removed = g.removed;
        best_id = e;
      }
    }

    Tracker child = t;
    child.slots.push_back(slot_in_window);
    if (found) {
      child.added.emplace_back(best_id);
      child.removed.push_back(best_removed);
      child.working = t.working.with_minus(best_id, best_removed);
      // Fresh evaluation instead of f + gain: keeps the cached value
      // bit-identical to what an offline replay computes.
      child.f_working = f_.eval(child.working);
      child.removed_union = t.removed_union.set_union(best_removed);
    } else {
      child.added.emplace_back(std::nullopt);
      child.removed.push_back(ItemSet{});
    }
    children.push_back(std::move(child));
  }
  for (auto& ch : children) trackers_.push_back(std::move(ch));

  std::size_t live_after = 0;
  for (const Tracker& t : trackers_) {
    if (!t.complete(cfg_.alpha)) ++live_after;
  }
  counters_.max_live_trackers =
      std::max(counters_.max_live_trackers, live_after);

  if (cfg_.mode == RunMode::Streaming) streaming_evict(*this);

  ++slots_seen_in_window_;
}

void RunState::close_window(int window) {
  if (finished_ || window != current_window_ ||
      slots_seen_in_window_ != plan_.slots_per_window()) {
    throw std::logic_error("run: close_window before the window is complete");
  }

  const Tracker* winner = nullptr;
  ItemSet pool_adds;
  for (const Tracker& t : trackers_) {
    if (!t.complete(cfg_.alpha)) continue;
    pool_adds = pool_adds.set_union(t.realized_adds());
    if (!winner || t.f_working > winner->f_working ||
        (t.f_working == winner->f_working && t.slots < winner->slots)) {
      winner = &t;
    }
  }
  if (!winner) {
    throw std::logic_error("run: no complete subsequence at window close");
  }

  const ItemSet s_w = winner->realized_adds();
  const ItemSet sbar_w = winner->removed_union;

  // Output update: add captured picks, then drop everything this window
  // removed from the working set. Removals whose pick was missed by the
  // shortlist leave the output too; keeping them would let the output drift
  // outside the working set and potentially outside the constraint.
  output_ = output_.set_union(s_w.set_intersect(shortlist_)).set_minus(sbar_w);
  working_ = winner->working;
  f_working_ = winner->f_working;
  pool_ = pool_.set_union(pool_adds);

  const bool feasible_now = c_.feasible(working_);
  counters_.working_always_feasible &= feasible_now;
  counters_.output_in_shortlist &= output_.subset_of(shortlist_);
  counters_.output_in_working &= output_.subset_of(working_);
  assert(feasible_now);
  assert(output_.subset_of(working_));

  if (open_audit_) {
    open_audit_->chosen_slots = winner->slots;
    open_audit_->s_w = s_w;
    open_audit_->sbar_w = sbar_w;
    open_audit_->shortlist_after = shortlist_;
    audits_.push_back(std::move(*open_audit_));
    open_audit_.reset();
  }

  trackers_.clear();
  trackers_.push_back(Tracker{{}, {}, {}, working_, f_working_, {}});
  ++current_window_;
  slots_seen_in_window_ = 0;
}

ItemSet RunState::retained_core() const {
  ItemSet core = shortlist_.set_union(pool_).set_union(working_);
  for (const Tracker& t : trackers_) {
    core = core.set_union(t.working).set_union(t.removed_union);
  }
  return core;
}

void RunState::note_buffer(std::size_t raw_extra) {
  const std::size_t now = cfg_.mode == RunMode::Streaming
                              ? retained_core().size() + raw_extra
                              : seen_total_;
  counters_.buffer_high_water = std::max(counters_.buffer_high_water, now);
}

void streaming_evict(RunState& state) {
  // The raw slot was never stored beyond the pass above, so eviction is an
  // accounting step: the retained set collapses to the core.
  std::size_t now = state.retained_core().size();
  state.counters_.buffer_high_water =
      std::max(state.counters_.buffer_high_water, now);
}

RunResult RunState::finish() {
  if (finished_) throw std::logic_error("run: finish called twice");
  if (current_window_ != plan_.windows || slots_seen_in_window_ != 0) {
    throw std::logic_error("run: finish before the last window closed");
  }
  finished_ = true;

  RunResult res;
  res.shortlist = shortlist_;
  res.output = output_;
  res.working = working_;
  res.pool = pool_;
  res.f_output = f_.eval(output_);

  counters_.retained_final = cfg_.mode == RunMode::Streaming
                                 ? retained_core().size()
                                 : seen_total_;
  if (cfg_.mode == RunMode::Streaming) {
    const std::size_t budget = shortlist_.size() + counters_.max_slot_size +
                               static_cast<std::size_t>(cfg_.alpha) *
                                   counters_.max_live_trackers;
    counters_.buffer_budget_ok = counters_.buffer_high_water <= budget;
  }
  res.counters = counters_;
  res.audits = audits_;
  return res;
}

RunResult run_shortlist(const SubmodularOracle& f, const ConstraintOracle& c,
                        const ArrivalOrder& order, const WindowPlan& plan,
                        const AlgoConfig& cfg) {
  RunState state(f, c, plan, cfg);
  StreamCursor cursor(order, plan);
  std::vector<ItemId> slot_items;
  while (auto ev = cursor.next()) {
    if (ev->kind == StreamEvent::Kind::Item) {
      slot_items.push_back(ev->item);
      continue;
    }
    const int in_window = ev->slot % plan.slots_per_window();
    state.process_slot(ev->window, in_window, slot_items);
    slot_items.clear();
    if (in_window == plan.slots_per_window() - 1) {
      state.close_window(ev->window);
    }
  }
  return state.finish();
}

}  // namespace shortlist
