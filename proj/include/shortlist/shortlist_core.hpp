#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shortlist/constraints.hpp"
#include "shortlist/item_set.hpp"
#include "shortlist/replacement_secretary.hpp"
#include "shortlist/stream_windows.hpp"
#include "shortlist/submodular.hpp"

namespace shortlist {

enum class RunMode { Full, Preemption, Streaming };

struct AlgoConfig {
  double epsilon = 0.5;  // per-slot secretary runs use delta = epsilon / 2
  int alpha = 1;
  int beta = 1;
  RunMode mode = RunMode::Full;
  bool record_audit = false;  // keep per-window material for offline replay
};

// One tracked slot subsequence within the current window: which slots it
// picked from, what each pick added and removed, and the resulting working
// set. Slots with no feasible candidate leave a nullopt hole.
struct Tracker {
  std::vector<int> slots;  // picked slot indices within the window, ascending
  std::vector<std::optional<ItemId>> added;
  std::vector<ItemSet> removed;
  ItemSet working;
  double f_working = 0.0;
  ItemSet removed_union;

  bool complete(int alpha) const {
    return static_cast<int>(slots.size()) == alpha;
  }
  // All non-hole picks. A pick removed by a later step of the same
  // subsequence still appears here (and in removed_union), matching the
  // working-set identity working = (start + picks) - removals.
  ItemSet realized_adds() const;
};

// Everything an independent replay needs to recompute one window close.
struct WindowAudit {
  int window = 0;
  ItemSet s_before;
  ItemSet r_before;
  std::vector<std::vector<ItemId>> slot_items;  // arrival order per slot
  std::vector<int> chosen_slots;                // winning subsequence
  ItemSet s_w;     // realized additions applied to the working set
  ItemSet sbar_w;  // removals applied to the working set
  ItemSet shortlist_after;
};

struct RunCounters {
  std::size_t buffer_high_water = 0;
  std::size_t max_slot_size = 0;
  std::size_t max_live_trackers = 0;
  std::size_t retained_final = 0;
  bool buffer_budget_ok = true;       // hw <= |A| + max slot + alpha * live
  bool working_always_feasible = true;
  bool output_in_shortlist = true;    // A* subseteq A held at every close
  bool output_in_working = true;      // A* subseteq S held at every close
};

struct RunResult {
  ItemSet shortlist;  // A
  ItemSet output;     // A*
  ItemSet working;    // final S
  ItemSet pool;       // final R
  double f_output = 0.0;
  RunCounters counters;
  std::vector<WindowAudit> audits;
};

// Driving state for one randomly ordered pass. Slots must be fed in plan
// order: process_slot for each slot of a window, then close_window, then the
// next window.
class RunState {
 public:
  RunState(const SubmodularOracle& f, const ConstraintOracle& c,
           const WindowPlan& plan, AlgoConfig cfg);

  // Runs one secretary pass per live tracker over the slot (sentinel first,
  // then items in arrival order), merges selections into the shortlist, and
  // extends every live tracker by its best feasible candidate from the slot
  // and the pool.
  void process_slot(int window, int slot_in_window,
                    const std::vector<ItemId>& items);

  // Picks the winning complete subsequence, applies the working-set and
  // output updates, widens the pool, and resets trackers for the next window.
  void close_window(int window);

  RunResult finish();

  const ItemSet& shortlist() const { return shortlist_; }
  const ItemSet& working() const { return working_; }
  const ItemSet& output() const { return output_; }
  const ItemSet& pool() const { return pool_; }
  const std::vector<Tracker>& trackers() const { return trackers_; }

  // Streaming-mode bookkeeping: drops raw slot items that were neither
  // shortlisted nor referenced by any live tracker. Outputs are unaffected;
  // only the retained-buffer accounting changes. No-op in other modes.
  friend void streaming_evict(RunState& state);

 private:
  void note_buffer(std::size_t raw_extra);
  ItemSet retained_core() const;

  const SubmodularOracle& f_;
  const ConstraintOracle& c_;
  WindowPlan plan_;
  AlgoConfig cfg_;

  ItemSet working_;    // S
  double f_working_ = 0.0;
  ItemSet shortlist_;  // A
  ItemSet output_;     // A*
  ItemSet pool_;       // R

  std::vector<Tracker> trackers_;
  int current_window_ = 0;
  int slots_seen_in_window_ = 0;
  std::size_t seen_total_ = 0;

  RunCounters counters_;
  std::vector<WindowAudit> audits_;
  std::optional<WindowAudit> open_audit_;
  bool finished_ = false;
};

void streaming_evict(RunState& state);

// Convenience driver: cursor -> process_slot/close_window -> finish.
RunResult run_shortlist(const SubmodularOracle& f, const ConstraintOracle& c,
                        const ArrivalOrder& order, const WindowPlan& plan,
                        const AlgoConfig& cfg);

}  // namespace shortlist
