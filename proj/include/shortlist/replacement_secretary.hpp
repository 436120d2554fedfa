#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "shortlist/item_set.hpp"

namespace shortlist {

// Online record tracking with a warmup gate and a hard cap: a value strictly
// above the running max is a record; records at positions >= warmup are
// appended to the shortlist until cap entries have been taken.
struct ReplacementConfig {
  int n = 0;         // declared stream length
  double delta = 0;  // failure budget in (0, 2)
  int warmup = 1;    // ceil(n * delta / 2), at least 1
  int cap = 1;       // ceil(4 * ln(2 / delta)), at least 1

  static ReplacementConfig make(int n, double delta);
};

struct ReplacementSelection {
  int position = 0;  // 1-based arrival index
  ItemId item = -1;
  double value = 0.0;
};

struct ReplacementOutcome {
  std::vector<ReplacementSelection> selections;
  std::optional<ItemId> best_item;
  double best_value = -std::numeric_limits<double>::infinity();
};

class ReplacementRun {
 public:
  explicit ReplacementRun(ReplacementConfig cfg);

  // Feed the next value; returns true when it entered the shortlist.
  // Throws std::logic_error past the declared length. -inf participates as
  // an ordinary value, so a leading -inf sentinel can never be a record.
  // A non-selectable value occupies its position and can hold the running
  // max, but is never selected and never consumes cap.
  bool step(double value, ItemId item, bool selectable = true);

  bool done() const { return seen_ == cfg_.n; }
  int seen() const { return seen_; }
  const ReplacementConfig& config() const { return cfg_; }
  const std::vector<ReplacementSelection>& selections() const {
    return selections_;
  }
  double best_value() const { return max_; }
  std::optional<ItemId> best_item() const { return best_item_; }

  // Requires all n steps consumed; throws std::logic_error otherwise.
  ReplacementOutcome finalize() const;

 private:
  ReplacementConfig cfg_;
  int seen_ = 0;
  double max_ = -std::numeric_limits<double>::infinity();
  std::optional<ItemId> best_item_;
  std::vector<ReplacementSelection> selections_;
};

}  // namespace shortlist
