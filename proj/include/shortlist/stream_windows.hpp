#pragma once

#include <optional>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/rng.hpp"

namespace shortlist {

struct ArrivalOrder {
  std::vector<ItemId> sequence;
};

// Uniform random permutation of the given items.
ArrivalOrder make_arrival_order(std::vector<ItemId> items, Rng& rng);

// Drops n balls into m bins, one independent uniform draw per ball; returns
// per-bin counts.
std::vector<int> balls_in_bins(int n, int m, Rng& rng);

// ceil(k/alpha) windows of alpha*beta consecutive slots each; slot sizes come
// from a balls-in-bins draw over all slots, so they sum to n exactly and
// empty slots are possible.
struct WindowPlan {
  int n = 0;
  int k = 1;
  int alpha = 1;
  int beta = 1;
  int windows = 0;
  std::vector<int> slot_sizes;

  int slots() const { return static_cast<int>(slot_sizes.size()); }
  int slots_per_window() const { return alpha * beta; }
  int window_of(int slot) const { return slot / (alpha * beta); }
};

WindowPlan build_window_plan(int n, int k, int alpha, int beta, Rng& rng);

// Flat walk over a planned stream. Each slot ends with exactly one SlotEnd
// event, so empty slots stay visible to the consumer.
struct StreamEvent {
  enum class Kind { Item, SlotEnd };
  Kind kind = Kind::Item;
  int window = 0;
  int slot = 0;        // global slot index
  int pos = 0;         // 0-based position within the slot (items only)
  ItemId item = -1;
};

class StreamCursor {
 public:
  StreamCursor(const ArrivalOrder& order, const WindowPlan& plan);
  std::optional<StreamEvent> next();

 private:
  const ArrivalOrder& order_;
  const WindowPlan& plan_;
  int slot_ = 0;
  int pos_ = 0;
  std::size_t consumed_ = 0;
};

}  // namespace shortlist
