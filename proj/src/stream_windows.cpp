#include "shortlist/stream_windows.hpp"

#include <stdexcept>

namespace shortlist {

ArrivalOrder make_arrival_order(std::vector<ItemId> items, Rng& rng) {
  shuffle_items(items, rng);
  return ArrivalOrder{std::move(items)};
}

std::vector<int> balls_in_bins(int n, int m, Rng& rng) {
  if (n < 0) throw std::invalid_argument("balls_in_bins: negative ball count");
  if (m <= 0) throw std::invalid_argument("balls_in_bins: need at least one bin");
  std::vector<int> counts(m, 0);
  for (int i = 0; i < n; ++i) {
    ++counts[rng_below(rng, static_cast<std::uint64_t>(m))];
  }
  return counts;
}

WindowPlan build_window_plan(int n, int k, int alpha, int beta, Rng& rng) {
  if (n < 0) throw std::invalid_argument("window plan: negative n");
  if (k < 1) throw std::invalid_argument("window plan: k must be at least 1");
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("window plan: alpha and beta must be positive");
  }
  WindowPlan plan;
  plan.n = n;
  plan.k = k;
  plan.alpha = alpha;
  plan.beta = beta;
  plan.windows = (k + alpha - 1) / alpha;
  plan.slot_sizes = balls_in_bins(n, plan.windows * alpha * beta, rng);
  return plan;
}

StreamCursor::StreamCursor(const ArrivalOrder& order, const WindowPlan& plan)
    : order_(order), plan_(plan) {
  if (static_cast<int>(order.sequence.size()) != plan.n) {
    throw std::invalid_argument("stream: order length does not match the plan");
  }
}

std::optional<StreamEvent> StreamCursor::next() {
  if (slot_ >= plan_.slots()) return std::nullopt;
  StreamEvent ev;
  ev.slot = slot_;
  ev.window = plan_.window_of(slot_);
  if (pos_ < plan_.slot_sizes[slot_]) {
    ev.kind = StreamEvent::Kind::Item;
    ev.pos = pos_;
    ev.item = order_.sequence[consumed_];
    ++pos_;
    ++consumed_;
    return ev;
  }
  ev.kind = StreamEvent::Kind::SlotEnd;
  ev.pos = pos_;
  ++slot_;
  pos_ = 0;
  return ev;
}

}  // namespace shortlist
