#include "shortlist/replacement_secretary.hpp"

#include <cmath>
#include <stdexcept>

namespace shortlist {

ReplacementConfig ReplacementConfig::make(int n, double delta) {
  if (n < 0) throw std::invalid_argument("replacement: negative length");
  if (!(delta > 0.0) || !(delta < 2.0)) {
    throw std::invalid_argument("replacement: delta must lie in (0, 2)");
  }
  ReplacementConfig cfg;
  cfg.n = n;
  cfg.delta = delta;
  cfg.warmup = std::max(1, static_cast<int>(std::ceil(n * delta / 2.0)));
  cfg.cap = std::max(1, static_cast<int>(std::ceil(4.0 * std::log(2.0 / delta))));
  return cfg;
}

ReplacementRun::ReplacementRun(ReplacementConfig cfg) : cfg_(cfg) {}

bool ReplacementRun::step(double value, ItemId item, bool selectable) {
  if (seen_ >= cfg_.n) {
    throw std::logic_error("replacement: stepped past the declared length");
  }
  ++seen_;
  if (!(value > max_)) return false;
  max_ = value;
  best_item_ = item;
  if (!selectable) return false;
  if (seen_ < cfg_.warmup) return false;
  if (static_cast<int>(selections_.size()) >= cfg_.cap) return false;
  selections_.push_back(ReplacementSelection{seen_, item, value});
  return true;
}

ReplacementOutcome ReplacementRun::finalize() const {
  if (seen_ != cfg_.n) {
    throw std::logic_error("replacement: finalize before consuming the stream");
  }
  return ReplacementOutcome{selections_, best_item_, max_};
}

}  // namespace shortlist
