#include "shortlist/baselines.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shortlist {

namespace {

std::vector<ItemId> effective_pool(const SubmodularOracle& f,
                                   const std::vector<ItemId>& pool) {
  if (!pool.empty()) return pool;
  std::vector<ItemId> all(f.ground_size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

BaselineResult offline_greedy(const SubmodularOracle& f,
                              const ConstraintOracle& c,
                              const std::vector<ItemId>& pool) {
  std::vector<ItemId> cands = effective_pool(f, pool);
  std::sort(cands.begin(), cands.end());
  BaselineResult res;
  res.value = f.eval(res.set);
  std::vector<char> taken(cands.size(), 0);
  while (true) {
    double best_gain = 0.0;
    int best_idx = -1;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (taken[i] || res.set.contains(cands[i])) continue;
      ItemSet grown = res.set.with(cands[i]);
      if (!c.feasible(grown)) continue;
      double gain = f.eval(grown) - res.value;
      if (gain > best_gain) {  // ties keep the earlier (smaller) id
        best_gain = gain;
        best_idx = static_cast<int>(i);
      }
    }
    if (best_idx < 0) break;
    taken[best_idx] = 1;
    res.set.insert(cands[best_idx]);
    res.value += best_gain;
  }
  res.value = f.eval(res.set);
  return res;
}

namespace {

void opt_dfs(const SubmodularOracle& f, const ConstraintOracle& c,
             const std::vector<ItemId>& cands, std::size_t start, ItemSet& cur,
             double cur_value, BaselineResult& best) {
  if (cur_value > best.value ||
      (cur_value == best.value && cur < best.set)) {
    best.value = cur_value;
    best.set = cur;
  }
  for (std::size_t i = start; i < cands.size(); ++i) {
    ItemSet grown = cur.with(cands[i]);
    if (!c.feasible(grown)) continue;  // downward closure prunes the branch
    double grown_value = f.eval(grown);
    std::swap(cur, grown);
    opt_dfs(f, c, cands, i + 1, cur, grown_value, best);
    std::swap(cur, grown);
  }
}

}  // namespace

BaselineResult exhaustive_opt(const SubmodularOracle& f,
                              const ConstraintOracle& c, int limit,
                              const std::vector<ItemId>& pool) {
  std::vector<ItemId> cands = effective_pool(f, pool);
  if (static_cast<int>(cands.size()) > limit) {
    std::ostringstream msg;
    msg << "exhaustive_opt: " << cands.size() << " candidates exceed the limit "
        << limit << "; raise the limit or fall back to offline_greedy";
    throw std::invalid_argument(msg.str());
  }
  std::sort(cands.begin(), cands.end());
  BaselineResult best;
  ItemSet cur;
  best.value = f.eval(cur);
  opt_dfs(f, c, cands, 0, cur, best.value, best);
  return best;
}

SubmodularityReport check_submodular(const SubmodularOracle& f, int n) {
  if (n < 0 || n > f.ground_size()) {
    throw std::invalid_argument("check_submodular: n outside the ground set");
  }
  if (n > 16) {
    throw std::invalid_argument("check_submodular: n above the 2^16 table cap");
  }
  constexpr double kTol = 1e-9;
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> value(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<ItemId> ids;
    for (int b = 0; b < n; ++b) {
      if (mask & (std::size_t{1} << b)) ids.push_back(b);
    }
    value[mask] = f.eval(ItemSet(std::move(ids)));
  }

  SubmodularityReport rep;
  auto describe = [](std::size_t mask, int n_bits) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int b = 0; b < n_bits; ++b) {
      if (mask & (std::size_t{1} << b)) {
        if (!first) os << ",";
        os << b;
        first = false;
      }
    }
    os << "}";
    return os.str();
  };

  for (std::size_t mask = 0; mask < total; ++mask) {
    for (int x = 0; x < n; ++x) {
      const std::size_t xbit = std::size_t{1} << x;
      if (mask & xbit) continue;
      const double dx = value[mask | xbit] - value[mask];
      if (dx < -kTol) {
        std::ostringstream os;
        os << "monotonicity: f(" << describe(mask | xbit, n) << ") - f("
           << describe(mask, n) << ") = " << dx;
        rep.ok = false;
        rep.witness = os.str();
        return rep;
      }
      // Local diminishing returns over single-element extensions implies the
      // general S subseteq T case by induction.
      for (int y = 0; y < n; ++y) {
        const std::size_t ybit = std::size_t{1} << y;
        if (y == x || (mask & ybit)) continue;
        const double dxy = value[mask | xbit | ybit] - value[mask | ybit];
        if (dx + kTol < dxy) {
          std::ostringstream os;
          os << "submodularity: marginal of " << x << " grows from " << dx
             << " at " << describe(mask, n) << " to " << dxy << " after adding "
             << y;
          rep.ok = false;
          rep.witness = os.str();
          return rep;
        }
      }
    }
  }
  return rep;
}

RatioStats summarize(const std::vector<double>& values) {
  RatioStats st;
  st.count = static_cast<int>(values.size());
  if (values.empty()) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / st.count;
  if (st.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - st.mean) * (v - st.mean);
    st.stddev = std::sqrt(sq / (st.count - 1));
  }
  const double half = 1.96 * st.stddev / std::sqrt(static_cast<double>(st.count));
  st.lo95 = st.mean - half;
  st.hi95 = st.mean + half;
  return st;
}

double reference_ratio_matroid(double epsilon) {
  return 0.5 * (1.0 - std::exp(-2.0) - epsilon);
}

double reference_ratio_matchoid(int p, double epsilon) {
  if (p < 1) throw std::invalid_argument("reference ratio: p must be >= 1");
  return (1.0 - std::exp(-(p + 1.0)) - epsilon) / (p + 1.0);
}

}  // namespace shortlist
