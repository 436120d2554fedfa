#pragma once

#include <string>
#include <vector>

#include "shortlist/constraints.hpp"
#include "shortlist/item_set.hpp"
#include "shortlist/submodular.hpp"

namespace shortlist {

struct BaselineResult {
  ItemSet set;
  double value = 0.0;
};

// Marginal-gain greedy over feasible additions, smallest id on ties, stops
// when no addition strictly improves. The pool restricts candidates; an
// empty pool means the whole ground set.
BaselineResult offline_greedy(const SubmodularOracle& f,
                              const ConstraintOracle& c,
                              const std::vector<ItemId>& pool = {});

// Exact optimum by DFS over feasible sets (downward closure prunes the
// search). Refuses candidate pools larger than `limit` with a message
// pointing at the greedy fallback.
BaselineResult exhaustive_opt(const SubmodularOracle& f,
                              const ConstraintOracle& c, int limit = 20,
                              const std::vector<ItemId>& pool = {});

struct SubmodularityReport {
  bool ok = true;
  std::string witness;  // first violation, human readable
};

// Exhaustive monotonicity + diminishing-returns check over all subsets of
// [0, n). n is capped at 16 to keep the table enumerable.
SubmodularityReport check_submodular(const SubmodularOracle& f, int n);

struct RatioStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double lo95 = 0.0;
  double hi95 = 0.0;
  int count = 0;
};

RatioStats summarize(const std::vector<double>& values);

// Guarantee constants the reports print next to measured ratios.
double reference_ratio_matroid(double epsilon);            // (1 - e^-2 - eps)/2
double reference_ratio_matchoid(int p, double epsilon);    // (1 - e^-(p+1) - eps)/(p+1)

}  // namespace shortlist
