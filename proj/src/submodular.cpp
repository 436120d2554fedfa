#include "shortlist/submodular.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace shortlist {

namespace {

void require_valid_ids(const ItemSet& s, int ground, const char* who) {
  for (ItemId e : s) {
    if (e < 0 || e >= ground) {
      throw std::invalid_argument(std::string(who) + ": item id " +
                                  std::to_string(e) + " outside ground of " +
                                  std::to_string(ground));
    }
  }
}

class CoverageOracle final : public SubmodularOracle {
 public:
  CoverageOracle(int universe, std::vector<ItemSet> covers,
                 std::vector<double> weights)
      : universe_(universe),
        covers_(std::move(covers)),
        weights_(std::move(weights)) {}

  double eval(const ItemSet& s) const override {
    require_valid_ids(s, ground_size(), "coverage");
    std::vector<char> hit(universe_, 0);
    double total = 0.0;
    for (ItemId e : s) {
      for (ItemId u : covers_[e]) {
        if (!hit[u]) {
          hit[u] = 1;
          total += weights_[u];
        }
      }
    }
    return total;
  }
  int ground_size() const override { return static_cast<int>(covers_.size()); }

 private:
  int universe_;
  std::vector<ItemSet> covers_;
  std::vector<double> weights_;
};

class ModularOracle final : public SubmodularOracle {
 public:
  explicit ModularOracle(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  double eval(const ItemSet& s) const override {
    require_valid_ids(s, ground_size(), "modular");
    double total = 0.0;
    for (ItemId e : s) total += weights_[e];
    return total;
  }
  int ground_size() const override {
    return static_cast<int>(weights_.size());
  }

 private:
  std::vector<double> weights_;
};

class FacilityLocationOracle final : public SubmodularOracle {
 public:
  explicit FacilityLocationOracle(std::vector<std::vector<double>> sim)
      : sim_(std::move(sim)) {}

  double eval(const ItemSet& s) const override {
    require_valid_ids(s, ground_size(), "facility");
    if (s.empty()) return 0.0;
    double total = 0.0;
    for (const auto& row : sim_) {
      double best = 0.0;
      for (ItemId e : s) best = std::max(best, row[e]);
      total += best;
    }
    return total;
  }
  int ground_size() const override {
    return sim_.empty() ? 0 : static_cast<int>(sim_[0].size());
  }

 private:
  std::vector<std::vector<double>> sim_;
};

class HardnessOracle final : public SubmodularOracle {
 public:
  HardnessOracle(int k, int L, int ground) : layout_{k, L, ground} {}

  double eval(const ItemSet& s) const override {
    require_valid_ids(s, layout_.ground, "hardness");
    if (s.empty()) return 0.0;
    int a_count = 0;
    int a_first = -1;
    for (ItemId e : s) {
      if (!layout_.is_type_a(e)) break;  // sorted, type A ids come first
      ++a_count;
      if (a_first < 0) a_first = e;
    }
    if (a_count >= 2) return 2.0 * layout_.k + 1.0;
    const int t = static_cast<int>(s.size()) - 1;
    if (a_count == 0) return 1.0 + hardness_staircase(layout_.k, t);
    int matched = 0;
    for (ItemId e : s) {
      if (layout_.block_of(e) == a_first) ++matched;
    }
    const int i = t / layout_.k;
    const double val = layout_.k + 0.5 * hardness_staircase(layout_.k, t) +
                       matched / std::exp2(i + 1);
    return std::min(2.0 * layout_.k + 1.0, val);
  }
  int ground_size() const override { return layout_.ground; }

 private:
  HardnessLayout layout_;
};

}  // namespace

double marginal(const SubmodularOracle& f, ItemId e, const ItemSet& s) {
  if (e < 0 || e >= f.ground_size()) {
    throw std::invalid_argument("marginal: item id " + std::to_string(e) +
                                " outside ground of " +
                                std::to_string(f.ground_size()));
  }
  if (s.contains(e)) return 0.0;
  return f.eval(s.with(e)) - f.eval(s);
}

OraclePtr make_coverage(int universe_size, std::vector<ItemSet> covers,
                        std::vector<double> weights) {
  if (universe_size < 0) throw std::invalid_argument("coverage: negative universe");
  if (static_cast<int>(weights.size()) != universe_size) {
    throw std::invalid_argument("coverage: weights must match universe size");
  }
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("coverage: negative weight");
  }
  for (const ItemSet& c : covers) {
    for (ItemId u : c) {
      if (u < 0 || u >= universe_size) {
        throw std::invalid_argument("coverage: cover references element " +
                                    std::to_string(u) +
                                    " outside the universe");
      }
    }
  }
  return std::make_shared<CoverageOracle>(universe_size, std::move(covers),
                                          std::move(weights));
}

OraclePtr make_modular(std::vector<double> weights) {
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("modular: negative weight");
  }
  return std::make_shared<ModularOracle>(std::move(weights));
}

OraclePtr make_facility_location(std::vector<std::vector<double>> similarity) {
  std::size_t cols = similarity.empty() ? 0 : similarity[0].size();
  for (const auto& row : similarity) {
    if (row.size() != cols) {
      throw std::invalid_argument("facility: ragged similarity matrix");
    }
    for (double v : row) {
      if (v < 0.0) throw std::invalid_argument("facility: negative similarity");
    }
  }
  return std::make_shared<FacilityLocationOracle>(std::move(similarity));
}

double hardness_staircase(int k, int t) {
  if (k <= 0) throw std::invalid_argument("staircase: k must be positive");
  if (t < 0) throw std::invalid_argument("staircase: negative t");
  const int i = t / k;
  // 2k(1 - 2^-i) sums the full steps; the remainder rides the current slope.
  return 2.0 * k * (1.0 - std::exp2(-i)) + (t - i * k) / std::exp2(i);
}

OraclePtr make_hardness_function(int k, int L, int ground_size) {
  if (k <= 0 || L <= 0) {
    throw std::invalid_argument("hardness: k and L must be positive");
  }
  if (ground_size < L + L * k) {
    throw std::invalid_argument(
        "hardness: ground must hold the type-A items and their blocks");
  }
  return std::make_shared<HardnessOracle>(k, L, ground_size);
}

}  // namespace shortlist
