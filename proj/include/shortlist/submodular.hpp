#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "shortlist/item_set.hpp"

namespace shortlist {

// Value oracle over subsets of ground ids [0, ground_size). Implementations
// validate ids and throw std::invalid_argument on anything out of range.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;
  virtual double eval(const ItemSet& s) const = 0;
  virtual int ground_size() const = 0;
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

// f(S + e) - f(S). Returns 0 when e is already in S (no oracle call);
// throws std::invalid_argument for ids outside the ground set.
double marginal(const SubmodularOracle& f, ItemId e, const ItemSet& s);

// Pass-through wrapper counting eval() calls. Atomic so sweeps that fan
// trials out over threads still report exact totals.
class CountingOracle final : public SubmodularOracle {
 public:
  explicit CountingOracle(OraclePtr inner) : inner_(std::move(inner)) {}

  double eval(const ItemSet& s) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->eval(s);
  }
  int ground_size() const override { return inner_->ground_size(); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset() { calls_.store(0, std::memory_order_relaxed); }

 private:
  OraclePtr inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Weighted coverage: f(S) = total weight of universe elements covered by S.
OraclePtr make_coverage(int universe_size, std::vector<ItemSet> covers,
                        std::vector<double> weights);

// Additive weights, f(S) = sum of w_e over S.
OraclePtr make_modular(std::vector<double> weights);

// f(S) = sum over clients of the best similarity to any open item.
// similarity[client][item] >= 0.
OraclePtr make_facility_location(std::vector<std::vector<double>> similarity);

// Adversarial staircase objective. Ground layout: ids [0, L) are the type-A
// items; ids [L, L + L*k) are the matched blocks, k consecutive ids per type-A
// item; everything up to ground_size is filler of type B.
//
// Note: this function is intentionally kept exactly as constructed, including
// its known monotonicity/submodularity defects on larger sets; the exhaustive
// checker in baselines reports the witness. See check_submodular.
OraclePtr make_hardness_function(int k, int L, int ground_size);

// The staircase helper: sum of k/2^j for j < floor(t/k), plus the partial
// step (t - k*floor(t/k)) / 2^floor(t/k).
double hardness_staircase(int k, int t);

struct HardnessLayout {
  int k = 0;
  int L = 0;
  int ground = 0;

  ItemId a_item(int ell) const { return ell; }
  ItemId block_item(int ell, int j) const { return L + ell * k + j; }
  int first_filler() const { return L + L * k; }
  bool is_type_a(ItemId e) const { return e < L; }
  // Index of the type-A item whose block contains e, or -1 for filler / type A.
  int block_of(ItemId e) const {
    if (e < L || e >= first_filler()) return -1;
    return (e - L) / k;
  }
};

}  // namespace shortlist
