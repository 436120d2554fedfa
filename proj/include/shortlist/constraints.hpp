#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/submodular.hpp"

namespace shortlist {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual bool is_independent(const ItemSet& s) const = 0;
  virtual int ground_size() const = 0;
  virtual int rank() const = 0;
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

MatroidPtr make_uniform_matroid(int ground, int k);
// Blocks must partition [0, ground) exactly; caps are per-block.
MatroidPtr make_partition_matroid(int ground,
                                  std::vector<std::vector<ItemId>> blocks,
                                  std::vector<int> caps);
// Item i is edge i; independent = acyclic.
MatroidPtr make_graphic_matroid(int vertices,
                                std::vector<std::pair<int, int>> edges);

// Best single exchange keeping S + e - removed independent. When nothing
// works the result is infeasible with gain -inf; when e fits outright the
// removal set is empty.
struct GainResult {
  double gain = kNegInf;
  ItemSet removed;
  bool feasible = false;
};

// Ties between equal gains go to the lexicographically smaller removal set,
// so "no removal" beats any exchange of the same value.
GainResult theta_matroid(const SubmodularOracle& f, const MatroidOracle& m,
                         ItemId e, const ItemSet& s);
// Fast path reusing a precomputed f(S); skips the independence precheck
// (callers in the slot loop maintain that invariant and assert in debug).
GainResult theta_matroid(const SubmodularOracle& f, const MatroidOracle& m,
                         ItemId e, const ItemSet& s, double f_of_s);

struct MatchoidMember {
  MatroidPtr matroid;  // interprets global ids
  ItemSet ground;      // the member's slice of the global ground set
};

// Intersection of matroids where each item appears in at most p member
// grounds. Feasible = independent in every member restricted to its slice.
class Matchoid {
 public:
  Matchoid(int p, int ground_size, std::vector<MatchoidMember> members);

  bool feasible(const ItemSet& s) const;
  int p() const { return p_; }
  int ground_size() const { return ground_size_; }
  const std::vector<MatchoidMember>& members() const { return members_; }
  const std::vector<int>& members_of(ItemId e) const;

 private:
  int p_ = 1;
  int ground_size_ = 0;
  std::vector<MatchoidMember> members_;
  std::vector<std::vector<int>> incidence_;  // item -> member indices
};

using MatchoidPtr = std::shared_ptr<const Matchoid>;

// Single-member repair options for adding e: the ids in S (restricted to the
// member's slice) whose removal restores independence, plus whether no
// removal is needed at all.
struct OmegaResult {
  bool allows_empty = false;
  ItemSet removable;
};

OmegaResult omega(const MatroidOracle& m, const ItemSet& member_ground,
                  ItemId e, const ItemSet& s);

// Replacement gain for a p-matchoid: picks one repair per member containing
// e (or none where allowed), removes the union, and maximizes the objective
// increment over the whole product of options.
GainResult gain_matchoid(const SubmodularOracle& f, const Matchoid& q,
                         ItemId e, const ItemSet& s);
GainResult gain_matchoid(const SubmodularOracle& f, const Matchoid& q,
                         ItemId e, const ItemSet& s, double f_of_s);

// Greedy completion to a maximal independent set, lowest ids first.
ItemSet extend_to_basis(const MatroidOracle& m, const ItemSet& s);

// Exchange bijection between two bases: pairs (x, pi(x)) with
// A - x + pi(x) independent for all x in A, fixing A intersect B.
// nullopt when the underlying matching search fails (which would indicate
// a broken matroid oracle rather than a legitimate outcome).
std::optional<std::vector<std::pair<ItemId, ItemId>>> brualdi_bijection(
    const MatroidOracle& m, const ItemSet& a, const ItemSet& b);

// Uniform handle over one matroid or one matchoid, carrying the rank bound
// used for window planning.
class ConstraintOracle {
 public:
  ConstraintOracle() = default;
  explicit ConstraintOracle(MatroidPtr m);
  explicit ConstraintOracle(MatchoidPtr q);

  bool feasible(const ItemSet& s) const;
  int k() const { return k_; }
  // Matchoids have no cheap exact rank; instance files may override the
  // greedy default.
  void set_k(int k) { k_ = k; }
  int p() const;
  bool is_matchoid() const { return q_ != nullptr; }
  int ground_size() const;

  GainResult gain(const SubmodularOracle& f, ItemId e, const ItemSet& s,
                  double f_of_s) const;
  GainResult gain(const SubmodularOracle& f, ItemId e, const ItemSet& s) const;

  const MatroidPtr& matroid() const { return m_; }
  const MatchoidPtr& matchoid() const { return q_; }

 private:
  MatroidPtr m_;
  MatchoidPtr q_;
  int k_ = 0;
};

}  // namespace shortlist
