#include "shortlist/constraints.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shortlist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // false when x and y were already connected
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int ground, int k) : ground_(ground), k_(k) {}
  bool is_independent(const ItemSet& s) const override {
    return static_cast<int>(s.size()) <= k_;
  }
  int ground_size() const override { return ground_; }
  int rank() const override { return std::min(k_, ground_); }

 private:
  int ground_;
  int k_;
};

class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(int ground, std::vector<int> block_of,
                   std::vector<int> caps, int rank)
      : ground_(ground),
        block_of_(std::move(block_of)),
        caps_(std::move(caps)),
        rank_(rank) {}

  bool is_independent(const ItemSet& s) const override {
    std::vector<int> used(caps_.size(), 0);
    for (ItemId e : s) {
      if (e < 0 || e >= ground_) return false;
      if (++used[block_of_[e]] > caps_[block_of_[e]]) return false;
    }
    return true;
  }
  int ground_size() const override { return ground_; }
  int rank() const override { return rank_; }

 private:
  int ground_;
  std::vector<int> block_of_;
  std::vector<int> caps_;
  int rank_;
};

class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges,
                 int rank)
      : vertices_(vertices), edges_(std::move(edges)), rank_(rank) {}

  bool is_independent(const ItemSet& s) const override {
    UnionFind uf(vertices_);
    for (ItemId e : s) {
      if (e < 0 || e >= static_cast<int>(edges_.size())) return false;
      if (!uf.unite(edges_[e].first, edges_[e].second)) return false;
    }
    return true;
  }
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  int rank() const override { return rank_; }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
  int rank_;
};

// Shared comparator: higher gain wins; ties go to the lexicographically
// smaller removal set (empty beats any exchange of equal value).
bool better(double gain, const ItemSet& removed, double best_gain,
            const ItemSet& best_removed) {
  if (gain != best_gain) return gain > best_gain;
  return removed < best_removed;
}

GainResult theta_impl(const SubmodularOracle& f, const MatroidOracle& m,
                      ItemId e, const ItemSet& s, double f_of_s) {
  GainResult best;
  if (m.is_independent(s.with(e))) {
    best.feasible = true;
    best.gain = f.eval(s.with(e)) - f_of_s;
    best.removed = ItemSet{};
  }
  for (ItemId out : s) {
    ItemSet swapped = s.with_minus(e, ItemSet{out});
    if (!m.is_independent(swapped)) continue;
    double gain = f.eval(swapped) - f_of_s;
    ItemSet removed{out};
    if (!best.feasible || better(gain, removed, best.gain, best.removed)) {
      best.feasible = true;
      best.gain = gain;
      best.removed = removed;
    }
  }
  return best;
}

}  // namespace

MatroidPtr make_uniform_matroid(int ground, int k) {
  if (ground < 0 || k < 0) {
    throw std::invalid_argument("uniform matroid: negative parameter");
  }
  return std::make_shared<UniformMatroid>(ground, k);
}

MatroidPtr make_partition_matroid(int ground,
                                  std::vector<std::vector<ItemId>> blocks,
                                  std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    throw std::invalid_argument("partition matroid: one cap per block");
  }
  std::vector<int> block_of(ground, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (caps[b] < 0) throw std::invalid_argument("partition matroid: negative cap");
    for (ItemId e : blocks[b]) {
      if (e < 0 || e >= ground) {
        throw std::invalid_argument("partition matroid: id outside ground");
      }
      if (block_of[e] != -1) {
        throw std::invalid_argument("partition matroid: id in two blocks");
      }
      block_of[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < ground; ++e) {
    if (block_of[e] == -1) {
      throw std::invalid_argument(
          "partition matroid: blocks must cover the ground exactly");
    }
  }
  int rank = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    rank += std::min<int>(caps[b], static_cast<int>(blocks[b].size()));
  }
  return std::make_shared<PartitionMatroid>(ground, std::move(block_of),
                                            std::move(caps), rank);
}

MatroidPtr make_graphic_matroid(int vertices,
                                std::vector<std::pair<int, int>> edges) {
  if (vertices <= 0) throw std::invalid_argument("graphic matroid: no vertices");
  UnionFind uf(vertices);
  int rank = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
      throw std::invalid_argument("graphic matroid: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graphic matroid: self loop");
    if (uf.unite(u, v)) ++rank;
  }
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges), rank);
}

GainResult theta_matroid(const SubmodularOracle& f, const MatroidOracle& m,
                         ItemId e, const ItemSet& s) {
  if (s.contains(e)) {
    throw std::logic_error("theta: candidate already in the working set");
  }
  if (!m.is_independent(s)) {
    throw std::logic_error("theta: working set is not independent");
  }
  return theta_impl(f, m, e, s, f.eval(s));
}

GainResult theta_matroid(const SubmodularOracle& f, const MatroidOracle& m,
                         ItemId e, const ItemSet& s, double f_of_s) {
  assert(!s.contains(e));
  assert(m.is_independent(s));
  return theta_impl(f, m, e, s, f_of_s);
}

Matchoid::Matchoid(int p, int ground_size, std::vector<MatchoidMember> members)
    : p_(p), ground_size_(ground_size), members_(std::move(members)) {
  if (p_ < 1) throw std::invalid_argument("matchoid: p must be at least 1");
  incidence_.resize(ground_size_);
  for (std::size_t idx = 0; idx < members_.size(); ++idx) {
    if (!members_[idx].matroid) {
      throw std::invalid_argument("matchoid: null member matroid");
    }
    for (ItemId e : members_[idx].ground) {
      if (e < 0 || e >= ground_size_) {
        throw std::invalid_argument("matchoid: member ground outside ground");
      }
      incidence_[e].push_back(static_cast<int>(idx));
      if (static_cast<int>(incidence_[e].size()) > p_) {
        throw std::invalid_argument(
            "matchoid: item " + std::to_string(e) + " appears in more than " +
            std::to_string(p_) + " member grounds");
      }
    }
  }
}

bool Matchoid::feasible(const ItemSet& s) const {
  for (const auto& mem : members_) {
    if (!mem.matroid->is_independent(s.set_intersect(mem.ground))) return false;
  }
  return true;
}

const std::vector<int>& Matchoid::members_of(ItemId e) const {
  if (e < 0 || e >= ground_size_) {
    throw std::invalid_argument("matchoid: id outside ground");
  }
  return incidence_[e];
}

OmegaResult omega(const MatroidOracle& m, const ItemSet& member_ground,
                  ItemId e, const ItemSet& s) {
  OmegaResult r;
  ItemSet local = s.set_intersect(member_ground);
  if (m.is_independent(local.with(e))) r.allows_empty = true;
  for (ItemId out : local) {
    if (m.is_independent(local.with_minus(e, ItemSet{out}))) {
      r.removable.insert(out);
    }
  }
  return r;
}

namespace {

GainResult gain_matchoid_impl(const SubmodularOracle& f, const Matchoid& q,
                              ItemId e, const ItemSet& s, double f_of_s) {
  const auto& involved = q.members_of(e);
  // Repair options per member; an unrepairable member kills the candidate.
  std::vector<std::vector<ItemId>> options;
  options.reserve(involved.size());
  for (int idx : involved) {
    const auto& mem = q.members()[static_cast<std::size_t>(idx)];
    OmegaResult om = omega(*mem.matroid, mem.ground, e, s);
    std::vector<ItemId> opts;
    if (om.allows_empty) opts.push_back(-1);  // -1 encodes "remove nothing"
    for (ItemId out : om.removable) opts.push_back(out);
    if (opts.empty()) return GainResult{};
    options.push_back(std::move(opts));
  }

  GainResult best;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    ItemSet removed;
    for (std::size_t i = 0; i < options.size(); ++i) {
      ItemId out = options[i][pick[i]];
      if (out >= 0) removed.insert(out);
    }
    ItemSet swapped = s.with_minus(e, removed);
    assert(q.feasible(swapped));
    double gain = f.eval(swapped) - f_of_s;
    if (!best.feasible || better(gain, removed, best.gain, best.removed)) {
      best.feasible = true;
      best.gain = gain;
      best.removed = removed;
    }
    // advance the mixed-radix counter over the option product
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return best;
}

}  // namespace

GainResult gain_matchoid(const SubmodularOracle& f, const Matchoid& q,
                         ItemId e, const ItemSet& s) {
  if (s.contains(e)) {
    throw std::logic_error("gain: candidate already in the working set");
  }
  if (!q.feasible(s)) {
    throw std::logic_error("gain: working set is not feasible");
  }
  return gain_matchoid_impl(f, q, e, s, f.eval(s));
}

GainResult gain_matchoid(const SubmodularOracle& f, const Matchoid& q,
                         ItemId e, const ItemSet& s, double f_of_s) {
  assert(!s.contains(e));
  assert(q.feasible(s));
  return gain_matchoid_impl(f, q, e, s, f_of_s);
}

ItemSet extend_to_basis(const MatroidOracle& m, const ItemSet& s) {
  if (!m.is_independent(s)) {
    throw std::logic_error("extend_to_basis: set is not independent");
  }
  ItemSet basis = s;
  for (ItemId e = 0; e < m.ground_size(); ++e) {
    if (basis.contains(e)) continue;
    if (m.is_independent(basis.with(e))) basis.insert(e);
  }
  return basis;
}

namespace {

// Kuhn's augmenting-path matching on the exchange graph; the sides are tiny
// (at most rank many items) so the simple cubic search is plenty.
bool augment(int left, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_right, std::vector<char>& visited) {
  for (int right : adj[left]) {
    if (visited[right]) continue;
    visited[right] = 1;
    if (match_right[right] < 0 ||
        augment(match_right[right], adj, match_right, visited)) {
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<ItemId, ItemId>>> brualdi_bijection(
    const MatroidOracle& m, const ItemSet& a, const ItemSet& b) {
  if (!m.is_independent(a) || !m.is_independent(b)) {
    throw std::invalid_argument("brualdi: inputs must be independent");
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("brualdi: bases must have equal size");
  }
  std::vector<ItemId> left = a.set_minus(b).ids();
  std::vector<ItemId> right = b.set_minus(a).ids();
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (m.is_independent(a.with_minus(right[j], ItemSet{left[i]}))) {
        adj[i].push_back(static_cast<int>(j));
      }
    }
  }
  std::vector<int> match_right(right.size(), -1);
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<char> visited(right.size(), 0);
    if (!augment(static_cast<int>(i), adj, match_right, visited)) {
      return std::nullopt;
    }
  }
  std::vector<std::pair<ItemId, ItemId>> out;
  out.reserve(a.size());
  for (ItemId x : a.set_intersect(b)) out.emplace_back(x, x);
  std::vector<ItemId> pi(left.size(), -1);
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (match_right[j] >= 0) pi[match_right[j]] = right[j];
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    out.emplace_back(left[i], pi[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstraintOracle::ConstraintOracle(MatroidPtr m) : m_(std::move(m)) {
  if (!m_) throw std::invalid_argument("constraint: null matroid");
  k_ = m_->rank();
}

ConstraintOracle::ConstraintOracle(MatchoidPtr q) : q_(std::move(q)) {
  if (!q_) throw std::invalid_argument("constraint: null matchoid");
  // Greedy maximal feasible size as the default rank bound; instance files
  // may override via set_k.
  ItemSet s;
  for (ItemId e = 0; e < q_->ground_size(); ++e) {
    if (q_->feasible(s.with(e))) s.insert(e);
  }
  k_ = static_cast<int>(s.size());
}

bool ConstraintOracle::feasible(const ItemSet& s) const {
  if (m_) return m_->is_independent(s);
  return q_->feasible(s);
}

int ConstraintOracle::p() const { return m_ ? 1 : q_->p(); }

int ConstraintOracle::ground_size() const {
  return m_ ? m_->ground_size() : q_->ground_size();
}

GainResult ConstraintOracle::gain(const SubmodularOracle& f, ItemId e,
                                  const ItemSet& s, double f_of_s) const {
  if (m_) return theta_matroid(f, *m_, e, s, f_of_s);
  return gain_matchoid(f, *q_, e, s, f_of_s);
}

GainResult ConstraintOracle::gain(const SubmodularOracle& f, ItemId e,
                                  const ItemSet& s) const {
  if (m_) return theta_matroid(f, *m_, e, s);
  return gain_matchoid(f, *q_, e, s);
}

}  // namespace shortlist
