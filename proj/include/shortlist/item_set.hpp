#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace shortlist {

using ItemId = int;

// Sorted duplicate-free id container. Working sets and shortlists stay small
// (a few dozen ids), so a flat vector wins on locality and gives deterministic
// iteration order, which the tie-breaking rules rely on.
class ItemSet {
 public:
  ItemSet() = default;
  ItemSet(std::initializer_list<ItemId> ids) : v_(ids) { normalize(); }
  explicit ItemSet(std::vector<ItemId> ids) : v_(std::move(ids)) { normalize(); }

  bool contains(ItemId e) const {
    return std::binary_search(v_.begin(), v_.end(), e);
  }

  void insert(ItemId e) {
    auto it = std::lower_bound(v_.begin(), v_.end(), e);
    if (it == v_.end() || *it != e) v_.insert(it, e);
  }

  void erase(ItemId e) {
    auto it = std::lower_bound(v_.begin(), v_.end(), e);
    if (it != v_.end() && *it == e) v_.erase(it);
  }

  ItemSet with(ItemId e) const {
    ItemSet r = *this;
    r.insert(e);
    return r;
  }

  ItemSet without(ItemId e) const {
    ItemSet r = *this;
    r.erase(e);
    return r;
  }

  // (S \ remove) + e in one pass; the shape every replacement-gain query needs.
  ItemSet with_minus(ItemId e, const ItemSet& remove) const {
    ItemSet r;
    r.v_.reserve(v_.size() + 1);
    for (ItemId x : v_) {
      if (!remove.contains(x)) r.v_.push_back(x);
    }
    r.insert(e);
    return r;
  }

  ItemSet set_union(const ItemSet& o) const {
    ItemSet r;
    r.v_.reserve(v_.size() + o.v_.size());
    std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                   std::back_inserter(r.v_));
    return r;
  }

  ItemSet set_minus(const ItemSet& o) const {
    ItemSet r;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                        std::back_inserter(r.v_));
    return r;
  }

  ItemSet set_intersect(const ItemSet& o) const {
    ItemSet r;
    std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                          std::back_inserter(r.v_));
    return r;
  }

  bool subset_of(const ItemSet& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<ItemId>& ids() const { return v_; }

  friend bool operator==(const ItemSet& a, const ItemSet& b) = default;
  // Lexicographic on the sorted ids: {} < {1} < {1,4} < {2}. This is the
  // ordering used to break ties between removal sets.
  friend std::strong_ordering operator<=>(const ItemSet& a, const ItemSet& b) {
    return a.v_ <=> b.v_;
  }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  std::vector<ItemId> v_;
};

}  // namespace shortlist
