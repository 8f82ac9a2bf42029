#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "maxsub/errors.hpp"

namespace maxsub {

/// Elements of the ground set carry dense 1-based labels; label order is the
/// element order.
using Element = std::uint32_t;

namespace detail {

struct SlotTally {
  std::int64_t live = 0;
  std::int64_t peak = 0;
};

inline thread_local SlotTally slot_tally;

}  // namespace detail

/// Allocator that tallies live slots per thread. Every element container in
/// the library uses it, so a SlotMeter can report the working memory of an
/// enumeration in element slots.
template <class T>
class SlotAllocator {
 public:
  using value_type = T;

  SlotAllocator() noexcept = default;
  template <class U>
  SlotAllocator(const SlotAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    auto& tally = detail::slot_tally;
    tally.live += static_cast<std::int64_t>(n);
    if (tally.live > tally.peak) tally.peak = tally.live;
    return p;
  }

  void deallocate(T* p, std::size_t n) noexcept {
    detail::slot_tally.live -= static_cast<std::int64_t>(n);
    std::allocator<T>{}.deallocate(p, n);
  }

  friend bool operator==(const SlotAllocator&, const SlotAllocator&) noexcept { return true; }
};

/// Scoped view on the slot tally: peak() is the high-water mark of slots
/// allocated since construction and not yet released.
class SlotMeter {
 public:
  SlotMeter() : base_(detail::slot_tally.live), saved_peak_(detail::slot_tally.peak) {
    detail::slot_tally.peak = detail::slot_tally.live;
  }
  ~SlotMeter() { detail::slot_tally.peak = std::max(saved_peak_, detail::slot_tally.peak); }

  SlotMeter(const SlotMeter&) = delete;
  SlotMeter& operator=(const SlotMeter&) = delete;

  std::int64_t peak() const { return detail::slot_tally.peak - base_; }
  std::int64_t live() const { return detail::slot_tally.live - base_; }

 private:
  std::int64_t base_;
  std::int64_t saved_peak_;
};

/// Hides the slot activity of a scope (e.g. a user sink that keeps copies of
/// solutions) from enclosing meters.
class SlotPause {
 public:
  SlotPause() : saved_(detail::slot_tally) {}
  ~SlotPause() { detail::slot_tally = saved_; }

  SlotPause(const SlotPause&) = delete;
  SlotPause& operator=(const SlotPause&) = delete;

 private:
  detail::SlotTally saved_;
};

using ElementSeq = std::vector<Element, SlotAllocator<Element>>;

/// Sorted, duplicate-free set of elements.
class ElementSet {
 public:
  using const_iterator = ElementSeq::const_iterator;

  ElementSet() = default;

  ElementSet(std::initializer_list<Element> items) : items_(items) { normalize(); }

  /// Sorts the input; duplicates are rejected.
  template <class Range>
  static ElementSet from_range(const Range& range) {
    ElementSet out;
    for (auto e : range) out.items_.push_back(static_cast<Element>(e));
    out.normalize();
    return out;
  }

  /// Adopts an already sorted sequence.
  static ElementSet from_sorted(ElementSeq items) {
    ElementSet out;
    out.items_ = std::move(items);
    if (std::adjacent_find(out.items_.begin(), out.items_.end(), std::greater_equal<>{}) !=
        out.items_.end())
      throw PreconditionError("element sequence is not strictly increasing");
    return out;
  }

  /// Elements whose bit is set in `mask`, bit i standing for ground[i].
  static ElementSet from_mask(std::uint64_t mask, std::span<const Element> ground) {
    ElementSet out;
    out.items_.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::size_t i = 0; i < ground.size() && mask != 0; ++i, mask >>= 1)
      if (mask & 1u) out.items_.push_back(ground[i]);
    return out;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  Element operator[](std::size_t i) const { return items_[i]; }
  Element front() const { return items_.front(); }
  Element back() const { return items_.back(); }
  std::span<const Element> view() const noexcept { return items_; }
  const ElementSeq& sequence() const noexcept { return items_; }

  bool contains(Element e) const { return std::binary_search(items_.begin(), items_.end(), e); }

  /// Position of `e`, or size() when absent.
  std::size_t index_of(Element e) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    return (it != items_.end() && *it == e) ? static_cast<std::size_t>(it - items_.begin())
                                             : items_.size();
  }

  bool insert(Element e) {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it != items_.end() && *it == e) return false;
    if (items_.size() == items_.capacity()) {
      // Grow by a small step so working sets stay close to their size.
      ElementSeq grown;
      grown.reserve(items_.size() + 1 + items_.size() / 4);
      auto pos = it - items_.begin();
      grown.insert(grown.end(), items_.begin(), items_.begin() + pos);
      grown.push_back(e);
      grown.insert(grown.end(), items_.begin() + pos, items_.end());
      items_.swap(grown);
    } else {
      items_.insert(it, e);
    }
    return true;
  }

  bool erase(Element e) {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it == items_.end() || *it != e) return false;
    items_.erase(it);
    return true;
  }

  /// Appends an element larger than every current one.
  void append(Element e) {
    if (!items_.empty() && items_.back() >= e) throw PreconditionError("append out of order");
    items_.push_back(e);
  }

  void reserve(std::size_t n) { items_.reserve(n); }
  void clear() noexcept { items_.clear(); }
  void release() noexcept { ElementSeq{}.swap(items_); }

  /// Copy with `e` added; allocates exactly size()+1 slots.
  ElementSet with(Element e) const {
    ElementSet out;
    out.items_.reserve(items_.size() + 1);
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    out.items_.insert(out.items_.end(), items_.begin(), it);
    if (it == items_.end() || *it != e) out.items_.push_back(e);
    out.items_.insert(out.items_.end(), it, items_.end());
    return out;
  }

  ElementSet without(Element e) const {
    ElementSet out;
    out.items_.reserve(items_.size());
    for (Element x : items_)
      if (x != e) out.items_.push_back(x);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  bool intersects(const ElementSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.items_ == b.items_; }

  /// Lexicographic order of the sorted sequences.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
      throw PreconditionError("duplicate element in set");
  }

  ElementSeq items_;
};

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSeq out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet::from_sorted(std::move(out));
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSeq out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet::from_sorted(std::move(out));
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSeq out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet::from_sorted(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  return os << '}';
}

}  // namespace maxsub
