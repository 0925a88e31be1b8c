#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "welzl/setsystem.hpp"

namespace welzl {

// A total order on (a subset of) the element ids 0..universe-1, kept as a
// doubly linked list threaded through flat arrays. The node handle of an
// element is its id, so position lookup and insert-after are O(1).
class Order {
 public:
  static constexpr Id kNil = std::numeric_limits<Id>::max();

  Order() = default;
  explicit Order(std::size_t universe);

  // Throws std::invalid_argument on out-of-range or repeated ids.
  static Order from_sequence(std::size_t universe, std::span<const Id> sequence);

  std::size_t universe() const { return next_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Id v) const { return v < universe() && present_[v]; }

  Id front() const { return head_; }
  Id next(Id v) const { return next_[v]; }

  void push_back(Id v);
  // Places `v` immediately after `anchor`. Throws std::logic_error if
  // `anchor` is absent or `v` already present.
  void insert_after(Id anchor, Id v);

  std::vector<Id> sequence() const;

  // True iff the order covers every id of its universe exactly once.
  bool is_permutation() const;

 private:
  std::vector<Id> next_;
  std::vector<Id> prev_;
  std::vector<bool> present_;
  Id head_ = kNil;
  Id tail_ = kNil;
  std::size_t size_ = 0;
};

// For a sequence over 0..n-1, position[v] = index of v. Throws
// std::invalid_argument unless the sequence is a permutation of 0..n-1.
std::vector<std::size_t> inverse_permutation(std::size_t n, std::span<const Id> sequence);

}  // namespace welzl
