#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "welzl/setsystem.hpp"

namespace welzl {

// Partition of one side into classes 0..num_classes()-1, each with a
// designated representative inside the class.
struct Partition {
  Side side = Side::Sets;
  std::vector<Id> class_of;
  std::vector<Id> representative;

  std::size_t num_classes() const { return representative.size(); }
  std::size_t size() const { return class_of.size(); }

  // Class ids contiguous, every representative lies in its own class.
  bool is_valid() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Coarsest partition of `side` into classes of equal neighborhoods.
// Representatives are the smallest id of each class; classes are numbered by
// their representative in increasing order. O(|A| + |B| + |E|).
Partition twin_partition(const SetSystem& system, Side side);

// Twin partition of `side` in the subgraph where the opposite side is cut down
// to `refiners` (e.g. the partition of B in G[W, B]). O(|side| + |refiners| +
// edges incident to refiners).
Partition twin_partition(const SetSystem& system, Side side, std::span<const Id> refiners);

// Smallest k such that `partition` (of the sets) is a k-near twin partition
// with its representatives, i.e. max over sets b of |N(b) xor N(rep(b))|.
// Counter-per-set scan with a flat mark array; O(|A| + |B| + |E|).
std::size_t near_twin_max_diff(const SetSystem& system, const Partition& partition);

}  // namespace welzl
