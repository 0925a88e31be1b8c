#include "welzl/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace welzl {

bool Partition::is_valid() const {
  std::vector<bool> used(representative.size(), false);
  for (Id k : class_of) {
    if (k >= representative.size()) return false;
    used[k] = true;
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return false;
  for (std::size_t k = 0; k < representative.size(); ++k) {
    const Id rep = representative[k];
    if (rep >= class_of.size() || class_of[rep] != k) return false;
  }
  return true;
}

Partition twin_partition(const SetSystem& system, Side side) {
  std::vector<Id> all(system.size(opposite(side)));
  std::iota(all.begin(), all.end(), Id{0});
  return twin_partition(system, side, all);
}

Partition twin_partition(const SetSystem& system, Side side, std::span<const Id> refiners) {
  const std::size_t n = system.size(side);
  Partition result;
  result.side = side;
  if (n == 0) return result;

  // Classes are contiguous ranges of `items`; splitting moves the refiner's
  // neighbors to the front of their class and cuts the range there.
  std::vector<Id> items(n);
  std::iota(items.begin(), items.end(), Id{0});
  std::vector<std::size_t> position(n);
  std::iota(position.begin(), position.end(), std::size_t{0});
  std::vector<Id> cls(n, 0);
  std::vector<std::size_t> begin{0};
  std::vector<std::size_t> end{n};
  std::vector<std::size_t> moved{0};
  std::vector<Id> touched;

  const Side other = opposite(side);
  for (Id r : refiners) {
    if (r >= system.size(other)) throw std::out_of_range("twin_partition: refiner out of range");
    for (Id v : system.neighbors(other, r)) {
      const Id k = cls[v];
      const std::size_t target = begin[k] + moved[k];
      const Id displaced = items[target];
      std::swap(items[target], items[position[v]]);
      position[displaced] = position[v];
      position[v] = target;
      if (moved[k]++ == 0) touched.push_back(k);
    }
    for (Id k : touched) {
      const std::size_t count = moved[k];
      moved[k] = 0;
      if (count == end[k] - begin[k]) continue;
      const Id fresh = static_cast<Id>(begin.size());
      begin.push_back(begin[k]);
      end.push_back(begin[k] + count);
      moved.push_back(0);
      for (std::size_t p = begin[k]; p < begin[k] + count; ++p) cls[items[p]] = fresh;
      begin[k] += count;
    }
    touched.clear();
  }

  constexpr Id kNone = std::numeric_limits<Id>::max();
  std::vector<Id> relabel(begin.size(), kNone);
  result.class_of.resize(n);
  for (Id v = 0; v < n; ++v) {
    Id& label = relabel[cls[v]];
    if (label == kNone) {
      label = static_cast<Id>(result.representative.size());
      result.representative.push_back(v);
    }
    result.class_of[v] = label;
  }
  return result;
}

std::size_t near_twin_max_diff(const SetSystem& system, const Partition& partition) {
  if (partition.side != Side::Sets || partition.size() != system.num_sets()) {
    throw std::invalid_argument("near_twin_max_diff: expected a partition of the sets");
  }
  const std::size_t classes = partition.num_classes();
  // Bucket sets by class.
  std::vector<std::size_t> offsets(classes + 1, 0);
  for (Id k : partition.class_of) ++offsets[k + 1];
  for (std::size_t k = 0; k < classes; ++k) offsets[k + 1] += offsets[k];
  std::vector<Id> bucket(partition.size());
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (Id b = 0; b < partition.size(); ++b) bucket[cursor[partition.class_of[b]]++] = b;
  }

  std::vector<bool> mark(system.num_elements(), false);
  std::size_t worst = 0;
  for (std::size_t k = 0; k < classes; ++k) {
    const auto rep_members = system.members(partition.representative[k]);
    for (Id a : rep_members) mark[a] = true;
    for (std::size_t i = offsets[k]; i < offsets[k + 1]; ++i) {
      const auto row = system.members(bucket[i]);
      std::size_t common = 0;
      for (Id a : row) common += mark[a] ? 1 : 0;
      worst = std::max(worst, row.size() + rep_members.size() - 2 * common);
    }
    for (Id a : rep_members) mark[a] = false;
  }
  return worst;
}

}  // namespace welzl
