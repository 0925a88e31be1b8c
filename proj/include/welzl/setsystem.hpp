#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace welzl {

using Id = std::uint32_t;

// The two color classes of the bipartite incidence graph (A, B, E).
enum class Side : std::uint8_t { Elements, Sets };

constexpr Side opposite(Side side) {
  return side == Side::Elements ? Side::Sets : Side::Elements;
}

// A set system (U, F) stored as a bipartite graph in adjacency-array form.
// Both directions are kept: members of each set and, transposed, the sets
// containing each element. All lists are strictly increasing. Immutable once
// built.
class SetSystem {
 public:
  SetSystem() = default;

  // Builds the canonical system from (set, element) pairs. Duplicates are
  // dropped. Throws std::invalid_argument on negative or out-of-range ids.
  static SetSystem build(std::int64_t num_elements, std::int64_t num_sets,
                         std::span<const std::pair<std::int64_t, std::int64_t>> edges);

  // Builds from per-set member lists (need not be sorted; duplicates dropped).
  static SetSystem from_members(std::size_t num_elements,
                                const std::vector<std::vector<Id>>& members);

  std::size_t num_elements() const { return element_offsets_.size() - 1; }
  std::size_t num_sets() const { return set_offsets_.size() - 1; }
  std::size_t num_edges() const { return set_members_.size(); }
  std::size_t size(Side side) const {
    return side == Side::Elements ? num_elements() : num_sets();
  }

  // ||S|| = |A| + sum of set sizes.
  std::size_t size_norm() const { return num_elements() + num_edges(); }

  std::span<const Id> members(Id set) const {
    return {set_members_.data() + set_offsets_[set],
            set_members_.data() + set_offsets_[set + 1]};
  }
  std::span<const Id> sets_containing(Id element) const {
    return {element_sets_.data() + element_offsets_[element],
            element_sets_.data() + element_offsets_[element + 1]};
  }
  std::span<const Id> neighbors(Side side, Id v) const {
    return side == Side::Elements ? sets_containing(v) : members(v);
  }

  bool contains(Id set, Id element) const;

  // Checks transpose consistency and strict ordering; used by tests.
  bool is_consistent() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  // CSR rows: set -> members, element -> containing sets.
  std::vector<std::size_t> set_offsets_{0};
  std::vector<Id> set_members_;
  std::vector<std::size_t> element_offsets_{0};
  std::vector<Id> element_sets_;

  void build_transpose();
};

// Swaps the roles of elements and sets. Isolated ids survive as empty sets
// (and empty sets as isolated elements), so sizes round-trip exactly.
SetSystem dual(const SetSystem& system);

// Shatter-function parameters: primal and dual shatter functions bounded by
// c * k^d. d == 1 is the linear case.
struct LinearityParams {
  double c = 1.0;
  int d = 1;

  // Throws std::invalid_argument unless c >= 1 and d >= 1.
  void validate() const;
};

// Induced subsystem G[A', B'] together with the local -> original id tables.
struct Restriction {
  SetSystem system;
  std::vector<Id> element_ids;
  std::vector<Id> set_ids;
};

// `elements` and `sets` must hold distinct in-range ids; local ids follow the
// given order. Throws std::out_of_range otherwise.
Restriction restrict(const SetSystem& system, std::span<const Id> elements,
                     std::span<const Id> sets);

}  // namespace welzl
