#include "welzl/setsystem.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace welzl {
namespace {

constexpr Id kUnmapped = std::numeric_limits<Id>::max();

// Transposes a CSR structure with `rows` rows into one with `columns` rows.
// Each output row comes out sorted by source row id.
void transpose(std::size_t columns, const std::vector<std::size_t>& offsets,
               const std::vector<Id>& ids, std::vector<std::size_t>& out_offsets,
               std::vector<Id>& out_ids) {
  out_offsets.assign(columns + 1, 0);
  for (Id id : ids) ++out_offsets[id + 1];
  for (std::size_t i = 0; i < columns; ++i) out_offsets[i + 1] += out_offsets[i];
  out_ids.resize(ids.size());
  std::vector<std::size_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
  const std::size_t rows = offsets.size() - 1;
  for (std::size_t row = 0; row < rows; ++row) {
    for (std::size_t k = offsets[row]; k < offsets[row + 1]; ++k) {
      out_ids[cursor[ids[k]]++] = static_cast<Id>(row);
    }
  }
}

// Removes adjacent duplicates inside each (sorted) row.
void dedup_rows(std::vector<std::size_t>& offsets, std::vector<Id>& ids) {
  std::size_t write = 0;
  std::size_t row_begin = 0;
  for (std::size_t row = 0; row + 1 < offsets.size(); ++row) {
    const std::size_t end = offsets[row + 1];
    const std::size_t start = write;
    for (std::size_t k = row_begin; k < end; ++k) {
      if (write == start || ids[write - 1] != ids[k]) ids[write++] = ids[k];
    }
    row_begin = end;
    offsets[row + 1] = write;
  }
  ids.resize(write);
}

void check_count(std::int64_t value, const char* what) {
  if (value < 0 || static_cast<std::uint64_t>(value) >= std::numeric_limits<Id>::max()) {
    throw std::invalid_argument(std::string("invalid ") + what + ": " +
                                std::to_string(value));
  }
}

}  // namespace

SetSystem SetSystem::build(
    std::int64_t num_elements, std::int64_t num_sets,
    std::span<const std::pair<std::int64_t, std::int64_t>> edges) {
  check_count(num_elements, "element count");
  check_count(num_sets, "set count");
  std::vector<std::size_t> element_offsets(static_cast<std::size_t>(num_elements) + 1, 0);
  for (const auto& [set, element] : edges) {
    if (set < 0 || element < 0) {
      throw std::invalid_argument("negative id in edge (" + std::to_string(set) + ", " +
                                  std::to_string(element) + ")");
    }
    if (set >= num_sets || element >= num_elements) {
      throw std::invalid_argument("edge (" + std::to_string(set) + ", " +
                                  std::to_string(element) + ") exceeds declared sizes");
    }
    ++element_offsets[static_cast<std::size_t>(element) + 1];
  }
  for (std::size_t i = 0; i + 1 < element_offsets.size(); ++i) {
    element_offsets[i + 1] += element_offsets[i];
  }
  std::vector<Id> element_sets(edges.size());
  std::vector<std::size_t> cursor(element_offsets.begin(), element_offsets.end() - 1);
  for (const auto& [set, element] : edges) {
    element_sets[cursor[static_cast<std::size_t>(element)]++] = static_cast<Id>(set);
  }

  SetSystem system;
  // element rows (unsorted) -> set rows (sorted by element) -> dedup -> back.
  transpose(static_cast<std::size_t>(num_sets), element_offsets, element_sets,
            system.set_offsets_, system.set_members_);
  dedup_rows(system.set_offsets_, system.set_members_);
  system.element_offsets_.assign(static_cast<std::size_t>(num_elements) + 1, 0);
  system.build_transpose();
  return system;
}

SetSystem SetSystem::from_members(std::size_t num_elements,
                                  const std::vector<std::vector<Id>>& members) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t set = 0; set < members.size(); ++set) {
    for (Id element : members[set]) {
      edges.emplace_back(static_cast<std::int64_t>(set), element);
    }
  }
  return build(static_cast<std::int64_t>(num_elements),
               static_cast<std::int64_t>(members.size()), edges);
}

void SetSystem::build_transpose() {
  transpose(num_elements(), set_offsets_, set_members_, element_offsets_, element_sets_);
}

bool SetSystem::contains(Id set, Id element) const {
  const auto row = members(set);
  return std::binary_search(row.begin(), row.end(), element);
}

bool SetSystem::is_consistent() const {
  if (set_offsets_.back() != set_members_.size() ||
      element_offsets_.back() != element_sets_.size() ||
      set_members_.size() != element_sets_.size()) {
    return false;
  }
  for (Id set = 0; set < num_sets(); ++set) {
    const auto row = members(set);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= num_elements()) return false;
      if (k > 0 && row[k - 1] >= row[k]) return false;
      const auto back = sets_containing(row[k]);
      if (!std::binary_search(back.begin(), back.end(), set)) return false;
    }
  }
  for (Id element = 0; element < num_elements(); ++element) {
    const auto row = sets_containing(element);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= num_sets()) return false;
      if (k > 0 && row[k - 1] >= row[k]) return false;
    }
  }
  return true;
}

void LinearityParams::validate() const {
  if (!(c >= 1.0)) throw std::invalid_argument("linearity constant c must be >= 1");
  if (d < 1) throw std::invalid_argument("shatter exponent d must be >= 1");
}

SetSystem dual(const SetSystem& system) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  edges.reserve(system.num_edges());
  for (Id element = 0; element < system.num_elements(); ++element) {
    for (Id set : system.sets_containing(element)) edges.emplace_back(element, set);
  }
  return SetSystem::build(static_cast<std::int64_t>(system.num_sets()),
                          static_cast<std::int64_t>(system.num_elements()), edges);
}

Restriction restrict(const SetSystem& system, std::span<const Id> elements,
                     std::span<const Id> sets) {
  std::vector<Id> local(system.num_elements(), kUnmapped);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Id e = elements[i];
    if (e >= system.num_elements() || local[e] != kUnmapped) {
      throw std::out_of_range("restrict: bad or repeated element id " + std::to_string(e));
    }
    local[e] = static_cast<Id>(i);
  }
  std::vector<bool> seen_set(system.num_sets(), false);
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const Id s = sets[j];
    if (s >= system.num_sets() || seen_set[s]) {
      throw std::out_of_range("restrict: bad or repeated set id " + std::to_string(s));
    }
    seen_set[s] = true;
    for (Id e : system.members(s)) {
      if (local[e] != kUnmapped) edges.emplace_back(static_cast<std::int64_t>(j), local[e]);
    }
  }
  Restriction out;
  out.system = SetSystem::build(static_cast<std::int64_t>(elements.size()),
                                static_cast<std::int64_t>(sets.size()), edges);
  out.element_ids.assign(elements.begin(), elements.end());
  out.set_ids.assign(sets.begin(), sets.end());
  return out;
}

}  // namespace welzl
