#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "welzl/generators.hpp"

namespace welzl {

// One block of the benchmark matrix: every parameter tuple crossed with every
// seed.
struct BenchEntry {
  std::string family;
  std::vector<std::vector<std::int64_t>> params;
  std::optional<double> c;  // empty means unknown c (doubling search)
  int d = 1;
  std::vector<std::uint64_t> seeds;
  int trials = 1;  // boosted trials for fixed c; per level for unknown c
  std::uint64_t instance_seed = 1;
  bool cover = false;
};

struct BenchSuite {
  std::string name;
  std::vector<BenchEntry> entries;
};

// JSON suite file:
//   {"name": "...", "entries": [{"family": "grid", "params": [[64, 64]],
//     "c": 2 | "auto", "d": 1, "seeds": [1, 2] | {"first": 1, "count": 300},
//     "trials": 1, "instance_seed": 1, "cover": false}]}
// Throws FormatError.
BenchSuite parse_suite(std::string_view text);

struct BenchRow {
  std::size_t entry = 0;
  std::string family;
  std::string params;
  std::size_t n = 0;
  std::size_t norm = 0;
  double c = 0;  // c the order was computed with (c_used for unknown c)
  int d = 1;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;      // largest iteration count over all traces
  std::size_t iteration_cap = 0;
  std::size_t runs = 0;            // engine runs executed for this row
  double seconds = 0;              // engine time only
  std::optional<std::size_t> crossing;
  double bound = 0;
  bool pass = false;               // order returned and crossing <= bound
  std::string outcome;             // "order", "false", "cap" or "error: ..."
  std::optional<bool> cover_ok;
  std::optional<std::size_t> cover_overlap;
  double cover_target = 0;
};

struct BenchAggregate {
  std::size_t entry = 0;
  std::string family;
  std::string params;
  std::size_t n = 0;
  std::size_t norm = 0;
  std::size_t rows = 0;
  std::size_t failures = 0;      // rows without an order
  double failure_rate = 0;
  double median_seconds = 0;
  // median_seconds / (||S|| * log2 ||S||).
  double time_ratio = 0;
};

struct BenchScaling {
  std::size_t entry = 0;
  std::string family;
  double min_ratio = 0;
  double max_ratio = 0;
  double spread = 0;  // max_ratio / min_ratio
};

struct BenchReport {
  std::string name;
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;
  std::vector<BenchScaling> scaling;
};

// Runs the matrix sequentially. Row failures are recorded, never thrown.
// Progress lines go to `log` when given.
BenchReport run_suite(const BenchSuite& suite, std::ostream* log = nullptr);

// Tab-separated rows then aggregates; no timestamps.
std::string report_tsv(const BenchReport& report);
std::string report_json(const BenchReport& report);
std::string report_text(const BenchReport& report);

}  // namespace welzl
