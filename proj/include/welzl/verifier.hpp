#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "welzl/order.hpp"
#include "welzl/partition.hpp"
#include "welzl/setsystem.hpp"

namespace welzl {

struct CrossingReport {
  // Number of order-adjacent pairs with exactly one endpoint in the set.
  std::vector<std::size_t> per_set;
  // Crossing number of the order: max over per_set (0 with no sets).
  std::size_t max = 0;
  std::optional<double> bound;
  bool pass = true;
};

// Exact per-set crossings in O(||S||): member positions are bucketed by a
// sweep over the order, then each set contributes 2 * (#runs) minus the runs
// touching either end of the order. Throws std::invalid_argument unless
// `sequence` is a permutation of the elements.
CrossingReport crossing_number(const SetSystem& system, std::span<const Id> sequence);
CrossingReport crossing_number(const SetSystem& system, const Order& order);

struct ExhaustiveMinimum {
  std::size_t value = 0;
  std::vector<Id> witness;
};

constexpr std::size_t kExhaustiveLimit = 9;

// Minimum crossing number over all orders of the elements. Orders and their
// reversals cross identically, so only sequences with front < back are
// visited. Throws std::invalid_argument if |A| > kExhaustiveLimit.
ExhaustiveMinimum min_crossing_exhaustive(const SetSystem& system);

// Crossing report compared against the bound certified for `params`
// (12c^2 log^2|A| for d = 1, the polynomial expression for d >= 2).
CrossingReport certify(const SetSystem& system, std::span<const Id> sequence,
                       const LinearityParams& params);

struct NearTwinAudit {
  bool pass = false;
  std::size_t observed = 0;
};

// Passes iff near_twin_max_diff(system, partition) <= limit.
NearTwinAudit audit_near_twin(const SetSystem& system, const Partition& partition, double limit);

enum class ProbeMode : std::uint8_t { Exact, Sampled };
enum class ProbeSides : std::uint8_t { Primal, Dual, Both };

struct ShatterSample {
  std::size_t k = 0;
  std::size_t traces = 0;
};

struct ShatterProbe {
  ProbeMode mode = ProbeMode::Exact;
  int d = 1;
  std::vector<ShatterSample> primal;
  std::vector<ShatterSample> dual;
  // Smallest c >= 1 with traces <= c * k^d on every sample with k >= 1. In
  // sampled mode the trace counts, and hence c_hat, are lower bounds.
  double c_hat = 1.0;
};

constexpr std::size_t kExactProbeLimit = 20;

struct ProbeConfig {
  ProbeMode mode = ProbeMode::Exact;
  ProbeSides sides = ProbeSides::Both;
  std::vector<std::size_t> sizes;
  std::size_t trials = 64;  // sampled mode only
  std::uint64_t seed = 0;   // sampled mode only
  int d = 1;
};

// Trace counts pi(k) (primal: classes of the sets over a k-subset of the
// elements; dual: classes of the elements over a k-subset of the sets).
// Exact mode enumerates every k-subset and throws std::invalid_argument if
// an enumerated side has more than kExactProbeLimit ids.
ShatterProbe shatter_probe(const SetSystem& system, const ProbeConfig& config);

}  // namespace welzl
