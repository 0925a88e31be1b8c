#include "welzl/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "welzl/engine.hpp"
#include "welzl/sampling.hpp"

namespace welzl {

CrossingReport crossing_number(const SetSystem& system, std::span<const Id> sequence) {
  const std::size_t n = system.num_elements();
  // Validates the permutation.
  (void)inverse_permutation(n, sequence);

  // Bucket member positions per set, in increasing position order.
  std::vector<std::size_t> offsets(system.num_sets() + 1, 0);
  for (Id set = 0; set < system.num_sets(); ++set) {
    offsets[set + 1] = offsets[set] + system.members(set).size();
  }
  std::vector<std::size_t> positions(system.num_edges());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t p = 0; p < n; ++p) {
    for (Id set : system.sets_containing(sequence[p])) positions[cursor[set]++] = p;
  }

  CrossingReport report;
  report.per_set.resize(system.num_sets(), 0);
  for (Id set = 0; set < system.num_sets(); ++set) {
    const std::size_t lo = offsets[set];
    const std::size_t hi = offsets[set + 1];
    if (lo == hi) continue;
    std::size_t runs = 1;
    for (std::size_t i = lo + 1; i < hi; ++i) runs += positions[i] != positions[i - 1] + 1;
    std::size_t crossings = 2 * runs;
    if (positions[lo] == 0) --crossings;
    if (positions[hi - 1] == n - 1) --crossings;
    report.per_set[set] = crossings;
    report.max = std::max(report.max, crossings);
  }
  return report;
}

CrossingReport crossing_number(const SetSystem& system, const Order& order) {
  const std::vector<Id> sequence = order.sequence();
  return crossing_number(system, sequence);
}

ExhaustiveMinimum min_crossing_exhaustive(const SetSystem& system) {
  const std::size_t n = system.num_elements();
  if (n > kExhaustiveLimit) {
    throw std::invalid_argument("min_crossing_exhaustive: " + std::to_string(n) +
                                " elements exceeds limit " + std::to_string(kExhaustiveLimit));
  }
  std::vector<Id> sequence(n);
  std::iota(sequence.begin(), sequence.end(), Id{0});
  ExhaustiveMinimum best;
  best.value = crossing_number(system, sequence).max;
  best.witness = sequence;
  if (n < 3) return best;
  do {
    if (sequence.front() > sequence.back()) continue;
    const std::size_t value = crossing_number(system, sequence).max;
    if (value < best.value) {
      best.value = value;
      best.witness = sequence;
    }
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return best;
}

CrossingReport certify(const SetSystem& system, std::span<const Id> sequence,
                       const LinearityParams& params) {
  params.validate();
  CrossingReport report = crossing_number(system, sequence);
  report.bound = crossing_bound(params, system.num_elements());
  report.pass = static_cast<double>(report.max) <= *report.bound;
  return report;
}

NearTwinAudit audit_near_twin(const SetSystem& system, const Partition& partition, double limit) {
  NearTwinAudit audit;
  audit.observed = near_twin_max_diff(system, partition);
  audit.pass = static_cast<double>(audit.observed) <= limit;
  return audit;
}

namespace {

// Max number of classes of `counted` side over k-subsets of the other side.
std::size_t exact_traces(const SetSystem& system, Side counted, std::size_t k) {
  const Side enumerated = opposite(counted);
  const std::size_t n = system.size(enumerated);
  k = std::min(k, n);
  std::vector<Id> subset;
  subset.reserve(k);
  std::size_t best = 0;
  auto visit = [&](std::uint32_t mask) {
    subset.clear();
    for (Id i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    best = std::max(best, twin_partition(system, counted, subset).num_classes());
  };
  if (k == 0) {
    visit(0);
    return best;
  }
  // Gosper's hack over k-bit masks of width n.
  std::uint32_t mask = (1u << k) - 1;
  const std::uint32_t limit = 1u << n;
  while (mask < limit) {
    visit(mask);
    const std::uint32_t low = mask & -mask;
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return best;
}

std::size_t sampled_traces(const SetSystem& system, Side counted, std::size_t k,
                           std::size_t trials, Rng& rng) {
  const std::size_t n = system.size(opposite(counted));
  k = std::min(k, n);
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::vector<Id> subset = uniform_sample(n, k, rng);
    best = std::max(best, twin_partition(system, counted, subset).num_classes());
  }
  return best;
}

}  // namespace

ShatterProbe shatter_probe(const SetSystem& system, const ProbeConfig& config) {
  if (config.d < 1) throw std::invalid_argument("shatter_probe: d must be >= 1");
  const bool primal = config.sides != ProbeSides::Dual;
  const bool dual = config.sides != ProbeSides::Primal;
  if (config.mode == ProbeMode::Exact) {
    if ((primal && system.num_elements() > kExactProbeLimit) ||
        (dual && system.num_sets() > kExactProbeLimit)) {
      throw std::invalid_argument("shatter_probe: exact mode limited to " +
                                  std::to_string(kExactProbeLimit) + " ids per side");
    }
  }
  ShatterProbe probe;
  probe.mode = config.mode;
  probe.d = config.d;
  Rng rng(config.seed);
  auto count = [&](Side counted, std::size_t k) {
    return config.mode == ProbeMode::Exact ? exact_traces(system, counted, k)
                                           : sampled_traces(system, counted, k, config.trials, rng);
  };
  for (std::size_t k : config.sizes) {
    if (primal) probe.primal.push_back({k, count(Side::Sets, k)});
    if (dual) probe.dual.push_back({k, count(Side::Elements, k)});
  }
  auto update = [&](const std::vector<ShatterSample>& samples) {
    for (const auto& s : samples) {
      if (s.k == 0) continue;
      const double scale = std::pow(static_cast<double>(s.k), config.d);
      probe.c_hat = std::max(probe.c_hat, static_cast<double>(s.traces) / scale);
    }
  };
  update(probe.primal);
  update(probe.dual);
  return probe;
}

}  // namespace welzl
