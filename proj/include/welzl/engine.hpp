#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "welzl/order.hpp"
#include "welzl/setsystem.hpp"

namespace welzl {

// Parameter values of one main-loop iteration. All logarithms are base 2 and
// are taken of the ORIGINAL ground-set size.
struct Thresholds {
  double loop_guard = 0;       // loop runs while |A_cur| > loop_guard
  std::size_t sample_size = 0; // |W|, clamped to [1, |A_cur|]
  double near_twin_limit = 0;  // guarantee check: max symmetric difference <= limit
  double crossing_bound = 0;   // crossing number certified on success

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// Linear case: guard 12c^2 log|A|, sample ceil(|A_cur| / 2c^2),
// limit 6c^2 log|A|, bound 12c^2 log^2|A|.
Thresholds linear_thresholds(double c, std::size_t ground_size, std::size_t current_size);

// Polynomial case (d >= 2): guard 4c^(d+1) (2d^2)^(d^2) log|A|,
// sample ceil((|A_cur| / 4c^(d+1))^(1/d^2)), limit 12cd |A|^(1-1/d^2) log|A|,
// bound guard + 24cd |A|^(1-1/d^2) log^2|A|.
Thresholds poly_thresholds(double c, int d, std::size_t ground_size, std::size_t current_size);

// The crossing-number bound a successful run certifies for (c, d, |A|).
double crossing_bound(const LinearityParams& params, std::size_t ground_size);

// ceil(x) after snapping x to the nearest integer when within 1e-9 of it.
std::size_t snapped_ceil(double x);

// Everything that distinguishes one engine variant from another.
struct Schedule {
  LinearityParams params;
  std::size_t ground_size = 0;
  std::function<Thresholds(std::size_t current_size)> thresholds;
  // Largest |A_next| consistent with the declared shatter bound.
  std::function<double(std::size_t current_size)> shrink_limit;
};

Schedule linear_schedule(double c, std::size_t ground_size);
Schedule poly_schedule(double c, int d, std::size_t ground_size);

struct EngineOptions {
  // Near-twin guarantee check of the main loop.
  bool check_near_twin = true;
  // Reject runs whose per-iteration shrinkage contradicts the declared c
  // (|A_next| above the schedule's shrink limit).
  bool check_progress = true;
};

enum class Outcome : std::uint8_t {
  Success,
  NearTwinCheckFailed,
  ProgressCheckFailed,
  IterationCapReached,
};

const char* to_string(Outcome outcome);

struct IterationRecord {
  std::size_t current_elements = 0;
  std::size_t current_sets = 0;
  std::size_t sample_size = 0;
  std::size_t observed_diff = 0;
  std::size_t next_elements = 0;
  std::size_t next_sets = 0;
  std::size_t pushed = 0;
  Thresholds thresholds;
  double shrink_limit = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct RunTrace {
  std::uint64_t seed = 0;
  LinearityParams params;
  std::size_t ground_size = 0;
  double loop_guard = 0;
  double crossing_bound = 0;
  std::size_t iteration_cap = 0;
  std::vector<IterationRecord> iterations;
  Outcome outcome = Outcome::Success;

  bool succeeded() const { return outcome == Outcome::Success; }
};

struct RunResult {
  std::optional<Order> order;  // empty means the run returned false
  RunTrace trace;
};

// Removed element and the representative it is reinserted after.
struct TwinLink {
  Id element;
  Id representative;
};

// Pops `stack` from the back and inserts each element right after its
// representative. Throws std::logic_error if a representative is missing.
Order reconstruct(Order base, std::span<const TwinLink> stack);

// Largest iteration count a run may reach: floor(log2|A| - 1), 0 for |A| < 4.
std::size_t iteration_cap(std::size_t ground_size);

// Shared main loop: sample, partition, check, contract, then rebuild.
RunResult run_engine(const SetSystem& system, const Schedule& schedule, std::uint64_t seed,
                     const EngineOptions& options = {});

// Throws std::invalid_argument if c < 1.
RunResult compute_order_linear(const SetSystem& system, double c, std::uint64_t seed,
                               const EngineOptions& options = {});

// d < 2 falls through to the linear engine. Throws std::invalid_argument if c < 1.
RunResult compute_order_poly(const SetSystem& system, double c, int d, std::uint64_t seed,
                             const EngineOptions& options = {});

RunResult compute_order(const SetSystem& system, const LinearityParams& params,
                        std::uint64_t seed, const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Repetition wrappers.

using EngineFn =
    std::function<RunResult(const SetSystem&, const LinearityParams&, std::uint64_t seed)>;

// compute_order with default options.
EngineFn default_engine();

struct BoostResult {
  std::optional<Order> order;
  std::vector<RunTrace> traces;  // one per executed trial
};

// Trial i (0-based) runs with derive_seed(seed, i); stops at the first success.
BoostResult boosted(const SetSystem& system, const LinearityParams& params, int trials,
                    std::uint64_t seed, const EngineFn& engine = default_engine());

class LinearityCapExceeded : public std::runtime_error {
 public:
  explicit LinearityCapExceeded(double cap);
};

struct UnknownCOptions {
  double c0 = 1.0;
  int trials_per_level = 3;
  double c_cap = 1 << 20;
  int d = 1;
};

struct UnknownCResult {
  Order order;
  double c_used = 0;
  std::vector<RunTrace> traces;
};

// Doubles c from c0 until a boosted call succeeds. Level j uses the boosted
// seed derive_seed(seed, j). Throws LinearityCapExceeded once c > c_cap.
UnknownCResult with_unknown_c(const SetSystem& system, std::uint64_t seed,
                              const UnknownCOptions& options = {},
                              const EngineFn& engine = default_engine());

}  // namespace welzl
