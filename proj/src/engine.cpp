#include "welzl/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "welzl/partition.hpp"
#include "welzl/sampling.hpp"

namespace welzl {
namespace {

double log2_of(std::size_t n) { return n <= 1 ? 0.0 : std::log2(static_cast<double>(n)); }

std::size_t clamp_sample(std::size_t s, std::size_t current_size) {
  return std::clamp<std::size_t>(s, std::min<std::size_t>(1, current_size), current_size);
}

void check_c(double c) {
  if (!(c >= 1.0)) throw std::invalid_argument("linearity constant c must be >= 1");
}

}  // namespace

std::size_t snapped_ceil(double x) {
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9) x = nearest;
  return static_cast<std::size_t>(std::ceil(x));
}

Thresholds linear_thresholds(double c, std::size_t ground_size, std::size_t current_size) {
  const double c2 = c * c;
  const double lg = log2_of(ground_size);
  Thresholds t;
  t.loop_guard = 12.0 * c2 * lg;
  t.sample_size = clamp_sample(
      static_cast<std::size_t>(std::ceil(static_cast<double>(current_size) / (2.0 * c2))),
      current_size);
  t.near_twin_limit = 6.0 * c2 * lg;
  t.crossing_bound = 12.0 * c2 * lg * lg;
  return t;
}

Thresholds poly_thresholds(double c, int d, std::size_t ground_size, std::size_t current_size) {
  const double dd = static_cast<double>(d) * d;
  const double lg = log2_of(ground_size);
  const double scale = 4.0 * std::pow(c, d + 1);
  Thresholds t;
  t.loop_guard = scale * std::pow(2.0 * dd, dd) * lg;
  std::size_t sample = 1;
  if (current_size > 0) {
    const double q = static_cast<double>(current_size) / scale;
    sample = snapped_ceil(std::exp(std::log(q) / dd));
  }
  t.sample_size = clamp_sample(sample, current_size);
  t.near_twin_limit =
      12.0 * c * d * std::pow(static_cast<double>(ground_size), 1.0 - 1.0 / dd) * lg;
  t.crossing_bound = t.loop_guard + 2.0 * t.near_twin_limit * lg;
  return t;
}

double crossing_bound(const LinearityParams& params, std::size_t ground_size) {
  return params.d <= 1 ? linear_thresholds(params.c, ground_size, 0).crossing_bound
                       : poly_thresholds(params.c, params.d, ground_size, 0).crossing_bound;
}

Schedule linear_schedule(double c, std::size_t ground_size) {
  Schedule s;
  s.params = {c, 1};
  s.ground_size = ground_size;
  s.thresholds = [c, ground_size](std::size_t current) {
    return linear_thresholds(c, ground_size, current);
  };
  s.shrink_limit = [c](std::size_t current) { return 0.5 * static_cast<double>(current) + c * c; };
  return s;
}

Schedule poly_schedule(double c, int d, std::size_t ground_size) {
  Schedule s;
  s.params = {c, d};
  s.ground_size = ground_size;
  s.thresholds = [c, d, ground_size](std::size_t current) {
    return poly_thresholds(c, d, ground_size, current);
  };
  s.shrink_limit = [](std::size_t current) { return 0.5 * static_cast<double>(current); };
  return s;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Success: return "order";
    case Outcome::NearTwinCheckFailed: return "false:near-twin-check";
    case Outcome::ProgressCheckFailed: return "false:progress-check";
    case Outcome::IterationCapReached: return "false:iteration-cap";
  }
  return "unknown";
}

std::size_t iteration_cap(std::size_t ground_size) {
  const double cap = log2_of(ground_size) - 1.0;
  return cap <= 0 ? 0 : static_cast<std::size_t>(std::floor(cap));
}

Order reconstruct(Order base, std::span<const TwinLink> stack) {
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    base.insert_after(it->representative, it->element);
  }
  return base;
}

RunResult run_engine(const SetSystem& system, const Schedule& schedule, std::uint64_t seed,
                     const EngineOptions& options) {
  const std::size_t n = system.num_elements();
  RunResult result;
  RunTrace& trace = result.trace;
  trace.seed = seed;
  trace.params = schedule.params;
  trace.ground_size = n;
  const Thresholds initial = schedule.thresholds(n);
  trace.loop_guard = initial.loop_guard;
  trace.crossing_bound = initial.crossing_bound;
  trace.iteration_cap = iteration_cap(n);

  Rng rng(seed);
  Restriction owned;
  const SetSystem* current = &system;
  std::vector<Id> element_ids(n);
  std::iota(element_ids.begin(), element_ids.end(), Id{0});
  std::vector<Id> set_ids(system.num_sets());
  std::iota(set_ids.begin(), set_ids.end(), Id{0});
  std::vector<TwinLink> stack;

  auto fail = [&](Outcome why) {
    trace.outcome = why;
    return std::move(result);
  };

  while (n > 1 && static_cast<double>(current->num_elements()) > trace.loop_guard) {
    if (trace.iterations.size() >= trace.iteration_cap) return fail(Outcome::IterationCapReached);
    const std::size_t a_cur = current->num_elements();
    IterationRecord rec;
    rec.current_elements = a_cur;
    rec.current_sets = current->num_sets();
    rec.thresholds = schedule.thresholds(a_cur);
    rec.shrink_limit = schedule.shrink_limit(a_cur);
    rec.sample_size = rec.thresholds.sample_size;

    const std::vector<Id> sample = uniform_sample(a_cur, rec.sample_size, rng);
    const Partition set_classes = twin_partition(*current, Side::Sets, sample);
    const std::vector<Id>& kept_sets = set_classes.representative;
    const Partition element_classes = twin_partition(*current, Side::Elements, kept_sets);
    const std::vector<Id>& kept_elements = element_classes.representative;

    rec.observed_diff = near_twin_max_diff(*current, set_classes);
    rec.next_elements = kept_elements.size();
    rec.next_sets = kept_sets.size();
    rec.pushed = a_cur - kept_elements.size();
    trace.iterations.push_back(rec);

    if (options.check_near_twin &&
        static_cast<double>(rec.observed_diff) > rec.thresholds.near_twin_limit) {
      return fail(Outcome::NearTwinCheckFailed);
    }
    if (options.check_progress && static_cast<double>(rec.next_elements) > rec.shrink_limit) {
      return fail(Outcome::ProgressCheckFailed);
    }

    for (Id v = 0; v < a_cur; ++v) {
      const Id rep = element_classes.representative[element_classes.class_of[v]];
      if (rep != v) stack.push_back({element_ids[v], element_ids[rep]});
    }

    Restriction next = restrict(*current, kept_elements, kept_sets);
    for (Id& id : next.element_ids) id = element_ids[id];
    for (Id& id : next.set_ids) id = set_ids[id];
    element_ids = std::move(next.element_ids);
    set_ids = std::move(next.set_ids);
    owned.system = std::move(next.system);
    current = &owned.system;
  }

  // Representatives are kept in increasing local order, so element_ids is
  // ascending in original ids here.
  Order base(n);
  for (Id v : element_ids) base.push_back(v);
  result.order = reconstruct(std::move(base), stack);
  trace.outcome = Outcome::Success;
  return result;
}

RunResult compute_order_linear(const SetSystem& system, double c, std::uint64_t seed,
                               const EngineOptions& options) {
  check_c(c);
  return run_engine(system, linear_schedule(c, system.num_elements()), seed, options);
}

RunResult compute_order_poly(const SetSystem& system, double c, int d, std::uint64_t seed,
                             const EngineOptions& options) {
  check_c(c);
  if (d < 2) return compute_order_linear(system, c, seed, options);
  return run_engine(system, poly_schedule(c, d, system.num_elements()), seed, options);
}

RunResult compute_order(const SetSystem& system, const LinearityParams& params,
                        std::uint64_t seed, const EngineOptions& options) {
  params.validate();
  return compute_order_poly(system, params.c, params.d, seed, options);
}

EngineFn default_engine() {
  return [](const SetSystem& system, const LinearityParams& params, std::uint64_t seed) {
    return compute_order(system, params, seed);
  };
}

BoostResult boosted(const SetSystem& system, const LinearityParams& params, int trials,
                    std::uint64_t seed, const EngineFn& engine) {
  if (trials < 1) throw std::invalid_argument("boosted: trials must be >= 1");
  BoostResult out;
  for (int i = 0; i < trials; ++i) {
    RunResult run = engine(system, params, derive_seed(seed, static_cast<std::uint64_t>(i)));
    out.traces.push_back(std::move(run.trace));
    if (run.order) {
      out.order = std::move(run.order);
      break;
    }
  }
  return out;
}

LinearityCapExceeded::LinearityCapExceeded(double cap)
    : std::runtime_error("linearity cap exceeded (c > " + std::to_string(cap) + ")") {}

UnknownCResult with_unknown_c(const SetSystem& system, std::uint64_t seed,
                              const UnknownCOptions& options, const EngineFn& engine) {
  check_c(options.c0);
  UnknownCResult out;
  double c = options.c0;
  for (std::uint64_t level = 0; c <= options.c_cap; ++level, c *= 2.0) {
    BoostResult level_result =
        boosted(system, {c, options.d}, options.trials_per_level, derive_seed(seed, level), engine);
    for (auto& t : level_result.traces) out.traces.push_back(std::move(t));
    if (level_result.order) {
      out.order = std::move(*level_result.order);
      out.c_used = c;
      return out;
    }
  }
  throw LinearityCapExceeded(options.c_cap);
}

}  // namespace welzl
