#include "welzl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "welzl/sampling.hpp"

namespace welzl {

SetSystem gen_prefix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gen_prefix: n must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  edges.reserve(n * (n + 1) / 2);
  for (std::size_t t = 0; t <= n; ++t) {
    for (std::size_t e = 0; e < t; ++e) {
      edges.emplace_back(static_cast<std::int64_t>(t), static_cast<std::int64_t>(e));
    }
  }
  return SetSystem::build(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n + 1), edges);
}

SetSystem gen_grid(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("gen_grid: rows and cols must be >= 2");
  const auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<std::int64_t>(r * cols + c);
  };
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  edges.reserve(4 * rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (r > 0) edges.emplace_back(id(r, c), id(r - 1, c));
      if (c > 0) edges.emplace_back(id(r, c), id(r, c - 1));
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  const auto n = static_cast<std::int64_t>(rows * cols);
  return SetSystem::build(n, n, edges);
}

SetSystem gen_bounded_degree(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree < 3 || degree >= n || (n * degree) % 2 != 0) {
    throw std::invalid_argument("gen_bounded_degree: need degree >= 3, degree < n, n*degree even");
  }
  constexpr int kMaxAttempts = 1000;
  Rng rng(seed);
  std::vector<Id> stubs(n * degree);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Id>(i / degree);
  std::vector<std::vector<Id>> adjacency(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    for (auto& row : adjacency) row.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Id u = stubs[i];
      const Id v = stubs[i + 1];
      if (u == v || std::find(adjacency[u].begin(), adjacency[u].end(), v) != adjacency[u].end()) {
        simple = false;
        break;
      }
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    }
    if (simple) return SetSystem::from_members(n, adjacency);
  }
  throw std::runtime_error("gen_bounded_degree: no simple graph after retries");
}

bool Halfplane::contains(const Point2& p) const {
  return std::cos(angle) * p.x + std::sin(angle) * p.y <= offset;
}

HalfplaneInstance sample_halfplanes(std::size_t n_points, std::size_t n_sets,
                                    std::uint64_t seed) {
  if (n_points < 1 || n_sets < 1) {
    throw std::invalid_argument("gen_halfplane: need at least one point and one set");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  HalfplaneInstance inst;
  inst.points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    inst.points.push_back({x, y});
  }
  inst.ranges.reserve(n_sets);
  for (std::size_t j = 0; j < n_sets; ++j) {
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const double cx = std::cos(angle);
    const double cy = std::sin(angle);
    // Projection of the unit square onto the normal spans [lo, hi].
    const double lo = std::min(0.0, cx) + std::min(0.0, cy);
    const double hi = std::max(0.0, cx) + std::max(0.0, cy);
    inst.ranges.push_back({angle, lo + (hi - lo) * unit(rng)});
  }
  return inst;
}

SetSystem halfplane_system(const HalfplaneInstance& instance) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t j = 0; j < instance.ranges.size(); ++j) {
    for (std::size_t i = 0; i < instance.points.size(); ++i) {
      if (instance.ranges[j].contains(instance.points[i])) {
        edges.emplace_back(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i));
      }
    }
  }
  return SetSystem::build(static_cast<std::int64_t>(instance.points.size()),
                          static_cast<std::int64_t>(instance.ranges.size()), edges);
}

SetSystem gen_halfplane(std::size_t n_points, std::size_t n_sets, std::uint64_t seed) {
  return halfplane_system(sample_halfplanes(n_points, n_sets, seed));
}

TwinExpansion expand_twins(const SetSystem& system, std::size_t factor, std::uint64_t seed) {
  if (factor < 1) throw std::invalid_argument("add_twins: factor must be >= 1");
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> copies(1, factor);
  TwinExpansion out;
  std::vector<std::size_t> first(system.num_elements() + 1, 0);
  for (Id e = 0; e < system.num_elements(); ++e) {
    const std::size_t k = factor == 1 ? 1 : copies(rng);
    first[e + 1] = first[e] + k;
    for (std::size_t i = 0; i < k; ++i) out.origin.push_back(e);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (Id set = 0; set < system.num_sets(); ++set) {
    for (Id e : system.members(set)) {
      for (std::size_t v = first[e]; v < first[e + 1]; ++v) {
        edges.emplace_back(set, static_cast<std::int64_t>(v));
      }
    }
  }
  out.system = SetSystem::build(static_cast<std::int64_t>(first.back()),
                                static_cast<std::int64_t>(system.num_sets()), edges);
  return out;
}

SetSystem add_twins(const SetSystem& system, std::size_t factor, std::uint64_t seed) {
  return expand_twins(system, factor, seed).system;
}

namespace {

std::size_t param(const GenSpec& spec, std::size_t i) {
  if (i >= spec.params.size() || spec.params[i] < 0) {
    throw std::invalid_argument("gen " + spec.family + ": missing or negative parameter " +
                                std::to_string(i + 1));
  }
  return static_cast<std::size_t>(spec.params[i]);
}

void expect_arity(const GenSpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw std::invalid_argument("gen " + spec.family + ": expected " + std::to_string(arity) +
                                " parameters");
  }
}

}  // namespace

SetSystem generate(const GenSpec& spec) {
  if (spec.family == "prefix") {
    expect_arity(spec, 1);
    return gen_prefix(param(spec, 0));
  }
  if (spec.family == "grid") {
    expect_arity(spec, 2);
    return gen_grid(param(spec, 0), param(spec, 1));
  }
  if (spec.family == "regular") {
    expect_arity(spec, 2);
    return gen_bounded_degree(param(spec, 0), param(spec, 1), spec.seed);
  }
  if (spec.family == "halfplane") {
    expect_arity(spec, 2);
    return gen_halfplane(param(spec, 0), param(spec, 1), spec.seed);
  }
  throw std::invalid_argument("unknown family '" + spec.family +
                              "' (expected prefix, grid, regular or halfplane)");
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << "gen " << spec.family;
  for (auto p : spec.params) out << ' ' << p;
  out << " seed=" << spec.seed;
  return out.str();
}

}  // namespace welzl
