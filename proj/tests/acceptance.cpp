// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "welzl/cover.hpp"
#include "welzl/engine.hpp"
#include "welzl/generators.hpp"
#include "welzl/io.hpp"
#include "welzl/partition.hpp"
#include "welzl/sampling.hpp"
#include "welzl/verifier.hpp"

using namespace welzl;
using namespace welzl::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Every trace produced anywhere in the suite, checked by criterion 2.
std::vector<RunTrace> g_traces;

void keep(const RunTrace& t) { g_traces.push_back(t); }
void keep(const std::vector<RunTrace>& ts) { g_traces.insert(g_traces.end(), ts.begin(), ts.end()); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(4) << x;
  return out.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

struct GridCase {
  std::size_t rows, cols;
};

// Cover checks accumulated from the grid runs of criterion 1 and 3.
struct CoverTally {
  std::size_t runs = 0;
  std::size_t failures = 0;
  double worst_ratio = 0;
  std::size_t worst_overlap = 0;
};
CoverTally g_cover;

void audit_grid_cover(const SetSystem& g, const std::vector<Id>& seq, double c) {
  const Cover cover = build_cover(g, seq);
  const CoverAudit a = audit_cover(g, cover, cover_overlap_target(c, g.num_elements()));
  ++g_cover.runs;
  if (!a.coverage || !a.diameter_ok()) ++g_cover.failures;
  g_cover.worst_ratio = std::max(g_cover.worst_ratio, a.overlap_ratio());
  g_cover.worst_overlap = std::max(g_cover.worst_overlap, a.overlap);
}

Verdict crossing_bound_linear() {
  Verdict v;
  std::ostringstream detail;
  for (GridCase gc : {GridCase{64, 64}, GridCase{128, 128}, GridCase{256, 256}}) {
    const SetSystem g = gen_grid(gc.rows, gc.cols);
    const std::size_t n = g.num_elements();
    const double lg = std::log2(double(n));
    std::size_t worst = 0;
    double worst_bound = 0, slowest = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto start = Clock::now();
      const UnknownCResult r = with_unknown_c(g, seed);
      const double t = seconds_since(start);
      keep(r.traces);
      slowest = std::max(slowest, t);
      const std::vector<Id> seq = r.order.sequence();
      const std::size_t max = crossing_number(g, seq).max;
      const double bound = 12.0 * r.c_used * r.c_used * lg * lg;
      if (double(max) > bound || t >= 10.0) v.pass = false;
      if (max >= worst) {
        worst = max;
        worst_bound = bound;
      }
      audit_grid_cover(g, seq, r.c_used);
    }
    detail << "n=" << n << " max=" << worst << " bound=" << fmt(worst_bound)
           << " slowest=" << fmt(slowest) << "s; ";
  }
  v.detail = detail.str();
  return v;
}

Verdict failure_rate_linear() {
  const SetSystem g = gen_grid(64, 64);
  // Smallest power-of-two c at which some of ten probe runs succeeds.
  double c = 1;
  for (;; c *= 2) {
    bool any = false;
    for (std::uint64_t seed = 0; seed < 10 && !any; ++seed) {
      const RunResult r = compute_order_linear(g, c, derive_seed(999, seed));
      keep(r.trace);
      any = r.order.has_value();
    }
    if (any) break;
  }
  std::size_t failures = 0;
  const auto start = Clock::now();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const RunResult r = compute_order_linear(g, c, seed);
    keep(r.trace);
    if (!r.order) {
      ++failures;
      continue;
    }
    if (seed < 20) audit_grid_cover(g, r.order->sequence(), c);
  }
  const double t = seconds_since(start);
  const double rate = failures / 300.0;
  return {rate <= 1.0 / 3.0 && t < 120.0,
          "c=" + fmt(c) + " false-rate=" + std::to_string(failures) + "/300=" + fmt(rate) +
              " time=" + fmt(t) + "s"};
}

Verdict twin_properties() {
  std::mt19937_64 rng(404);
  std::size_t dup_bad = 0, near_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    const SetSystem s = random_system(rng, n, rng() % 24, 0.45);
    const std::vector<Id> seq = random_order(rng, n);
    const Id dup = static_cast<Id>(rng() % n);
    Members members = members_of(s);
    for (auto& row : members) {
      if (std::binary_search(row.begin(), row.end(), dup)) row.push_back(Id(n));
    }
    std::vector<Id> seq2;
    for (Id x : seq) {
      seq2.push_back(x);
      if (x == dup) seq2.push_back(Id(n));
    }
    const SetSystem bigger = SetSystem::from_members(n + 1, members);
    if (crossing_number(bigger, seq2).max != crossing_number(s, seq).max) ++dup_bad;
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 32;
    const SetSystem s = random_twinny_system(rng, n, 1 + rng() % 40, 1 + rng() % 5);
    Rng sampler(rng());
    const auto w = uniform_sample(n, rng() % (n + 1), sampler);
    const Partition p = twin_partition(s, Side::Sets, w);
    const std::size_t k = near_twin_max_diff(s, p);
    std::vector<Id> all(n);
    std::iota(all.begin(), all.end(), Id{0});
    const SetSystem reps = restrict(s, all, p.representative).system;
    const std::vector<Id> seq = random_order(rng, n);
    if (crossing_number(s, seq).max > crossing_number(reps, seq).max + 2 * k) ++near_bad;
  }
  return {dup_bad == 0 && near_bad == 0,
          "duplication violations " + std::to_string(dup_bad) +
              "/1000, near-twin violations " + std::to_string(near_bad) + "/1000"};
}

Verdict oracle_equivalence() {
  std::mt19937_64 rng(505);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const SetSystem s = random_system(rng, n, rng() % 65, std::uniform_real_distribution<>(0, 1)(rng));
    const auto seq = random_order(rng, n);
    if (crossing_number(s, seq).per_set != naive_crossings(members_of(s), n, seq)) ++mismatches;
  }
  const std::size_t c4 = min_crossing_exhaustive(gen_grid(2, 2)).value;
  std::vector<Id> natural(64);
  std::iota(natural.begin(), natural.end(), Id{0});
  const std::size_t prefix = crossing_number(gen_prefix(64), natural).max;
  return {mismatches == 0 && c4 == 1 && prefix == 1,
          "mismatches " + std::to_string(mismatches) + "/1000, C4 minimum " + std::to_string(c4) +
              ", prefix natural order " + std::to_string(prefix)};
}

Verdict twin_machinery() {
  std::mt19937_64 rng(606);
  std::size_t twin_bad = 0, diff_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const SetSystem s =
        random_twinny_system(rng, 1 + rng() % 40, 1 + rng() % 40, 1 + rng() % 6);
    for (Side side : {Side::Elements, Side::Sets}) {
      if (twin_partition(s, side).class_of != pairwise_twin_classes(neighborhoods(s, side))) {
        ++twin_bad;
      }
    }
    Rng sampler(rng());
    const auto w = uniform_sample(s.num_elements(), rng() % (s.num_elements() + 1), sampler);
    const Partition p = twin_partition(s, Side::Sets, w);
    const auto nb = neighborhoods(s, Side::Sets);
    std::size_t expected = 0;
    for (Id b = 0; b < s.num_sets(); ++b) {
      expected = std::max(expected, symmetric_difference(nb[b], nb[p.representative[p.class_of[b]]]));
    }
    if (near_twin_max_diff(s, p) != expected) ++diff_bad;
  }
  return {twin_bad == 0 && diff_bad == 0,
          "partition mismatches " + std::to_string(twin_bad) + "/2000, diff mismatches " +
              std::to_string(diff_bad) + "/1000"};
}

Verdict runtime_scaling() {
  constexpr double c = 2.0;
  const std::vector<GridCase> ladder{{64, 64},   {64, 128},  {128, 128},
                                     {128, 256}, {256, 256}, {256, 512}};
  double lo = INFINITY, hi = 0, last = 0;
  std::ostringstream detail;
  for (GridCase gc : ladder) {
    const SetSystem g = gen_grid(gc.rows, gc.cols);
    const double norm = double(g.size_norm());
    // Enough repeats that each measurement spans well over the clock's noise.
    const int repeats = std::max(9, int(std::ceil(2e6 / norm)));
    std::vector<double> times;
    for (int i = 0; i < repeats; ++i) {
      const auto start = Clock::now();
      const RunResult r = compute_order_linear(g, c, derive_seed(7, i));
      times.push_back(seconds_since(start));
      keep(r.trace);
    }
    const double med = median(times);
    const double ratio = med / (norm * std::log2(norm));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    last = med;
    detail << g.num_elements() << ":" << fmt(ratio * 1e9) << "ns, ";
  }
  const double spread = hi / lo;
  detail << "spread=" << fmt(spread) << " t(2^17)=" << fmt(last) << "s";
  return {spread <= 3.0 && last < 30.0, detail.str()};
}

Verdict poly_engine() {
  constexpr int d = 2;
  const SetSystem s = gen_halfplane(4096, 4096, 2024);
  ProbeConfig probe;
  probe.mode = ProbeMode::Sampled;
  probe.sizes = {2, 4, 8, 16};
  probe.trials = 32;
  probe.seed = 1;
  probe.d = d;
  const double c = shatter_probe(s, probe).c_hat;
  const double lg = std::log2(4096.0);
  const double bound = 4 * std::pow(c, d + 1) * std::pow(2.0 * d * d, d * d) * lg +
                       24 * c * d * std::pow(4096.0, 1.0 - 1.0 / (d * d)) * lg * lg;
  std::size_t failures = 0, violations = 0, worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RunResult r = compute_order_poly(s, c, d, seed);
    keep(r.trace);
    if (!r.order) {
      ++failures;
      continue;
    }
    const std::size_t max = crossing_number(s, *r.order).max;
    worst = std::max(worst, max);
    if (double(max) > bound) ++violations;
  }
  const double rate = failures / 100.0;
  return {violations == 0 && rate <= 1.0 / 3.0,
          "c_hat=" + fmt(c) + " max=" + std::to_string(worst) + " bound=" + fmt(bound) +
              " false-rate=" + fmt(rate)};
}

Verdict cover_application() {
  return {g_cover.runs > 0 && g_cover.failures == 0,
          std::to_string(g_cover.runs) + " grid covers, " + std::to_string(g_cover.failures) +
              " hard-check failures; max overlap " + std::to_string(g_cover.worst_overlap) +
              ", max overlap/target " + fmt(g_cover.worst_ratio) + " (recorded)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Verdict reproducibility() {
  const auto dir = std::filesystem::temp_directory_path() / "welzl_acceptance";
  std::filesystem::create_directories(dir);
  struct Case {
    SetSystem system;
    LinearityParams params;
    std::uint64_t seed;
  };
  const std::vector<Case> cases{{gen_grid(128, 128), {2.0, 1}, 7},
                                {gen_halfplane(1000, 500, 3), {2.0, 2}, 7},
                                {add_twins(gen_bounded_degree(2000, 3, 1), 3, 2), {2.0, 1}, 11}};
  std::size_t differing = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string files[2][2];
    for (int run = 0; run < 2; ++run) {
      const RunResult r = compute_order(cases[i].system, cases[i].params, cases[i].seed);
      keep(r.trace);
      const auto order_path = dir / ("case" + std::to_string(i) + "_" + std::to_string(run) + ".order");
      const auto trace_path = dir / ("case" + std::to_string(i) + "_" + std::to_string(run) + ".json");
      {
        std::ofstream o(order_path, std::ios::binary);
        if (r.order) write_order(o, r.order->sequence());
        std::ofstream t(trace_path, std::ios::binary);
        t << trace_to_json(r.trace);
      }
      files[run][0] = slurp(order_path);
      files[run][1] = slurp(trace_path);
    }
    if (files[0][0] != files[1][0] || files[0][1] != files[1][1] || files[0][1].empty()) ++differing;
  }
  std::filesystem::remove_all(dir);
  return {differing == 0, std::to_string(differing) + "/" + std::to_string(cases.size()) +
                              " cases differ between consecutive runs"};
}

Verdict iteration_bound() {
  std::size_t bad = 0;
  for (const auto& t : g_traces) {
    const double limit = t.ground_size <= 1 ? 0.0 : std::log2(double(t.ground_size)) - 1.0;
    if (double(t.iterations.size()) > std::max(0.0, limit)) ++bad;
  }
  return {bad == 0 && !g_traces.empty(),
          std::to_string(g_traces.size()) + " traces, " + std::to_string(bad) + " over the bound"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Verdict verdict;
  };
  std::vector<Entry> results;
  auto run = [&](int id, const char* name, Verdict (*fn)()) {
    const auto start = Clock::now();
    Verdict v = fn();
    v.detail += " [" + fmt(seconds_since(start)) + "s]";
    results.push_back({id, name, std::move(v)});
    std::cerr << "criterion " << id << " done\n";
  };
  run(1, "crossing bound, linear engine", crossing_bound_linear);
  run(3, "failure probability, linear engine", failure_rate_linear);
  run(4, "duplication and near-twin properties", twin_properties);
  run(5, "oracle equivalence", oracle_equivalence);
  run(6, "twin machinery", twin_machinery);
  run(7, "runtime scaling", runtime_scaling);
  run(8, "poly engine d=2", poly_engine);
  run(9, "cover application", cover_application);
  run(10, "reproducibility", reproducibility);
  run(2, "iteration bound", iteration_bound);

  std::sort(results.begin(), results.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  bool all = true;
  for (const auto& e : results) {
    all = all && e.verdict.pass;
    std::cout << (e.verdict.pass ? "[PASS] " : "[FAIL] ") << e.id << ". " << e.name << ": "
              << e.verdict.detail << '\n';
  }
  return all ? 0 : 1;
}
