// welzl: generate set systems, compute and verify low-crossing orders, build
// neighborhood covers, and run benchmark suites.
//
// Exit codes: 0 success, 2 every trial returned false, 3 input error,
// 4 certification failure, 5 linearity cap exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "welzl/bench.hpp"
#include "welzl/cover.hpp"
#include "welzl/engine.hpp"
#include "welzl/generators.hpp"
#include "welzl/io.hpp"
#include "welzl/verifier.hpp"

namespace {

using namespace welzl;

enum ExitCode : int {
  kOk = 0,
  kFalse = 2,
  kInputError = 3,
  kCertificationFailed = 4,
  kCapExceeded = 5,
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

double parse_c(const std::string& text) {
  try {
    std::size_t used = 0;
    const double c = std::stod(text, &used);
    if (used != text.size() || !(c >= 1.0)) throw InputError("");
    return c;
  } catch (const std::exception&) {
    throw InputError("--c expects a number >= 1 or 'auto', got '" + text + "'");
  }
}

SetSystem load_input(const std::string& path, std::string* comment = nullptr) {
  try {
    return load_system(path, comment);
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Id> load_sequence(const SetSystem& system, const std::string& path) {
  std::vector<Id> sequence;
  try {
    sequence = load_order(path);
    (void)inverse_permutation(system.num_elements(), sequence);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return sequence;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 1;
  std::string output = "-";
  bool json = false;
};

int run_gen(const GenArgs& args) {
  GenSpec spec{args.family, args.params, args.seed};
  if (spec.family == "prefix" && !spec.params.empty() &&
      spec.params[0] > static_cast<std::int64_t>(kPrefixCliLimit)) {
    throw InputError("prefix systems have quadratic size; n is capped at " +
                     std::to_string(kPrefixCliLimit) + " (use grid or regular for scale)");
  }
  SetSystem system;
  try {
    system = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_file(args.output, args.json ? to_ssys_json(system) : to_ssys(system, describe(spec)));
  return kOk;
}

// --- order ------------------------------------------------------------------

struct OrderArgs {
  std::string input;
  std::string c = "auto";
  int d = 1;
  std::uint64_t seed = 1;
  int trials = 0;  // 0: 1 for fixed c, 3 per level for auto
  std::string output;
  std::string trace;
};

int run_order(const OrderArgs& args) {
  const SetSystem system = load_input(args.input);
  const std::string order_path = args.output.empty() ? args.input + ".order" : args.output;
  const std::string trace_path = args.trace.empty() ? args.input + ".trace.json" : args.trace;
  if (args.d < 1) throw InputError("--d must be >= 1");

  std::optional<Order> order;
  std::vector<RunTrace> traces;
  double c_used = 0;
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  if (args.c == "auto") {
    UnknownCOptions opts;
    opts.d = args.d;
    opts.trials_per_level = args.trials > 0 ? args.trials : 3;
    try {
      UnknownCResult r = with_unknown_c(system, args.seed, opts);
      order = std::move(r.order);
      traces = std::move(r.traces);
      c_used = r.c_used;
    } catch (const LinearityCapExceeded& e) {
      std::cerr << "welzl: " << e.what() << '\n';
      code = kCapExceeded;
    }
  } else {
    c_used = parse_c(args.c);
    BoostResult r = boosted(system, {c_used, args.d}, args.trials > 0 ? args.trials : 1, args.seed);
    order = std::move(r.order);
    traces = std::move(r.traces);
    if (!order) code = kFalse;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_file(trace_path, traces_to_json(traces));
  std::size_t iterations = 0;
  for (const auto& t : traces) iterations = std::max(iterations, t.iterations.size());
  std::cout << "runs=" << traces.size() << " iterations=" << iterations
            << " iteration_cap=" << iteration_cap(system.num_elements())
            << " seconds=" << format_number(seconds) << '\n';
  if (!order) {
    std::cout << "outcome=false\n";
    return code;
  }
  std::ostringstream text;
  write_order(text, order->sequence());
  write_file(order_path, text.str());
  std::cout << "outcome=order c_used=" << format_number(c_used) << " d=" << args.d
            << " order=" << order_path << " trace=" << trace_path << '\n';
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string order;
  double c = 1;
  int d = 1;
  std::string report;
};

int run_verify(const VerifyArgs& args) {
  const SetSystem system = load_input(args.input);
  const std::vector<Id> sequence = load_sequence(system, args.order);
  if (!(args.c >= 1.0) || args.d < 1) throw InputError("need --c >= 1 and --d >= 1");
  const CrossingReport report = certify(system, sequence, {args.c, args.d});
  if (!args.report.empty()) {
    std::ostringstream text;
    write_report(text, report);
    write_file(args.report, text.str());
  }
  std::cout << report_summary(report) << '\n';
  return report.pass ? kOk : kCertificationFailed;
}

// --- cover ------------------------------------------------------------------

struct CoverArgs {
  std::string input;
  std::string order;
  double c = 1;
  std::string output;
};

int run_cover(const CoverArgs& args) {
  const SetSystem graph = load_input(args.input);
  if (!is_neighborhood_system(graph)) {
    throw InputError(args.input + ": not a graph neighborhood system");
  }
  const std::vector<Id> sequence = load_sequence(graph, args.order);
  const Cover cover = build_cover(graph, sequence);
  const CoverAudit audit =
      audit_cover(graph, cover, cover_overlap_target(args.c, graph.num_elements()));
  std::ostringstream text;
  write_cover(text, cover);
  write_file(args.output.empty() ? args.order + ".cover" : args.output, text.str());
  std::cout << "clusters=" << cover.clusters.size() << ' ' << audit_summary(audit) << '\n';
  return audit.coverage && audit.diameter_ok() ? kOk : kCertificationFailed;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string out;
  bool quiet = false;
};

int run_bench(const BenchArgs& args) {
  std::ifstream in(args.suite);
  if (!in) throw InputError("cannot open " + args.suite);
  std::ostringstream text;
  text << in.rdbuf();
  BenchSuite suite;
  try {
    suite = parse_suite(text.str());
  } catch (const FormatError& e) {
    throw InputError(args.suite + ": " + e.what());
  }
  const BenchReport report = run_suite(suite, args.quiet ? nullptr : &std::cerr);
  const std::string prefix = args.out.empty() ? args.suite + ".report" : args.out;
  write_file(prefix + ".tsv", report_tsv(report));
  write_file(prefix + ".json", report_json(report));
  std::cout << report_text(report) << "wrote " << prefix << ".tsv and " << prefix << ".json\n";
  return kOk;
}

// --- probe ------------------------------------------------------------------

struct ProbeArgs {
  std::string input;
  bool exact = false;
  std::vector<std::size_t> sizes{1, 2, 4, 8, 16};
  std::size_t trials = 64;
  std::uint64_t seed = 1;
  int d = 1;
};

int run_probe(const ProbeArgs& args) {
  const SetSystem system = load_input(args.input);
  ProbeConfig config;
  config.mode = args.exact ? ProbeMode::Exact : ProbeMode::Sampled;
  config.sizes = args.sizes;
  config.trials = args.trials;
  config.seed = args.seed;
  config.d = args.d;
  ShatterProbe probe;
  try {
    probe = shatter_probe(system, config);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  for (const auto& s : probe.primal) std::cout << "primal k=" << s.k << " traces=" << s.traces << '\n';
  for (const auto& s : probe.dual) std::cout << "dual k=" << s.k << " traces=" << s.traces << '\n';
  std::cout << "c_hat=" << format_number(probe.c_hat) << " d=" << probe.d
            << (args.exact ? " (exact)" : " (sampled lower bound)") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-crossing orders for set systems"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance (prefix n | grid r c | "
                                            "regular n deg | halfplane points sets)");
  gen_cmd->add_option("family", gen.family, "Instance family")->required();
  gen_cmd->add_option("params", gen.params, "Family parameters")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output path ('-' for stdout)");
  gen_cmd->add_flag("--json", gen.json, "Emit the JSON form instead of ssys text");

  OrderArgs order;
  auto* order_cmd = app.add_subcommand("order", "Compute a low-crossing order");
  order_cmd->add_option("input", order.input, "ssys file")->required();
  order_cmd->add_option("--c", order.c, "Linearity constant, or 'auto'");
  order_cmd->add_option("--d", order.d, "Shatter exponent (d >= 2 selects the polynomial engine)");
  order_cmd->add_option("--seed", order.seed, "RNG seed");
  order_cmd->add_option("--trials", order.trials, "Boosted trials (per level with --c auto)");
  order_cmd->add_option("-o,--output", order.output, "Order file (default <input>.order)");
  order_cmd->add_option("--trace", order.trace, "Trace file (default <input>.trace.json)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify an order's crossing number");
  verify_cmd->add_option("input", verify.input, "ssys file")->required();
  verify_cmd->add_option("order", verify.order, "Order file")->required();
  verify_cmd->add_option("--c", verify.c, "Linearity constant")->required();
  verify_cmd->add_option("--d", verify.d, "Shatter exponent");
  verify_cmd->add_option("--report", verify.report, "Write the per-set report here");

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Build and audit a neighborhood cover");
  cover_cmd->add_option("input", cover.input, "Graph neighborhood system (ssys)")->required();
  cover_cmd->add_option("order", cover.order, "Order file")->required();
  cover_cmd->add_option("--c", cover.c, "Linearity constant for the overlap target")->required();
  cover_cmd->add_option("-o,--output", cover.output, "Cover file (default <order>.cover)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("suite", bench.suite, "Suite JSON file")->required();
  bench_cmd->add_option("--out", bench.out, "Report path prefix (default <suite>.report)");
  bench_cmd->add_flag("--quiet", bench.quiet, "No per-row progress");

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "Estimate shatter-function constants");
  probe_cmd->add_option("input", probe.input, "ssys file")->required();
  probe_cmd->add_flag("--exact", probe.exact, "Enumerate all subsets (<= 20 ids per side)");
  probe_cmd->add_option("--k", probe.sizes, "Subset sizes")->delimiter(',');
  probe_cmd->add_option("--trials", probe.trials, "Samples per size (sampled mode)");
  probe_cmd->add_option("--seed", probe.seed, "RNG seed");
  probe_cmd->add_option("--d", probe.d, "Exponent of the fitted bound c*k^d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*order_cmd) return run_order(order);
    if (*verify_cmd) return run_verify(verify);
    if (*cover_cmd) return run_cover(cover);
    if (*bench_cmd) return run_bench(bench);
    if (*probe_cmd) return run_probe(probe);
  } catch (const InputError& e) {
    std::cerr << "welzl: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "welzl: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
