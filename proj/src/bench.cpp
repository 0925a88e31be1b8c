#include "welzl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "welzl/cover.hpp"
#include "welzl/engine.hpp"
#include "welzl/io.hpp"
#include "welzl/verifier.hpp"

namespace welzl {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(values[i]);
  }
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

BenchEntry parse_entry(const json& doc) {
  BenchEntry e;
  e.family = doc.at("family").get<std::string>();
  for (const auto& p : doc.at("params")) e.params.push_back(p.get<std::vector<std::int64_t>>());
  if (e.params.empty()) throw FormatError("entry '" + e.family + "' has no params");
  const auto& c = doc.value("c", json("auto"));
  if (c.is_string()) {
    if (c.get<std::string>() != "auto") throw FormatError("c must be a number or \"auto\"");
  } else {
    e.c = c.get<double>();
    if (!(*e.c >= 1.0)) throw FormatError("c must be >= 1");
  }
  e.d = doc.value("d", 1);
  if (e.d < 1) throw FormatError("d must be >= 1");
  const auto& seeds = doc.at("seeds");
  if (seeds.is_array()) {
    e.seeds = seeds.get<std::vector<std::uint64_t>>();
  } else {
    const auto first = seeds.at("first").get<std::uint64_t>();
    const auto count = seeds.at("count").get<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i) e.seeds.push_back(first + i);
  }
  if (e.seeds.empty()) throw FormatError("entry '" + e.family + "' has no seeds");
  e.trials = doc.value("trials", e.c ? 1 : 3);
  if (e.trials < 1) throw FormatError("trials must be >= 1");
  e.instance_seed = doc.value("instance_seed", std::uint64_t{1});
  e.cover = doc.value("cover", false);
  return e;
}

void run_row(const SetSystem& system, const BenchEntry& entry, BenchRow& row) {
  std::optional<Order> order;
  std::vector<RunTrace> traces;
  const auto start = Clock::now();
  try {
    if (entry.c) {
      BoostResult r = boosted(system, {*entry.c, entry.d}, entry.trials, row.seed);
      row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      order = std::move(r.order);
      traces = std::move(r.traces);
      row.c = *entry.c;
      row.outcome = order ? "order" : "false";
    } else {
      UnknownCOptions opts;
      opts.trials_per_level = entry.trials;
      opts.d = entry.d;
      UnknownCResult r = with_unknown_c(system, row.seed, opts);
      row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      order = std::move(r.order);
      traces = std::move(r.traces);
      row.c = r.c_used;
      row.outcome = "order";
    }
  } catch (const LinearityCapExceeded&) {
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    row.outcome = "cap";
  } catch (const std::exception& e) {
    row.outcome = std::string("error: ") + e.what();
  }
  row.runs = traces.size();
  for (const auto& t : traces) row.iterations = std::max(row.iterations, t.iterations.size());
  if (!order) return;

  const std::vector<Id> sequence = order->sequence();
  const CrossingReport report = certify(system, sequence, {row.c, entry.d});
  row.crossing = report.max;
  row.bound = *report.bound;
  row.pass = report.pass;
  if (entry.cover && is_neighborhood_system(system)) {
    const Cover cover = build_cover(system, sequence);
    row.cover_target = cover_overlap_target(row.c, system.num_elements());
    const CoverAudit audit = audit_cover(system, cover, row.cover_target);
    row.cover_ok = audit.coverage && audit.diameter_ok();
    row.cover_overlap = audit.overlap;
  }
}

}  // namespace

BenchSuite parse_suite(std::string_view text) {
  try {
    const json doc = json::parse(text);
    BenchSuite suite;
    suite.name = doc.value("name", std::string("bench"));
    for (const auto& e : doc.at("entries")) suite.entries.push_back(parse_entry(e));
    return suite;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad suite file: ") + e.what());
  }
}

BenchReport run_suite(const BenchSuite& suite, std::ostream* log) {
  BenchReport report;
  report.name = suite.name;
  for (std::size_t ei = 0; ei < suite.entries.size(); ++ei) {
    const BenchEntry& entry = suite.entries[ei];
    BenchScaling scaling{ei, entry.family, std::numeric_limits<double>::infinity(), 0, 0};
    for (const auto& params : entry.params) {
      const std::string label = join(params);
      SetSystem system;
      std::string gen_error;
      try {
        system = generate({entry.family, params, entry.instance_seed});
      } catch (const std::exception& e) {
        gen_error = std::string("error: ") + e.what();
      }
      const double lg = system.size_norm() > 1 ? std::log2(double(system.size_norm())) : 1.0;
      std::vector<double> times;
      BenchAggregate agg{ei, entry.family, label, system.num_elements(), system.size_norm()};
      for (std::uint64_t seed : entry.seeds) {
        BenchRow row;
        row.entry = ei;
        row.family = entry.family;
        row.params = label;
        row.n = system.num_elements();
        row.norm = system.size_norm();
        row.d = entry.d;
        row.seed = seed;
        row.iteration_cap = iteration_cap(system.num_elements());
        if (gen_error.empty()) {
          run_row(system, entry, row);
        } else {
          row.outcome = gen_error;
        }
        ++agg.rows;
        if (row.outcome != "order") ++agg.failures;
        if (row.outcome.rfind("error", 0) != 0) times.push_back(row.seconds);
        if (log) {
          *log << entry.family << ' ' << label << " seed=" << seed << ' ' << row.outcome
               << " c=" << format_number(row.c) << " it=" << row.iterations
               << " t=" << format_number(row.seconds) << "s\n";
        }
        report.rows.push_back(std::move(row));
      }
      agg.failure_rate = agg.rows ? double(agg.failures) / double(agg.rows) : 0;
      agg.median_seconds = median(times);
      agg.time_ratio = agg.norm ? agg.median_seconds / (double(agg.norm) * lg) : 0;
      if (!times.empty() && agg.time_ratio > 0) {
        scaling.min_ratio = std::min(scaling.min_ratio, agg.time_ratio);
        scaling.max_ratio = std::max(scaling.max_ratio, agg.time_ratio);
      }
      report.aggregates.push_back(agg);
    }
    if (scaling.max_ratio > 0) {
      scaling.spread = scaling.max_ratio / scaling.min_ratio;
    } else {
      scaling.min_ratio = 0;
    }
    report.scaling.push_back(scaling);
  }
  return report;
}

std::string report_tsv(const BenchReport& report) {
  std::ostringstream out;
  out << "entry\tfamily\tparams\tn\tnorm\tc\td\tseed\titerations\titeration_cap\truns\tseconds"
         "\tcrossing\tbound\tpass\toutcome\tcover_ok\tcover_overlap\tcover_target\n";
  for (const auto& r : report.rows) {
    out << r.entry << '\t' << r.family << '\t' << r.params << '\t' << r.n << '\t' << r.norm
        << '\t' << format_number(r.c) << '\t' << r.d << '\t' << r.seed << '\t' << r.iterations
        << '\t' << r.iteration_cap << '\t' << r.runs << '\t' << format_number(r.seconds) << '\t'
        << (r.crossing ? std::to_string(*r.crossing) : "-") << '\t' << format_number(r.bound)
        << '\t' << (r.pass ? 1 : 0) << '\t' << r.outcome << '\t'
        << (r.cover_ok ? std::to_string(int(*r.cover_ok)) : "-") << '\t'
        << (r.cover_overlap ? std::to_string(*r.cover_overlap) : "-") << '\t'
        << format_number(r.cover_target) << '\n';
  }
  out << "\nentry\tfamily\tparams\tn\tnorm\trows\tfailures\tfailure_rate\tmedian_seconds"
         "\ttime_ratio\n";
  for (const auto& a : report.aggregates) {
    out << a.entry << '\t' << a.family << '\t' << a.params << '\t' << a.n << '\t' << a.norm
        << '\t' << a.rows << '\t' << a.failures << '\t' << format_number(a.failure_rate) << '\t'
        << format_number(a.median_seconds) << '\t' << format_number(a.time_ratio) << '\n';
  }
  return out.str();
}

std::string report_json(const BenchReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row = {{"entry", r.entry},   {"family", r.family},   {"params", r.params},
                {"n", r.n},           {"norm", r.norm},       {"c", r.c},
                {"d", r.d},           {"seed", r.seed},       {"iterations", r.iterations},
                {"iteration_cap", r.iteration_cap},           {"runs", r.runs},
                {"seconds", r.seconds},                       {"bound", r.bound},
                {"pass", r.pass},     {"outcome", r.outcome}};
    row["crossing"] = r.crossing ? json(*r.crossing) : json(nullptr);
    if (r.cover_ok) {
      row["cover_ok"] = *r.cover_ok;
      row["cover_overlap"] = *r.cover_overlap;
      row["cover_target"] = r.cover_target;
    }
    rows.push_back(std::move(row));
  }
  json aggregates = json::array();
  for (const auto& a : report.aggregates) {
    aggregates.push_back({{"entry", a.entry},
                          {"family", a.family},
                          {"params", a.params},
                          {"n", a.n},
                          {"norm", a.norm},
                          {"rows", a.rows},
                          {"failures", a.failures},
                          {"failure_rate", a.failure_rate},
                          {"median_seconds", a.median_seconds},
                          {"time_ratio", a.time_ratio}});
  }
  json scaling = json::array();
  for (const auto& s : report.scaling) {
    scaling.push_back({{"entry", s.entry},
                       {"family", s.family},
                       {"min_ratio", s.min_ratio},
                       {"max_ratio", s.max_ratio},
                       {"spread", s.spread}});
  }
  json doc = {{"name", report.name},
              {"rows", std::move(rows)},
              {"aggregates", std::move(aggregates)},
              {"scaling", std::move(scaling)}};
  return doc.dump(2) + "\n";
}

std::string report_text(const BenchReport& report) {
  std::ostringstream out;
  out << "suite " << report.name << ": " << report.rows.size() << " rows\n";
  for (const auto& a : report.aggregates) {
    out << "  [" << a.entry << "] " << a.family << ' ' << a.params << "  n=" << a.n
        << " ||S||=" << a.norm << "  failures " << a.failures << '/' << a.rows
        << "  median " << format_number(a.median_seconds) << "s  t/(||S|| log||S||)="
        << format_number(a.time_ratio) << '\n';
  }
  for (const auto& s : report.scaling) {
    out << "  [" << s.entry << "] " << s.family << " scaling spread "
        << format_number(s.spread) << '\n';
  }
  std::size_t violations = 0;
  for (const auto& r : report.rows) {
    if (r.outcome == "order" && !r.pass) ++violations;
  }
  out << "  bound violations: " << violations << '\n';
  return out.str();
}

}  // namespace welzl
