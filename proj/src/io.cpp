#include "welzl/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace welzl {
namespace {

using nlohmann::json;

// Tokenizes one line into non-negative integers.
std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw FormatError("line " + std::to_string(line_no) + ": expected non-negative integers");
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

Id as_id(std::uint64_t value, std::uint64_t limit, const char* what, std::size_t line_no) {
  if (value >= limit) {
    throw FormatError("line " + std::to_string(line_no) + ": " + what + " " +
                      std::to_string(value) + " out of range");
  }
  return static_cast<Id>(value);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

void write_ssys(std::ostream& out, const SetSystem& system, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "ssys " << system.num_elements() << ' ' << system.num_sets() << ' '
      << system.num_edges() << '\n';
  for (Id set = 0; set < system.num_sets(); ++set) {
    const auto row = system.members(set);
    out << set << ' ' << row.size();
    for (Id e : row) out << ' ' << e;
    out << '\n';
  }
}

std::string to_ssys(const SetSystem& system, std::string_view comment) {
  std::ostringstream out;
  write_ssys(out, system, comment);
  return out.str();
}

SetSystem read_ssys(std::istream& in, std::string* comment) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t num_elements = 0, num_sets = 0, num_edges = 0;
  std::vector<bool> seen;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::size_t sets_read = 0;
  bool comment_taken = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (comment && !comment_taken) {
        std::string text = line.substr(first + 1);
        if (!text.empty() && text.front() == ' ') text.erase(0, 1);
        if (!text.empty() && text.back() == '\r') text.pop_back();
        *comment = text;
        comment_taken = true;
      }
      continue;
    }
    if (!have_header) {
      std::istringstream header(line);
      std::string magic;
      if (!(header >> magic) || magic != "ssys") {
        throw FormatError("line " + std::to_string(line_no) + ": missing 'ssys' header");
      }
      std::string rest;
      std::getline(header, rest);
      const auto sizes = parse_numbers(rest, line_no);
      if (sizes.size() != 3) {
        throw FormatError("line " + std::to_string(line_no) + ": header needs |A| |B| |E|");
      }
      num_elements = sizes[0];
      num_sets = sizes[1];
      num_edges = sizes[2];
      if (num_elements >= std::numeric_limits<Id>::max() ||
          num_sets >= std::numeric_limits<Id>::max()) {
        throw FormatError("header sizes too large");
      }
      seen.assign(num_sets, false);
      have_header = true;
      continue;
    }
    const auto values = parse_numbers(line, line_no);
    if (values.size() < 2) {
      throw FormatError("line " + std::to_string(line_no) + ": expected '<set_id> <k> ...'");
    }
    const Id set = as_id(values[0], num_sets, "set id", line_no);
    if (seen[set]) {
      throw FormatError("line " + std::to_string(line_no) + ": set " + std::to_string(set) +
                        " listed twice");
    }
    seen[set] = true;
    if (values[1] != values.size() - 2) {
      throw FormatError("line " + std::to_string(line_no) + ": member count mismatch");
    }
    for (std::size_t i = 2; i < values.size(); ++i) {
      edges.emplace_back(set, as_id(values[i], num_elements, "element id", line_no));
    }
    ++sets_read;
  }
  if (!have_header) throw FormatError("missing 'ssys' header");
  if (sets_read != num_sets) {
    throw FormatError("expected " + std::to_string(num_sets) + " set lines, found " +
                      std::to_string(sets_read));
  }
  if (edges.size() != num_edges) {
    throw FormatError("header declares " + std::to_string(num_edges) + " edges, found " +
                      std::to_string(edges.size()));
  }
  SetSystem system = SetSystem::build(static_cast<std::int64_t>(num_elements),
                                      static_cast<std::int64_t>(num_sets), edges);
  if (system.num_edges() != num_edges) throw FormatError("duplicate members in a set line");
  return system;
}

std::string to_ssys_json(const SetSystem& system) {
  json members = json::array();
  for (Id set = 0; set < system.num_sets(); ++set) {
    const auto row = system.members(set);
    members.push_back(std::vector<Id>(row.begin(), row.end()));
  }
  json doc = {{"format", "ssys"},
              {"version", 1},
              {"elements", system.num_elements()},
              {"sets", system.num_sets()},
              {"edges", system.num_edges()},
              {"members", std::move(members)}};
  return doc.dump() + "\n";
}

SetSystem parse_ssys_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "ssys" || doc.at("version") != 1) {
      throw FormatError("not an ssys v1 document");
    }
    const auto num_elements = doc.at("elements").get<std::int64_t>();
    const auto num_sets = doc.at("sets").get<std::int64_t>();
    const auto num_edges = doc.at("edges").get<std::int64_t>();
    const auto& members = doc.at("members");
    if (!members.is_array() || static_cast<std::int64_t>(members.size()) != num_sets) {
      throw FormatError("members must list every set");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::size_t set = 0; set < members.size(); ++set) {
      for (const auto& e : members[set]) {
        edges.emplace_back(static_cast<std::int64_t>(set), e.get<std::int64_t>());
      }
    }
    if (static_cast<std::int64_t>(edges.size()) != num_edges) {
      throw FormatError("edge count mismatch");
    }
    SetSystem system = SetSystem::build(num_elements, num_sets, edges);
    if (static_cast<std::int64_t>(system.num_edges()) != num_edges) {
      throw FormatError("duplicate members");
    }
    return system;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed ssys JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

SetSystem load_system(const std::string& path, std::string* comment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_ssys_json(text);
  std::istringstream stream(text);
  return read_ssys(stream, comment);
}

void write_order(std::ostream& out, std::span<const Id> sequence) {
  for (Id v : sequence) out << v << '\n';
}

std::vector<Id> read_order(std::istream& in) {
  std::vector<Id> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (auto v : parse_numbers(line, line_no)) {
      out.push_back(as_id(v, std::numeric_limits<Id>::max(), "element id", line_no));
    }
  }
  return out;
}

std::vector<Id> load_order(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_order(in);
}

namespace {

json trace_json(const RunTrace& trace) {
  json rows = json::array();
  for (const auto& it : trace.iterations) {
    rows.push_back({{"a_cur", it.current_elements},
                    {"b_cur", it.current_sets},
                    {"sample", it.sample_size},
                    {"observed_diff", it.observed_diff},
                    {"near_twin_limit", it.thresholds.near_twin_limit},
                    {"loop_guard", it.thresholds.loop_guard},
                    {"crossing_bound", it.thresholds.crossing_bound},
                    {"shrink_limit", it.shrink_limit},
                    {"a_next", it.next_elements},
                    {"b_next", it.next_sets},
                    {"pushed", it.pushed}});
  }
  return {{"seed", trace.seed},
          {"c", trace.params.c},
          {"d", trace.params.d},
          {"ground_size", trace.ground_size},
          {"loop_guard", trace.loop_guard},
          {"crossing_bound", trace.crossing_bound},
          {"iteration_cap", trace.iteration_cap},
          {"iterations", trace.iterations.size()},
          {"table", std::move(rows)},
          {"outcome", to_string(trace.outcome)}};
}

}  // namespace

std::string trace_to_json(const RunTrace& trace) { return trace_json(trace).dump(2) + "\n"; }

std::string traces_to_json(std::span<const RunTrace> traces) {
  json all = json::array();
  for (const auto& t : traces) all.push_back(trace_json(t));
  return all.dump(2) + "\n";
}

std::string report_summary(const CrossingReport& report) {
  std::string out = "max=" + std::to_string(report.max) + " bound=";
  out += report.bound ? format_number(*report.bound) : std::string("none");
  out += report.pass ? " pass=1" : " pass=0";
  return out;
}

void write_report(std::ostream& out, const CrossingReport& report) {
  out << "# set crossings\n";
  for (std::size_t set = 0; set < report.per_set.size(); ++set) {
    out << set << ' ' << report.per_set[set] << '\n';
  }
  out << report_summary(report) << '\n';
}

void write_cover(std::ostream& out, const Cover& cover) {
  for (std::size_t k = 0; k < cover.clusters.size(); ++k) {
    out << k << ' ' << cover.clusters[k].size();
    for (Id v : cover.clusters[k]) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t v = 0; v < cover.assignment.size(); ++v) {
    out << v << ' ' << cover.assignment[v] << '\n';
  }
}

Cover read_cover(std::istream& in, std::size_t num_vertices) {
  Cover cover;
  std::string line;
  std::size_t line_no = 0;
  std::vector<bool> assigned(num_vertices, false);
  std::size_t assignments = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto values = parse_numbers(line, line_no);
    // Cluster lines have at least one member, so three or more fields;
    // assignment lines have two and follow every cluster line.
    if (values.size() >= 3) {
      if (assignments > 0 || values[0] != cover.clusters.size() ||
          values[1] != values.size() - 2) {
        throw FormatError("line " + std::to_string(line_no) + ": malformed cluster line");
      }
      std::vector<Id> members;
      for (std::size_t i = 2; i < values.size(); ++i) {
        members.push_back(as_id(values[i], num_vertices, "vertex", line_no));
      }
      cover.clusters.push_back(std::move(members));
      continue;
    }
    if (values.size() != 2) {
      throw FormatError("line " + std::to_string(line_no) + ": malformed cover line");
    }
    if (cover.assignment.empty()) cover.assignment.assign(num_vertices, 0);
    const Id v = as_id(values[0], num_vertices, "vertex", line_no);
    if (assigned[v]) throw FormatError("vertex assigned twice");
    assigned[v] = true;
    cover.assignment[v] = as_id(values[1], cover.clusters.size(), "cluster id", line_no);
    ++assignments;
  }
  if (assignments != num_vertices) throw FormatError("cover assignment incomplete");
  return cover;
}

std::string audit_summary(const CoverAudit& audit) {
  std::ostringstream out;
  out << "coverage=" << (audit.coverage ? 1 : 0) << " weak_diameter=";
  if (audit.connected) {
    out << audit.max_weak_diameter << (audit.diameter_exact ? "" : "(upper)");
  } else {
    out << "inf";
  }
  out << " overlap=" << audit.overlap << " overlap_target=" << format_number(audit.overlap_target)
      << " ratio=" << format_number(audit.overlap_ratio());
  return out.str();
}

}  // namespace welzl
