#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "welzl/cover.hpp"
#include "welzl/engine.hpp"
#include "welzl/setsystem.hpp"
#include "welzl/verifier.hpp"

namespace welzl {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "ssys v1" text:
//   # optional comment lines
//   ssys <|A|> <|B|> <|E|>
//   <set_id> <k> <e_1> ... <e_k>      (one line per set, ids increasing)
void write_ssys(std::ostream& out, const SetSystem& system, std::string_view comment = {});
std::string to_ssys(const SetSystem& system, std::string_view comment = {});

// Accepts sets in any order, each exactly once. The first comment line (without
// the leading "# ") is stored in *comment when given. Throws FormatError.
SetSystem read_ssys(std::istream& in, std::string* comment = nullptr);

// Same fields as JSON: {"format":"ssys","version":1,"elements":..,"sets":..,
// "edges":..,"members":[[..],..]}.
std::string to_ssys_json(const SetSystem& system);
SetSystem parse_ssys_json(std::string_view text);

// Reads either representation, chosen by the first non-blank character.
SetSystem load_system(const std::string& path, std::string* comment = nullptr);

// One element id per line, in order position.
void write_order(std::ostream& out, std::span<const Id> sequence);
std::vector<Id> read_order(std::istream& in);
std::vector<Id> load_order(const std::string& path);

// Structured run trace: parameters, seed, outcome and the iteration table.
std::string trace_to_json(const RunTrace& trace);
std::string traces_to_json(std::span<const RunTrace> traces);

// "<set> <crossings>" rows followed by "max=<v> bound=<b> pass=<0|1>".
void write_report(std::ostream& out, const CrossingReport& report);
std::string report_summary(const CrossingReport& report);

// "<cluster_id> <k> <v_1> ... <v_k>" per cluster, then "<v> <cluster_id>".
void write_cover(std::ostream& out, const Cover& cover);
Cover read_cover(std::istream& in, std::size_t num_vertices);

std::string audit_summary(const CoverAudit& audit);

// Shortest round-trip decimal rendering used in every text output.
std::string format_number(double value);

}  // namespace welzl
