#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qpkit/bounds.hpp"
#include "qpkit/models.hpp"

namespace qpkit {

struct ParsedInput {
  VarietyModel model;
  bool acm = false;  // optional "acm": true in the input
};

// Builds a model from the JSON schema:
//   {"type":"toric","lattice_points":[[...],...]}
//   {"type":"graph","vertices":N,"edges":[[u,v],...]}
//   {"type":"points","n":N,"coords":[["p/q",...],...]}
// Diagnostics name the offending field.
ParsedInput model_from_json(const nlohmann::json& j);
ParsedInput parse_input(const std::string& path);

// Content hash of the canonicalized model, stable across input field and
// container ordering (16 hex digits, FNV-1a).
std::string model_digest(const VarietyModel& m);

nlohmann::json report_to_json(const PyBoundsReport& r);

// JSON numbers only below 2^53; larger integers become decimal strings.
nlohmann::json json_int(const Int& v);

struct RunOptions {
  std::string command;  // quadrics|kappa|qp|strand|bounds|report|selftest
  std::string input_path;
  int trials = 3;
  std::uint64_t seed = 42;
  int p_max = -1;
  int max_gamma = -1;
  long long budget = kDefaultEntryBudget;
  std::string format = "json";  // json|table
  bool acm = false;
  std::string data_dir = "data/models";  // selftest corpus location
};

// Executes one command; writes the report to `out`. Returns the process
// exit code: 0 success, 1 error, 2 inconclusive search.
int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qpkit
