#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "whopf/report.hpp"
#include "whopf/structure.hpp"

namespace whopf {

using Json = nlohmann::ordered_json;

struct Task {
  std::string name;
  std::string op;
  Json args = Json::object();
};

// A parsed input document. Structures are kept as JSON and built on demand;
// parse_input resolves every reference once so that bad input fails early.
struct InputDocument {
  FieldSpec field;
  std::map<std::string, Groupoid> groupoids;
  std::map<std::string, Json> structures;
  std::vector<Task> tasks;
};

const std::vector<std::string>& task_ops();

// Throws ParseError with a location prefix such as "structures.A.mult[3]".
InputDocument parse_input(const Json& doc);
InputDocument parse_input_file(const std::string& path);

FieldSpec parse_field(const Json& j, const std::string& where = "field");
Json field_json(FieldSpec f);

Json report_json(const Report& r);
std::string report_text(const Report& r, const std::string& indent = "  ");

struct RunOptions {
  std::optional<std::string> op;    // run only tasks with this op
  std::optional<std::string> task;  // run only the task with this name
  std::uint64_t max_enum = 10'000'000;
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 task failure, 3 search space too large
  Json report;
  std::string text;
};

// Executes the selected tasks in order. When an op is selected and no task has it,
// one task with default arguments is run.
RunResult run_document(const InputDocument& doc, const RunOptions& opt = {});

}  // namespace whopf
