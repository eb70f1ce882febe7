#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "whopf/catalog.hpp"
#include "whopf/error.hpp"
#include "whopf/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic weak Hopf algebra kernel"};
  app.fallthrough();
  std::string input, json_out, task;
  std::uint64_t max_enum = 10'000'000;
  unsigned parallel = 1;
  bool list = false;
  app.add_flag("--list-identities", list, "Print the catalog of checkable identities");
  app.add_option("--input", input, "Input document (JSON)");
  app.add_option("--json-out", json_out, "Write the JSON report to this path");
  app.add_option("--max-enum", max_enum, "Refuse enumerations above this many candidates")->capture_default_str();
  app.add_option("--parallel", parallel, "Threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--task", task, "Run only the task with this name");

  std::string op;
  for (const auto& name : whopf::task_ops())
    app.add_subcommand(name, "Run the " + name + " tasks of the input")->fallthrough()->callback([&op, name] { op = name; });
  app.add_subcommand("run", "Run every task of the input")->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    std::cout << whopf::catalog_text();
    if (app.get_subcommands().empty()) return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << "whopf: a subcommand is required\n" << app.help();
    return 2;
  }
  if (input.empty()) {
    std::cerr << "whopf: --input is required\n";
    return 2;
  }

  try {
    const whopf::InputDocument doc = whopf::parse_input_file(input);
    whopf::RunOptions opt;
    if (!op.empty()) opt.op = op;
    if (!task.empty()) opt.task = task;
    opt.max_enum = max_enum;
    opt.threads = parallel;
    const whopf::RunResult res = whopf::run_document(doc, opt);
    std::cout << res.text;
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) {
        std::cerr << "whopf: cannot write " << json_out << "\n";
        return 2;
      }
      out << res.report.dump(2) << "\n";
    }
    return res.exit_code;
  } catch (const whopf::Error& e) {
    std::cerr << "whopf: " << e.what() << "\n";
    return e.code() == whopf::ErrorCode::ParseError ? 2 : 1;
  }
}
