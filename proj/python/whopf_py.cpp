#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whopf/catalog.hpp"
#include "whopf/error.hpp"
#include "whopf/io.hpp"

namespace py = pybind11;
using namespace whopf;

namespace {

py::tuple run(const InputDocument& doc, std::optional<std::string> op, std::optional<std::string> task,
              std::uint64_t max_enum, unsigned threads) {
  RunOptions opt;
  opt.op = std::move(op);
  opt.task = std::move(task);
  opt.max_enum = max_enum;
  opt.threads = threads;
  RunResult r;
  {
    py::gil_scoped_release release;
    r = run_document(doc, opt);
  }
  return py::make_tuple(r.exit_code, r.report.dump(2), r.text);
}

}  // namespace

PYBIND11_MODULE(_whopf, m) {
  m.doc() = "Exact weak Hopf algebra kernel";
  py::register_exception<Error>(m, "WhopfError", PyExc_ValueError);

  m.def(
      "run_json",
      [](const std::string& text, std::optional<std::string> op, std::optional<std::string> task,
         std::uint64_t max_enum, unsigned threads) {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        return run(parse_input(j), std::move(op), std::move(task), max_enum, threads);
      },
      py::arg("text"), py::arg("op") = py::none(), py::arg("task") = py::none(), py::arg("max_enum") = 10'000'000,
      py::arg("threads") = 1, "Runs a task document given as JSON text; returns (exit_code, report_json, text).");
  m.def(
      "run_file",
      [](const std::string& path, std::optional<std::string> op, std::optional<std::string> task,
         std::uint64_t max_enum, unsigned threads) {
        return run(parse_input_file(path), std::move(op), std::move(task), max_enum, threads);
      },
      py::arg("path"), py::arg("op") = py::none(), py::arg("task") = py::none(), py::arg("max_enum") = 10'000'000,
      py::arg("threads") = 1, "Runs a task document file; returns (exit_code, report_json, text).");
  m.def("task_ops", &task_ops, "Names of the task operations.");
  m.def(
      "identities",
      [] {
        py::list out;
        for (const auto& e : identity_catalog()) out.append(py::make_tuple(e.module, e.label, e.formula));
        return out;
      },
      "The identity catalogue as (module, label, formula) tuples.");
  m.def("catalog_text", &catalog_text);
}
