// Python bindings. Every command of the command-line tool is exposed through
// run(), which exchanges JSON text; a few exact primitives are bound
// directly with string-encoded scalars so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tropos/cli.hpp"
#include "tropos/regression.hpp"
#include "tropos/series_field.hpp"
#include "tropos/trop_core.hpp"

namespace py = pybind11;

namespace {

tropos::cli::Command command_from_name(const std::string& name) {
  using tropos::cli::Command;
  for (Command c : {Command::Classify, Command::Staircase, Command::Echelon, Command::Factor, Command::Product,
                    Command::Spectrum, Command::Plucker, Command::StiefelInvert, Command::NetworkWeight,
                    Command::FactorToNetwork, Command::Verify})
    if (name == tropos::cli::to_string(c)) return c;
  throw py::value_error("unknown command '" + name + "'");
}

tropos::TropMatrix trop_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<tropos::TropScalar> entries;
  for (const auto& row : rows) {
    if (row.size() != cols) throw tropos::DimensionError("ragged matrix");
    for (const auto& x : row) entries.push_back(tropos::parse_trop(x));
  }
  return tropos::TropMatrix(rows.size(), cols, std::move(entries));
}

tropos::SeriesMatrix series_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<tropos::SeriesRat> entries;
  for (const auto& row : rows) {
    if (row.size() != cols) throw tropos::DimensionError("ragged matrix");
    for (const auto& x : row) entries.push_back(tropos::parse_series(x));
  }
  return tropos::SeriesMatrix(rows.size(), cols, std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_tropos, m) {
  m.doc() = "Exact tropical total positivity";

  py::register_exception<tropos::Error>(m, "TroposError");

  m.def(
      "run",
      [](const std::string& command, const std::optional<std::string>& input, std::size_t cap, std::uint64_t seed,
         const std::optional<std::string>& lift, bool strict) {
        tropos::cli::RunConfig cfg;
        cfg.command = command_from_name(command);
        cfg.input_text = input;
        cfg.cap = cap;
        cfg.seed = seed;
        if (lift) cfg.lift = tropos::parse_lift_kind(*lift);
        cfg.strict = strict;
        std::ostringstream out;
        const int status = tropos::cli::run(cfg, out);
        return py::make_tuple(status, out.str());
      },
      py::arg("command"), py::arg("input") = py::none(), py::arg("cap") = 9, py::arg("seed") = 0,
      py::arg("lift") = py::none(), py::arg("strict") = false,
      "Runs one command on JSON text; returns (exit status, JSON text).");

  m.def(
      "permanent", [](const std::vector<std::vector<std::string>>& a) {
        return tropos::to_string(tropos::permanent_assignment(trop_matrix(a)));
      },
      "Tropical permanent of a square matrix given as strings (\"-inf\" allowed).");

  m.def(
      "minor_class", [](const std::vector<std::vector<std::string>>& a) {
        return std::string(tropos::to_string(tropos::classify_square(trop_matrix(a)).tag));
      },
      "Sign class of the tropical determinant of a square matrix.");

  m.def(
      "valuation", [](const std::string& x) { return tropos::to_string(tropos::valuation(tropos::parse_series(x))); },
      "Leading exponent of a series literal.");

  m.def(
      "det", [](const std::vector<std::vector<std::string>>& a) {
        return tropos::to_string(tropos::det_series(series_matrix(a)));
      },
      "Exact determinant of a matrix of series literals.");

  m.def(
      "verify",
      [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : tropos::run_regression_suite()) out.emplace_back(r.name, r.pass);
        return out;
      },
      "Recomputes every worked example; returns (name, passed) pairs.");
}
