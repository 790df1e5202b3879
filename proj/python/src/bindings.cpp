// Python entry points; everything goes through the same driver as the CLI.

#include "hopfclass/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Green-ring and class-ring computations";
  m.attr("SCHEMA_VERSION") = hopfclass::kSchemaVersion;
  m.def("verify_targets", &hopfclass::verify_targets);
  m.def(
      "run",
      [](const std::string& command, const std::vector<std::string>& args, const std::string& family, int n,
         const std::string& p, std::uint64_t seed, unsigned jobs, const std::string& format, const std::string& mode,
         bool computed) {
        hopfclass::RunConfig cfg;
        cfg.command = command;
        cfg.args = args;
        cfg.family = family;
        cfg.n = n;
        cfg.p = p;
        cfg.seed = seed;
        cfg.jobs = jobs;
        cfg.format = format;
        cfg.mode = mode;
        cfg.computed = computed;
        hopfclass::RunResult r;
        {
          py::gil_scoped_release release;
          r = hopfclass::run(cfg);
        }
        return py::make_tuple(r.exit_code, r.output);
      },
      py::arg("command"), py::arg("args") = std::vector<std::string>{}, py::arg("family") = "tensor-taft",
      py::arg("n") = 3, py::arg("p") = "0", py::arg("seed") = 0, py::arg("jobs") = 1, py::arg("format") = "json",
      py::arg("mode") = "", py::arg("computed") = false,
      "Run one command; returns (exit_code, output).");
}
