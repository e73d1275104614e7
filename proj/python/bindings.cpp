#include "parahoric/errors.hpp"
#include "parahoric/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace parahoric;

namespace {

py::tuple run_command(const std::string &command, const std::string &job, std::optional<std::int64_t> truncation,
                      std::optional<std::int64_t> max_ramification, std::optional<std::int64_t> budget_iterations,
                      bool higgs, const std::string &report)
{
    RunOptions opt;
    opt.truncation = truncation;
    opt.max_ramification = max_ramification;
    opt.budget_iterations = budget_iterations;
    opt.higgs = higgs;
    opt.report_text = report;
    RunResult r;
    {
        py::gil_scoped_release release;
        r = run(command, job, opt);
    }
    return py::make_tuple(r.exit_code, dump(r.report));
}

std::string canonical_job(const std::string &job)
{
    try {
        return print_job(parse_job(job));
    } catch (const Error &e) {
        throw py::value_error(e.what());
    }
}

// Replays a certificate (JSON list of factors) on the job's connection.
std::string replay(const std::string &job, const std::string &certificate)
{
    try {
        Job j = parse_job(job);
        GaugeWord w = word_from_json(Json::parse(certificate), j.n, "certificate");
        return dump(connection_json(gauge(w, j.connection)));
    } catch (const Error &e) {
        throw py::value_error(e.what());
    } catch (const Json::exception &e) {
        throw py::value_error(e.what());
    }
}

} // namespace

PYBIND11_MODULE(_parahoric, m)
{
    m.attr("__version__") = PARAHORIC_VERSION;
    m.def("run", &run_command, py::arg("command"), py::arg("job"), py::arg("truncation") = py::none(),
          py::arg("max_ramification") = py::none(), py::arg("budget_iterations") = py::none(),
          py::arg("higgs") = false, py::arg("report") = "",
          "Run a CLI command on a job document. Returns (exit_code, report_json).");
    m.def("canonical_job", &canonical_job, py::arg("job"));
    m.def("replay", &replay, py::arg("job"), py::arg("certificate"));
}
