#include "parahoric/errors.hpp"
#include "parahoric/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace parahoric;

namespace {

std::string slurp(const std::string &file)
{
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &file, const std::string &text)
{
    if (file.empty() || file == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(file, std::ios::binary);
    out << text;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Formal reduction of connections and Higgs fields over Q((z))"};
    app.set_version_flag("--version", std::string("parahoric ") + PARAHORIC_VERSION);
    app.require_subcommand(1);

    std::string job_file = "-", output, report_file, cert_file;
    RunOptions opt;
    std::int64_t trunc = 0, ram = 0, iters = 0;
    std::uint64_t seed = 0;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"reduce", "Reduce to a Cartan or logarithmic normal form"},
        {"slope", "Slope of the connection"},
        {"regular", "Regularity verdict with a parahoric witness"},
        {"relreg", "Relative regularity against a regular semisimple template"},
        {"borel", "Borel-shaped normal form search"},
        {"order", "Order and canonical representation for the job weight"},
        {"residue", "Residue of z A for the job weight"},
        {"verify", "Replay a report certificate against its job"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("job,--job", job_file, "Job document, or - for stdin (default)");
        sub->add_option("-o,--output", output, "Write the report here instead of stdout");
        sub->add_option("--truncation", trunc, "Lower the job truncation");
        sub->add_option("--max-ramification", ram, "Ramification cap");
        sub->add_option("--budget-iterations", iters, "Iteration cap");
        sub->add_option("--seed", seed, "Seed for randomized suites");
        sub->add_option("--emit-certificate", cert_file, "Also write the certificate to this file");
        sub->add_flag("--higgs", opt.higgs, "Treat the job as a Higgs field");
        if (name == "verify")
            sub->add_option("--report", report_file, "Report to check")->required();
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    CLI::App *sub = app.get_subcommands().front();
    if (sub->count("--truncation"))
        opt.truncation = trunc;
    if (sub->count("--max-ramification"))
        opt.max_ramification = ram;
    if (sub->count("--budget-iterations"))
        opt.budget_iterations = iters;
    if (sub->count("--seed"))
        opt.seed = seed;

    RunResult res;
    try {
        std::string text = slurp(job_file);
        if (command == "verify")
            opt.report_text = slurp(report_file);
        res = run(command, text, opt);
    } catch (const Error &e) {
        res.exit_code = exit_code_for(e.kind());
        res.report = {{"tool", "parahoric"},
                      {"version", PARAHORIC_VERSION},
                      {"command", command},
                      {"error", {{"kind", kind_name(e.kind())}, {"message", e.detail()}}}};
    }
    emit(output, dump(res.report));
    if (!cert_file.empty() && res.report.contains("certificate"))
        emit(cert_file, dump(res.report["certificate"]));
    if (res.report.contains("error"))
        std::cerr << "parahoric: " << res.report["error"]["kind"].get<std::string>() << ": "
                  << res.report["error"]["message"].get<std::string>() << "\n";
    return res.exit_code;
}
