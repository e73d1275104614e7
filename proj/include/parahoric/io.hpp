#pragma once

#include "parahoric/errors.hpp"
#include "parahoric/reduction.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace parahoric {

using Json = nlohmann::json;

struct Job {
    std::size_t n = 0;
    std::int64_t truncation = 0;
    Weight weight;
    Connection connection;
    // Command options as given; unknown keys are rejected by parse_job.
    Budget budget;
    Json options = Json::object();
};

// Throws ParseError naming the offending field.
Job parse_job(const std::string &text);
std::string print_job(const Job &job);

Json rat_json(const Rat &r);
Rat rat_from_json(const Json &j, const std::string &field);
Json qmat_json(const QMat &m);
QMat qmat_from_json(const Json &j, std::size_t n, const std::string &field);
// Series as an exponent-ascending list of [exponent, "p/q"] pairs.
Json series_json(const Series &s);
Series series_from_json(const Json &j, std::int64_t trunc, const std::string &field);
Json matseries_json(const MatSeries &m);
MatSeries matseries_from_json(const Json &j, std::size_t n, const std::string &field);
Json connection_json(const Connection &c);
Connection connection_from_json(const Json &j, std::size_t n, const std::string &field);
Json weight_json(const Weight &w);
Weight weight_from_json(const Json &j, std::size_t n, const std::string &field);
Json word_json(const GaugeWord &w);
GaugeWord word_from_json(const Json &j, std::size_t n, const std::string &field);

// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json &j);

struct RunOptions {
    std::optional<std::int64_t> truncation;
    std::optional<std::int64_t> max_ramification;
    std::optional<std::int64_t> budget_iterations;
    std::optional<std::uint64_t> seed;
    bool higgs = false;
    // verify only: the report to check.
    std::string report_text;
};

struct RunResult {
    int exit_code = 0;
    Json report;
};

// Exit codes: 0 success, 1 verification failure, 2 parse or precondition
// error, 3 budget or search exhaustion, 4 internal invariant violation.
int exit_code_for(ErrorKind k);

// Applies the flag overrides to a parsed job.
Job effective_job(Job job, const RunOptions &opt);

RunResult run(const std::string &command, const std::string &job_text, const RunOptions &opt);

} // namespace parahoric
