#include "helpers.hpp"
#include "parahoric/errors.hpp"
#include "parahoric/io.hpp"

#include <doctest.h>

using namespace th;

namespace {

const char *kMinimal = R"({"n": 2, "truncation": 8, "weight": ["0", "0"],
  "connection": [[[], [[0, "1"]]], [[[-3, "1"]], []]]})";

ErrorKind parse_kind(const std::string &text)
{
    try {
        parse_job(text);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

std::string message(const std::string &text)
{
    try {
        parse_job(text);
    } catch (const Error &e) {
        return e.detail();
    }
    return "";
}

} // namespace

TEST_CASE("job documents round-trip byte-identically")
{
    std::string once = print_job(parse_job(kMinimal));
    CHECK(print_job(parse_job(once)) == once);
    Job j = parse_job(kMinimal);
    CHECK(j.n == 2);
    CHECK(j.truncation == 8);
    CHECK(j.connection.mat.at(1, 0).coeff(-3) == 1);
    CHECK(j.connection.mat.trunc() == 8);
}

TEST_CASE("malformed jobs name the offending field")
{
    CHECK(parse_kind("{") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"n": 2})") == ErrorKind::ParseError);
    CHECK(message(R"({"n": 2, "truncation": 8, "weight": ["0", "0"], "extra": 1,
        "connection": [[[], []], [[], []]]})").find("extra") != std::string::npos);
    CHECK(message(R"({"n": 2, "truncation": 8, "weight": ["0", "0"],
        "connection": [[[[0, "1/0"]], []], [[], []]]})").find("connection[0][0][0][1]") != std::string::npos);
    CHECK(message(R"({"n": 2, "truncation": 8, "weight": ["0", "0"],
        "connection": [[[[0, "1"], [0, "2"]], []], [[], []]]})").find("repeated") != std::string::npos);
    CHECK(message(R"({"n": 2, "truncation": 8, "weight": ["0", "0"],
        "connection": [[[[8, "1"]], []], [[], []]]})").find("truncation") != std::string::npos);
    CHECK(parse_kind(R"({"n": 2, "truncation": 8, "weight": ["0"],
        "connection": [[[], []], [[], []]]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"n": 2, "truncation": 2, "weight": ["0", "0"],
        "connection": [[[], []], [[], []]]})") == ErrorKind::ParseError);
}

TEST_CASE("words and connections serialize losslessly")
{
    GaugeWord w;
    w.push(ConstFactor{diag({2, 1})})
        .push(CocharFactor{{1, -1}})
        .push(ExpFactor{mat(2, {{0, 1, 1, q("1/3")}}, 6), Weight({q("1/2"), Rat(0)})})
        .push(RamifyFactor{2})
        .push(ShearFactor{-1, diag({1, -1})});
    Json j = Json::parse(dump(word_json(w)));
    CHECK(word_json(word_from_json(j, 2, "w")) == j);

    Connection c{mat(2, {{1, 0, -2, Rat(1)}}, 5), 3, true};
    Connection back = connection_from_json(connection_json(c), 2, "c");
    CHECK(back.mat == c.mat);
    CHECK(back.b == 3);
    CHECK(back.higgs);
}

TEST_CASE("run reports slope and verifies its own certificates")
{
    RunResult s = run("slope", kMinimal, {});
    CHECK(s.exit_code == 0);
    CHECK(s.report["slope"] == "1/2");

    RunResult r = run("reduce", kMinimal, {});
    REQUIRE(r.exit_code == 0);
    RunOptions v;
    v.report_text = dump(r.report);
    CHECK(run("verify", kMinimal, v).exit_code == 0);

    Json tampered = r.report;
    tampered["output"]["cover"] = 1;
    v.report_text = dump(tampered);
    CHECK(run("verify", kMinimal, v).exit_code == 1);
}

TEST_CASE("exit codes")
{
    CHECK(run("reduce", "{", {}).exit_code == 2);
    CHECK(run("nonsense", kMinimal, {}).exit_code == 2);
    RunOptions tight;
    tight.budget_iterations = 1;
    CHECK(run("reduce", kMinimal, tight).exit_code == 3);
    CHECK(exit_code_for(ErrorKind::NoProgress) == 4);
    CHECK(exit_code_for(ErrorKind::SearchExhausted) == 3);
}
