#include "parahoric/errors.hpp"
#include "parahoric/io.hpp"

namespace parahoric {

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::SearchExhausted:
    case ErrorKind::FieldExtensionNeeded:
        return 3;
    case ErrorKind::NoProgress:
    case ErrorKind::InvariantViolation:
    case ErrorKind::Inconsistent:
    case ErrorKind::NonConvergent:
        return 4;
    default:
        return 2;
    }
}

Job effective_job(Job job, const RunOptions &opt)
{
    if (opt.truncation) {
        if (*opt.truncation < 4)
            fail(ErrorKind::ParseError, "--truncation: truncation must be at least 4");
        if (*opt.truncation < job.truncation) {
            job.truncation = *opt.truncation;
            job.connection.mat = job.connection.mat.truncated(job.truncation);
        }
    }
    if (opt.max_ramification)
        job.budget.max_ramification = *opt.max_ramification;
    if (opt.budget_iterations)
        job.budget.max_iterations = *opt.budget_iterations;
    if (opt.higgs)
        job.connection.higgs = true;
    return job;
}

namespace {

Json trunc_json(std::int64_t t) { return t == kInf ? Json(nullptr) : Json(t); }

Json header(const std::string &command)
{
    return Json{{"tool", "parahoric"}, {"version", PARAHORIC_VERSION}, {"command", command}};
}

void attach(Json &r, const Connection &out, const GaugeWord &w)
{
    r["output"] = connection_json(out);
    r["certificate"] = word_json(w);
    r["effective_truncation"] = trunc_json(out.mat.trunc());
}

Json progress_json(const std::vector<ProgressEntry> &log)
{
    Json out = Json::array();
    for (const auto &e : log)
        out.push_back({{"step", e.step},
                       {"slope", rat_json(e.slope)},
                       {"derived_dim", e.derived_dim},
                       {"order", e.order},
                       {"b", e.b}});
    return out;
}

MatSeries template_from(const Json &r, std::size_t n) { return matseries_from_json(r.at("template"), n, "template"); }

RunResult verify(const Job &job, const std::string &report_text)
{
    Json rep;
    try {
        rep = Json::parse(report_text);
    } catch (const Json::parse_error &e) {
        fail(ErrorKind::ParseError, std::string("report: ") + e.what());
    }
    if (!rep.is_object() || !rep.contains("command") || !rep.contains("certificate") || !rep.contains("output"))
        fail(ErrorKind::ParseError, "report: missing command, certificate or output");
    std::string cmd = rep["command"].get<std::string>();
    Connection input = job.connection;
    if (cmd == "relreg")
        input.mat = template_from(rep, job.n) + input.mat;
    GaugeWord w = word_from_json(rep["certificate"], job.n, "certificate");
    Connection claimed = connection_from_json(rep["output"], job.n, "output");
    Connection replay = gauge(w, input);

    bool ok = replay.b == claimed.b && replay.higgs == claimed.higgs && replay.mat.agrees(claimed.mat);
    const Json &et = rep.contains("effective_truncation") ? rep["effective_truncation"] : Json(nullptr);
    if (!et.is_null() && et.is_number_integer() && replay.mat.trunc() < et.get<std::int64_t>())
        ok = false;
    if (ok && cmd == "borel")
        ok = borel_shape(claimed, rep.at("order").get<std::int64_t>());
    if (ok && cmd == "regular" && rep.at("regular").get<bool>()) {
        Weight ww = weight_from_json(rep.at("witness_weight"), job.n, "witness_weight");
        ok = filtration_member(ww, claimed.mat.shifted(1), Filtration::parahoric);
    }
    Json r = header("verify");
    r["verified"] = ok;
    r["checked_command"] = cmd;
    r["effective_truncation"] = trunc_json(replay.mat.trunc());
    return {ok ? 0 : 1, r};
}

} // namespace

RunResult run(const std::string &command, const std::string &job_text, const RunOptions &opt)
{
    try {
        Job job = effective_job(parse_job(job_text), opt);
        const Connection &a = job.connection;
        Json r = header(command);
        if (command == "reduce") {
            ReductionReport rep = full_reduce(job.weight, a, job.budget);
            attach(r, rep.final, rep.certificate);
            r["form_class"] = form_class_name(rep.form_class);
            r["slope"] = rat_json(rep.slope);
            r["ramification"] = rep.ramification;
            r["progress_log"] = progress_json(rep.progress_log);
        } else if (command == "slope") {
            if (a.mat.is_zero())
                fail(ErrorKind::ZeroConnection, "slope of the zero connection");
            ReductionReport rep = full_reduce(Weight::zero(job.n), a, job.budget);
            r["slope"] = rat_json(rep.slope);
            r["ramification"] = rep.ramification;
            r["effective_truncation"] = trunc_json(rep.effective_trunc);
        } else if (command == "regular") {
            RegularityVerdict v = is_regular(a, job.budget);
            r["regular"] = v.regular;
            if (v.regular) {
                r["witness_weight"] = weight_json(*v.witness_weight);
                attach(r, gauge(*v.witness_gauge, a), *v.witness_gauge);
            } else {
                ReductionReport rep = full_reduce(Weight::zero(job.n), a, job.budget);
                attach(r, rep.final, rep.certificate);
                r["slope"] = rat_json(rep.slope);
            }
        } else if (command == "relreg") {
            RelativeRegularity rr = relative_regularity_check(a, job.budget);
            r["verdict"] = rr.verdict;
            r["weight"] = weight_json(rr.weight);
            r["template"] = matseries_json(rr.template_q);
            Connection in{rr.template_q + a.mat, a.b, a.higgs};
            attach(r, rr.reduced ? *rr.reduced : gauge(rr.certificate, in), rr.certificate);
        } else if (command == "borel") {
            Reduced red = borel_reduce(job.weight, a, job.budget);
            attach(r, red.B, red.w);
            r["order"] = plain_order(red.B);
        } else if (command == "order") {
            ThetaRep rep = theta_rep(job.weight, a);
            if (rep.terms.empty())
                fail(ErrorKind::ZeroConnection, "order of the zero connection");
            Json terms = Json::array();
            for (const auto &t : rep.terms)
                terms.push_back({{"r", t.r}, {"l", rat_json(t.l)}, {"i", t.i}, {"X", qmat_json(t.X)}});
            r["order"] = rep.c;
            r["theta_rep"] = terms;
            r["effective_truncation"] = trunc_json(a.mat.trunc());
        } else if (command == "residue") {
            MatSeries xh = a.mat.shifted(1);
            r["residue"] = matseries_json(residue(job.weight, xh));
            r["residue0"] = qmat_json(residue0(job.weight, xh));
            r["effective_truncation"] = trunc_json(xh.trunc());
        } else if (command == "verify") {
            return verify(job, opt.report_text);
        } else {
            fail(ErrorKind::ParseError, "unknown command \"" + command + "\"");
        }
        return {0, r};
    } catch (const Error &e) {
        Json r = header(command);
        r["error"] = {{"kind", kind_name(e.kind())}, {"message", e.detail()}};
        return {exit_code_for(e.kind()), r};
    }
}

} // namespace parahoric
