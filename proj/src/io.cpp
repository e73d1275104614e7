#include "parahoric/io.hpp"
#include "parahoric/errors.hpp"

#include <set>

namespace parahoric {

namespace {

[[noreturn]] void bad(const std::string &field, const std::string &what) { fail(ErrorKind::ParseError, field + ": " + what); }

void only_keys(const Json &j, const std::set<std::string> &allowed, const std::string &field)
{
    if (!j.is_object())
        bad(field, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            bad(field, "unknown field \"" + it.key() + "\"");
}

const Json &need(const Json &j, const std::string &key, const std::string &field)
{
    auto it = j.find(key);
    if (it == j.end())
        bad(field, "missing field \"" + key + "\"");
    return *it;
}

std::int64_t int_from_json(const Json &j, const std::string &field)
{
    if (!j.is_number_integer())
        bad(field, "expected an integer");
    return j.get<std::int64_t>();
}

std::string path(const std::string &field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json &array_of(const Json &j, std::size_t len, const std::string &field)
{
    if (!j.is_array())
        bad(field, "expected an array");
    if (len != static_cast<std::size_t>(-1) && j.size() != len)
        bad(field, "expected " + std::to_string(len) + " elements");
    return j;
}

constexpr std::size_t kAny = static_cast<std::size_t>(-1);

} // namespace

Json rat_json(const Rat &r) { return rat_str(r); }

Rat rat_from_json(const Json &j, const std::string &field)
{
    if (j.is_number_integer())
        return Rat(Int(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string())
        bad(field, "expected a rational string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const Error &e) {
        bad(field, e.detail());
    }
}

Json qmat_json(const QMat &m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(rat_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

QMat qmat_from_json(const Json &j, std::size_t n, const std::string &field)
{
    array_of(j, n, field);
    QMat m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json &row = array_of(j[i], n, path(field, i));
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = rat_from_json(row[k], path(path(field, i), k));
    }
    return m;
}

Json series_json(const Series &s)
{
    Json out = Json::array();
    for (const auto &[k, v] : s.terms())
        out.push_back(Json::array({k, rat_json(v)}));
    return out;
}

Series series_from_json(const Json &j, std::int64_t trunc, const std::string &field)
{
    array_of(j, kAny, field);
    Series s(trunc);
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string f = path(field, i);
        const Json &pair = array_of(j[i], 2, f);
        std::int64_t e = int_from_json(pair[0], path(f, 0));
        Rat v = rat_from_json(pair[1], path(f, 1));
        if (!seen.insert(e).second)
            bad(f, "repeated exponent");
        if (e >= trunc)
            bad(f, "exponent at or above the truncation");
        try {
            check_exponent(e);
        } catch (const Error &err) {
            bad(f, err.detail());
        }
        if (v != 0)
            s.set(e, v);
    }
    return s;
}

Json matseries_json(const MatSeries &m)
{
    Json entries = Json::array(), trunc = Json::array();
    for (std::size_t a = 0; a < m.n(); ++a) {
        Json er = Json::array(), tr = Json::array();
        for (std::size_t b = 0; b < m.n(); ++b) {
            er.push_back(series_json(m.at(a, b)));
            std::int64_t t = m.at(a, b).trunc();
            tr.push_back(t == kInf ? Json(nullptr) : Json(t));
        }
        entries.push_back(er);
        trunc.push_back(tr);
    }
    return Json{{"entries", entries}, {"truncation", trunc}};
}

MatSeries matseries_from_json(const Json &j, std::size_t n, const std::string &field)
{
    only_keys(j, {"entries", "truncation"}, field);
    const Json &e = array_of(need(j, "entries", field), n, field + ".entries");
    const Json &t = array_of(need(j, "truncation", field), n, field + ".truncation");
    MatSeries m(n);
    for (std::size_t a = 0; a < n; ++a) {
        array_of(e[a], n, path(field + ".entries", a));
        array_of(t[a], n, path(field + ".truncation", a));
        for (std::size_t b = 0; b < n; ++b) {
            const Json &tj = t[a][b];
            std::int64_t tr = tj.is_null() ? kInf : int_from_json(tj, path(path(field + ".truncation", a), b));
            m.at(a, b) = series_from_json(e[a][b], tr, path(path(field + ".entries", a), b));
        }
    }
    return m;
}

Json connection_json(const Connection &c)
{
    Json j = matseries_json(c.mat);
    j["cover"] = c.b;
    j["mode"] = c.higgs ? "higgs" : "connection";
    return j;
}

static bool parse_mode(const Json &j, const std::string &field)
{
    if (!j.is_string() || (j != "connection" && j != "higgs"))
        bad(field, "mode must be \"connection\" or \"higgs\"");
    return j == "higgs";
}

Connection connection_from_json(const Json &j, std::size_t n, const std::string &field)
{
    only_keys(j, {"entries", "truncation", "cover", "mode"}, field);
    Json m{{"entries", need(j, "entries", field)}, {"truncation", need(j, "truncation", field)}};
    Connection c{matseries_from_json(m, n, field), 1, false};
    c.b = int_from_json(need(j, "cover", field), field + ".cover");
    if (c.b < 1)
        bad(field + ".cover", "cover degree must be positive");
    c.higgs = parse_mode(need(j, "mode", field), field + ".mode");
    return c;
}

Json weight_json(const Weight &w)
{
    Json out = Json::array();
    for (const auto &t : w.theta)
        out.push_back(rat_json(t));
    return out;
}

Weight weight_from_json(const Json &j, std::size_t n, const std::string &field)
{
    array_of(j, n, field);
    std::vector<Rat> t;
    for (std::size_t i = 0; i < n; ++i)
        t.push_back(rat_from_json(j[i], path(field, i)));
    return Weight(t);
}

Json word_json(const GaugeWord &w)
{
    Json out = Json::array();
    for (const auto &f : w.factors) {
        if (auto e = std::get_if<ExpFactor>(&f))
            out.push_back({{"factor", "exp"}, {"X", matseries_json(e->X)}, {"weight", weight_json(e->theta)}});
        else if (auto c = std::get_if<ConstFactor>(&f))
            out.push_back({{"factor", "const"}, {"C", qmat_json(c->C)}});
        else if (auto x = std::get_if<CocharFactor>(&f))
            out.push_back({{"factor", "cochar"}, {"xi", x->xi}});
        else if (auto s = std::get_if<ShearFactor>(&f))
            out.push_back({{"factor", "shear"}, {"n", s->n}, {"H", qmat_json(s->H)}});
        else if (auto r = std::get_if<RamifyFactor>(&f))
            out.push_back({{"factor", "ramify"}, {"b", r->b}});
    }
    return out;
}

GaugeWord word_from_json(const Json &j, std::size_t n, const std::string &field)
{
    array_of(j, kAny, field);
    GaugeWord w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string f = path(field, i);
        const Json &r = j[i];
        if (!r.is_object())
            bad(f, "expected an object");
        const Json &tag = need(r, "factor", f);
        if (tag == "exp") {
            only_keys(r, {"factor", "X", "weight"}, f);
            w.push(ExpFactor{matseries_from_json(need(r, "X", f), n, f + ".X"),
                             weight_from_json(need(r, "weight", f), n, f + ".weight")});
        } else if (tag == "const") {
            only_keys(r, {"factor", "C"}, f);
            w.push(ConstFactor{qmat_from_json(need(r, "C", f), n, f + ".C")});
        } else if (tag == "cochar") {
            only_keys(r, {"factor", "xi"}, f);
            const Json &xj = array_of(need(r, "xi", f), n, f + ".xi");
            std::vector<std::int64_t> xi;
            for (std::size_t k = 0; k < n; ++k)
                xi.push_back(int_from_json(xj[k], path(f + ".xi", k)));
            w.push(CocharFactor{xi});
        } else if (tag == "shear") {
            only_keys(r, {"factor", "n", "H"}, f);
            w.push(ShearFactor{int_from_json(need(r, "n", f), f + ".n"), qmat_from_json(need(r, "H", f), n, f + ".H")});
        } else if (tag == "ramify") {
            only_keys(r, {"factor", "b"}, f);
            std::int64_t b = int_from_json(need(r, "b", f), f + ".b");
            if (b < 1)
                bad(f + ".b", "ramification degree must be positive");
            w.push(RamifyFactor{b});
        } else {
            bad(f + ".factor", "unknown factor tag");
        }
    }
    return w;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

static Budget budget_from_options(const Json &o)
{
    only_keys(o, {"max_iterations", "max_ramification", "search_box", "boalch"}, "options");
    Budget b;
    if (o.contains("max_iterations"))
        b.max_iterations = int_from_json(o["max_iterations"], "options.max_iterations");
    if (o.contains("max_ramification"))
        b.max_ramification = int_from_json(o["max_ramification"], "options.max_ramification");
    if (o.contains("search_box"))
        b.search_box = int_from_json(o["search_box"], "options.search_box");
    if (o.contains("boalch")) {
        if (!o["boalch"].is_boolean())
            bad("options.boalch", "expected a boolean");
        b.boalch = o["boalch"].get<bool>();
    }
    if (b.max_iterations < 0 || b.max_ramification < 0 || b.search_box < 0)
        bad("options", "budgets must be nonnegative");
    return b;
}

Job parse_job(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(ErrorKind::ParseError, std::string("document: ") + e.what());
    }
    only_keys(j, {"n", "truncation", "weight", "connection", "mode", "options"}, "document");
    Job job;
    std::int64_t n = int_from_json(need(j, "n", "document"), "n");
    if (n < 1 || n > 16)
        bad("n", "dimension must lie in [1, 16]");
    job.n = static_cast<std::size_t>(n);
    job.truncation = int_from_json(need(j, "truncation", "document"), "truncation");
    if (job.truncation < 4)
        bad("truncation", "truncation must be at least 4");
    job.weight = weight_from_json(need(j, "weight", "document"), job.n, "weight");
    const Json &c = array_of(need(j, "connection", "document"), job.n, "connection");
    MatSeries m(job.n);
    for (std::size_t a = 0; a < job.n; ++a) {
        array_of(c[a], job.n, path("connection", a));
        for (std::size_t b = 0; b < job.n; ++b)
            m.at(a, b) = series_from_json(c[a][b], job.truncation, path(path("connection", a), b));
    }
    job.connection = Connection{m, 1, j.contains("mode") ? parse_mode(j["mode"], "mode") : false};
    if (j.contains("options")) {
        job.options = j["options"];
        job.budget = budget_from_options(job.options);
    }
    return job;
}

std::string print_job(const Job &job)
{
    Json c = Json::array();
    for (std::size_t a = 0; a < job.n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < job.n; ++b)
            row.push_back(series_json(job.connection.mat.at(a, b)));
        c.push_back(row);
    }
    Json j{{"n", job.n},
           {"truncation", job.truncation},
           {"weight", weight_json(job.weight)},
           {"connection", c},
           {"mode", job.connection.higgs ? "higgs" : "connection"},
           {"options", job.options}};
    return dump(j);
}

} // namespace parahoric
