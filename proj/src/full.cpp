#include "reduction_util.hpp"

#include <numeric>
#include <tuple>

namespace parahoric {

using namespace detail;

const char *form_class_name(FormClass f)
{
    switch (f) {
    case FormClass::logarithmic:
        return "logarithmic";
    case FormClass::cartan_irregular:
        return "cartan_irregular";
    case FormClass::boalch:
        return "boalch";
    case FormClass::failed:
        break;
    }
    return "failed";
}

std::int64_t plain_order(const Connection &a)
{
    if (a.mat.is_zero())
        fail(ErrorKind::ZeroConnection, "order of the zero connection");
    return -a.mat.val();
}

namespace detail {

GaugeWord integer_normalizer(const Weight &w)
{
    if (!w.is_integer())
        fail(ErrorKind::NotIntegerWeight, "weight must be integral");
    GaugeWord g;
    if (w.is_zero())
        return g;
    std::vector<std::int64_t> xi;
    for (std::size_t a = 0; a < w.n(); ++a)
        xi.push_back(to_i64(w.theta[a] - w.theta.back()));
    bool nz = std::any_of(xi.begin(), xi.end(), [](auto v) { return v != 0; });
    if (nz)
        g.push(CocharFactor{xi});
    return g;
}

std::int64_t default_ramification_cap(std::size_t n)
{
    Int l = 1;
    for (std::size_t k = 2; k <= n; ++k)
        l = lcm(l, Int(static_cast<long>(k)));
    Int cap = 1;
    for (std::size_t k = 1; k < n; ++k)
        cap *= 2 * l;
    return cap.fits_slong_p() ? cap.get_si() : std::int64_t(1) << 40;
}

} // namespace detail

static Rat slope_of(std::int64_t c, std::int64_t b) { return c <= 1 ? Rat(0) : make_rat(c - 1, b); }

ReductionReport full_reduce(const Weight &w, const Connection &a, const Budget &budget)
{
    std::size_t n = a.n();
    if (w.n() != n)
        fail(ErrorKind::DimensionMismatch, "weight and connection sizes differ");
    GaugeWord cert = integer_normalizer(w);
    Connection B = gauge(cert, a);
    Weight w0 = Weight::zero(n);

    std::int64_t c0 = B.mat.is_zero() ? 1 : std::max<std::int64_t>(1, plain_order(B));
    std::int64_t max_iter = budget.max_iterations > 0 ? budget.max_iterations
                                                      : 4 * c0 * static_cast<std::int64_t>(n * n);
    std::int64_t max_ram = budget.max_ramification > 0 ? budget.max_ramification : default_ramification_cap(n);

    ReductionReport rep;
    Subalgebra g = Subalgebra::full(n);
    std::optional<std::pair<Rat, std::size_t>> prev;
    for (std::int64_t iter = 0;; ++iter) {
        Subalgebra z = center_of(g), d = derived_of(g);
        Connection ap{derived_projection(B.mat, z, d), B.b, B.higgs};
        if (ap.mat.is_zero()) {
            if (ap.mat.trunc() < -1)
                fail(ErrorKind::BudgetExceeded, "precision exhausted before the order could be read");
            break;
        }
        std::int64_t c = plain_order(ap);
        if (c <= 1)
            break;
        std::pair<Rat, std::size_t> tup{make_rat(c - 1, B.b), d.dim()};
        if (prev && !(tup < *prev))
            fail(ErrorKind::NoProgress, "invariant tuple did not decrease");
        prev = tup;
        if (iter >= max_iter)
            fail(ErrorKind::BudgetExceeded, "iteration cap reached");

        QMat L = ap.mat.coeff(-c);
        GaugeWord step;
        if (!is_nilpotent(L)) {
            QMat S = jordan_chevalley(L).first;
            commute_levels(w0, B, step, S, L, Rat(-c), d);
            cert = concat(cert, step);
            g = centralizer({S}, g);
            rep.progress_log.push_back({"semisimple", tup.first, tup.second, c, B.b});
            continue;
        }
        Sl2Triple t = jacobson_morozov(L, g);
        nilpotent_levels(w0, B, step, t, Rat(-c), d);
        cert = concat(cert, step);
        Connection ap2{derived_projection(B.mat, z, d), B.b, B.higgs};
        SplittingInvariants inv = splitting_invariants(w0, ap2, t, g);
        std::int64_t cover, nsh;
        if (!inv.Upsilon || *inv.Upsilon >= c - 1) {
            cover = 2;
            nsh = -c + 1;
        } else {
            Int den = inv.Upsilon->get_den();
            cover = 2 * den.get_si();
            nsh = -to_i64(*inv.Upsilon * den);
        }
        if (B.b * cover > max_ram)
            fail(ErrorKind::BudgetExceeded, "ramification cap reached");
        Reduced sh = shear(B, t, cover, nsh);
        B = sh.B;
        cert = concat(cert, sh.w);
        rep.progress_log.push_back({"shear", tup.first, tup.second, c, B.b});
    }

    rep.final = B;
    rep.ramification = B.b;
    rep.certificate = cert;
    rep.effective_trunc = B.mat.trunc();
    std::int64_t cf = 0;
    if (B.mat.is_zero()) {
        if (B.mat.trunc() < -1)
            fail(ErrorKind::BudgetExceeded, "precision exhausted before the order could be read");
    } else {
        cf = plain_order(B);
    }
    rep.slope = slope_of(cf, B.b);
    rep.form_class = cf <= 1 ? FormClass::logarithmic : FormClass::cartan_irregular;
    if (budget.boalch && rep.form_class == FormClass::logarithmic) {
        BoalchResult br = boalch_normalize(w0, B);
        rep.final = br.B;
        rep.certificate = concat(cert, br.w);
        rep.effective_trunc = br.B.mat.trunc();
        rep.form_class = FormClass::boalch;
    }
    return rep;
}

Rat slope(const Connection &a, const Budget &budget)
{
    if (a.mat.is_zero())
        fail(ErrorKind::ZeroConnection, "slope of the zero connection");
    return full_reduce(Weight::zero(a.n()), a, budget).slope;
}

static bool logarithmic_at(const Weight &w, const Connection &a)
{
    return filtration_member(w, a.mat.shifted(1), Filtration::parahoric);
}

// Apartment weights with theta_n = 0 and common denominator q <= n, zero first.
static std::optional<Weight> search_log_weight(const Connection &a)
{
    std::size_t n = a.n();
    Weight zero = Weight::zero(n);
    if (logarithmic_at(zero, a))
        return zero;
    if (n < 2 || a.mat.is_zero())
        return std::nullopt;
    std::int64_t ord = std::max<std::int64_t>(0, plain_order(a));
    std::int64_t budget = 200000;
    for (std::int64_t q = 1; q <= static_cast<std::int64_t>(n); ++q) {
        // Numerators 0, 1, -1, 2, -2, ... so small weights come first.
        std::int64_t bound = q * (ord + 1);
        std::vector<std::int64_t> vals{0};
        for (std::int64_t k = 1; k <= bound; ++k) {
            vals.push_back(k);
            vals.push_back(-k);
        }
        std::vector<std::size_t> idx(n - 1, 0);
        while (budget-- > 0) {
            std::vector<Rat> th;
            for (auto i : idx)
                th.push_back(make_rat(vals[i], q));
            th.push_back(0);
            Weight w(th);
            if (w.denominator() == q && logarithmic_at(w, a))
                return w;
            std::size_t i = 0;
            while (i < idx.size() && idx[i] == vals.size() - 1)
                idx[i++] = 0;
            if (i == idx.size())
                break;
            ++idx[i];
        }
        if (budget <= 0)
            break;
    }
    return std::nullopt;
}

RegularityVerdict is_regular(const Connection &a, const Budget &budget)
{
    if (a.higgs)
        fail(ErrorKind::PreconditionFailed, "regularity is defined for connections, not Higgs fields");
    ReductionReport r = full_reduce(Weight::zero(a.n()), a, budget);
    RegularityVerdict v;
    v.regular = r.slope == 0;
    if (!v.regular)
        return v;
    if (auto w = search_log_weight(a)) {
        v.witness_weight = *w;
        v.witness_gauge = GaugeWord{};
    } else {
        v.witness_weight = Weight::zero(a.n());
        v.witness_gauge = r.certificate;
    }
    return v;
}

bool verify_regularity_witness(const Connection &a, const RegularityVerdict &v)
{
    if (!v.regular || !v.witness_weight || !v.witness_gauge)
        return false;
    return logarithmic_at(*v.witness_weight, gauge(*v.witness_gauge, a));
}

RelativeRegularity relative_regularity_check(const Connection &a, const Budget &budget)
{
    std::size_t n = a.n();
    if (a.mat.is_zero())
        fail(ErrorKind::ZeroConnection, "relative regularity of the zero connection");
    RelativeRegularity out;
    out.weight = Weight::zero(n);
    out.template_q = MatSeries(n);
    RegularityVerdict rv = is_regular(a, budget);
    if (rv.regular) {
        out.verdict = true;
        out.weight = *rv.witness_weight;
        out.certificate = *rv.witness_gauge;
        out.reduced = gauge(out.certificate, a);
        return out;
    }
    std::int64_t c = plain_order(a);
    std::vector<Rat> dv;
    for (std::size_t k = 1; k <= n; ++k)
        dv.push_back(Rat(static_cast<long>(k)));
    QMat D = QMat::diag(dv);
    for (std::int64_t r = -c; r <= -2; ++r)
        out.template_q.add_term(D, r);
    Connection B{out.template_q + a.mat, a.b, a.higgs};
    // Conjugate the leading coefficient onto D by unipotent constants, one
    // triangular half at a time; a leading term that does not reach D fails.
    std::vector<QMat> gens;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q)
                gens.push_back(QMat::unit(n, p, q));
    Subalgebra offdiag(n, gens);
    for (int iter = 0; iter < 32 && B.mat.coeff(-c) != D; ++iter) {
        QMat N = B.mat.coeff(-c) - D;
        QMat y;
        try {
            y = solve_commutator(D, D, N, offdiag);
        } catch (const Error &) {
            return out;
        }
        if (y.is_zero())
            break;
        QMat up(n), lo(n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                (p < q ? up : lo)(p, q) = y(p, q);
        Weight w0 = Weight::zero(n);
        if (!up.is_zero())
            apply(B, out.certificate, ExpFactor{MatSeries::from_const(up), w0});
        if (!lo.is_zero())
            apply(B, out.certificate, ExpFactor{MatSeries::from_const(lo), w0});
    }
    if (B.mat.coeff(-c) != D)
        return out;
    Reduced red = reduce_to_cartan(Weight::zero(n), B, {D});
    out.certificate = concat(out.certificate, red.w);
    out.reduced = red.B;
    out.verdict = true;
    for (std::int64_t r = -c + 1; r <= -2; ++r)
        if (red.B.mat.coeff(r) != D)
            out.verdict = false;
    return out;
}

} // namespace parahoric
