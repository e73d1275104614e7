#include "parahoric/parahoric.hpp"
#include "parahoric/errors.hpp"

#include <map>
#include <tuple>

namespace parahoric {

Rat grading(const Weight &w, std::size_t a, std::size_t b)
{
    if (a >= w.n() || b >= w.n())
        fail(ErrorKind::DimensionMismatch, "grading index out of range");
    return w.grade(a, b);
}

bool filtration_member(const Weight &w, const MatSeries &x, Filtration kind)
{
    if (w.n() != x.n())
        fail(ErrorKind::DimensionMismatch, "weight and matrix sizes differ");
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b)
            for (const auto &kv : x.at(a, b).terms()) {
                Rat d = w.grade(a, b) + kv.first;
                bool ok = kind == Filtration::parahoric ? d >= 0 : kind == Filtration::levi ? d == 0 : d > 0;
                if (!ok)
                    return false;
            }
    return true;
}

MatSeries residue(const Weight &w, const MatSeries &x)
{
    if (!filtration_member(w, x, Filtration::parahoric))
        fail(ErrorKind::NotParahoric, "residue of an element outside the parahoric algebra");
    std::size_t n = x.n();
    MatSeries r(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rat k = -w.grade(a, b);
            if (!is_integer(k))
                continue;
            std::int64_t e = to_i64(k);
            if (e >= x.at(a, b).trunc())
                r.at(a, b) = Series(x.at(a, b).trunc());
            else
                r.at(a, b).add_at(e, x.at(a, b).coeff(e));
        }
    return r;
}

QMat residue0(const Weight &w, const MatSeries &x) { return residue(w, x).coeff(0); }

ThetaRep theta_rep(const Weight &w, const Connection &a)
{
    if (w.n() != a.n())
        fail(ErrorKind::DimensionMismatch, "weight and connection sizes differ");
    std::size_t n = a.n();
    std::map<std::tuple<std::int64_t, Rat, std::int64_t>, QMat> groups;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Rat lam = w.grade(p, q);
            std::int64_t fl = to_i64(floor_rat(lam));
            for (const auto &[k, v] : a.mat.at(p, q).terms()) {
                auto key = std::make_tuple(k + fl, lam - fl, -fl);
                auto it = groups.find(key);
                if (it == groups.end())
                    it = groups.emplace(key, QMat(n)).first;
                it->second(p, q) = v;
            }
        }
    ThetaRep rep;
    rep.weight = w;
    bool first = true;
    for (auto &[key, m] : groups) {
        auto [r, l, i] = key;
        if (first || -r > rep.c)
            rep.c = -r;
        first = false;
        rep.terms.push_back(ThetaTerm{r, l, i, std::move(m)});
    }
    return rep;
}

MatSeries reassemble(const ThetaRep &rep, std::size_t n)
{
    MatSeries m(n);
    for (const auto &t : rep.terms)
        m.add_term(t.X, t.r + t.i);
    return m;
}

std::int64_t theta_order(const Weight &w, const Connection &a)
{
    if (a.mat.is_zero())
        fail(ErrorKind::ZeroConnection, "order of the zero connection");
    return theta_rep(w, a).c;
}

Weight iwahori_weight(std::size_t n, std::int64_t c_scale)
{
    if (c_scale < static_cast<std::int64_t>(n) || c_scale < 1)
        fail(ErrorKind::ScaleTooSmall, "scale must be at least the dimension");
    std::vector<Rat> t;
    for (std::size_t a = 1; a <= n; ++a) {
        Rat x(static_cast<long>(n - a), c_scale);
        x.canonicalize();
        t.push_back(x);
    }
    return Weight(t);
}

bool moy_prasad_member(const Weight &x, const Rat &s, const MatSeries &m)
{
    for (std::size_t a = 0; a < m.n(); ++a)
        for (std::size_t b = 0; b < m.n(); ++b)
            for (const auto &kv : m.at(a, b).terms())
                if (x.grade(a, b) + kv.first < s)
                    return false;
    return true;
}

Rat depth_at(const Weight &x, const Connection &a)
{
    if (a.mat.is_zero())
        return 0;
    Rat dv = depth_val(a.mat.shifted(1), x);
    return dv < 0 ? Rat(-dv) : Rat(0);
}

EquivarianceResult residue_equivariance_check(const Weight &w, const GaugeWord &g, const MatSeries &x)
{
    std::size_t n = x.n();
    if (!filtration_member(w, x, Filtration::parahoric))
        fail(ErrorKind::NotParahoric, "element outside the parahoric algebra");
    Rat dt = depth_trunc(x, w);
    Rat cap = dt >= kDepthInf ? Rat(32) : dt + 2;
    MatSeries h = MatSeries::identity(n);
    MatSeries hinv = MatSeries::identity(n);
    for (const auto &f : g.factors) {
        if (auto c = std::get_if<ConstFactor>(&f)) {
            if (!filtration_member(w, MatSeries::from_const(c->C), Filtration::parahoric))
                fail(ErrorKind::NotParahoric, "constant factor outside the parahoric group");
            QMat lv(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (w.grade(a, b) == 0)
                        lv(a, b) = c->C(a, b);
            h = lv * h;
            hinv = hinv * inverse(lv);
        } else if (auto e = std::get_if<ExpFactor>(&f)) {
            if (!filtration_member(w, e->X, Filtration::parahoric))
                fail(ErrorKind::NotParahoric, "exponential factor outside the parahoric algebra");
            MatSeries r = residue(w, e->X);
            h = exp_trunc(r, w, cap) * h;
            hinv = hinv * exp_trunc(-r, w, cap);
        } else if (auto c = std::get_if<CocharFactor>(&f)) {
            for (auto v : c->xi)
                if (v != 0)
                    fail(ErrorKind::NotParahoric, "cocharacter factor is not in a parahoric group");
        } else if (auto s = std::get_if<ShearFactor>(&f)) {
            if (s->n != 0 && !s->H.is_zero())
                fail(ErrorKind::NotParahoric, "shear factor is not in a parahoric group");
        } else if (auto r = std::get_if<RamifyFactor>(&f)) {
            if (r->b != 1)
                fail(ErrorKind::NotParahoric, "ramification is not in a parahoric group");
        }
    }
    Connection cx{x, 1, true};
    MatSeries lhs = residue(w, gauge(g, cx).mat);
    MatSeries rhs = residue(w, h * residue(w, x) * hinv);
    return {h, lhs.agrees(rhs)};
}

} // namespace parahoric
