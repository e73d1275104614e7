#include "reduction_util.hpp"

#include <map>
#include <numeric>
#include <tuple>

namespace parahoric {

using namespace detail;

bool borel_shape(const Connection &b, std::int64_t c_target)
{
    if (b.mat.is_zero() || plain_order(b) != c_target)
        return false;
    for (auto k : b.mat.exponents()) {
        QMat m = b.mat.coeff(k);
        if (k == -c_target ? !is_nilpotent(m) : !m.is_upper_triangular())
            return false;
    }
    return true;
}

namespace {

// 0, 1, -1, 2, -2, ... up to the box bound.
std::vector<std::int64_t> box_values(std::int64_t box)
{
    std::vector<std::int64_t> v{0};
    for (std::int64_t k = 1; k <= box; ++k) {
        v.push_back(k);
        v.push_back(-k);
    }
    return v;
}

// Cocharacters with last entry zero, first coordinate varying fastest.
std::vector<std::vector<std::int64_t>> cochar_box(std::size_t n, std::int64_t box)
{
    auto vals = box_values(box);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::size_t> idx(n > 0 ? n - 1 : 0, 0);
    for (;;) {
        std::vector<std::int64_t> xi;
        for (auto i : idx)
            xi.push_back(vals[i]);
        xi.push_back(0);
        out.push_back(xi);
        std::size_t i = 0;
        while (i < idx.size() && idx[i] == vals.size() - 1)
            idx[i++] = 0;
        if (i == idx.size())
            break;
        ++idx[i];
    }
    return out;
}

std::vector<QMat> permutation_matrices(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<QMat> out;
    do {
        QMat m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, p[i]) = 1;
        out.push_back(m);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

QMat vandermonde(std::size_t n)
{
    QMat v(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j) {
            Rat node(static_cast<long>(n + 1) - 2 * static_cast<long>(j + 1));
            Rat p = 1;
            for (std::size_t e = 0; e < a; ++e)
                p *= node;
            v(a, j) = p;
        }
    return v;
}

GaugeWord move_word(const QMat &c, const std::vector<std::int64_t> &xi)
{
    GaugeWord w;
    if (c != QMat::identity(c.rows()))
        w.push(ConstFactor{c});
    if (std::any_of(xi.begin(), xi.end(), [](auto v) { return v != 0; }))
        w.push(CocharFactor{xi});
    return w;
}

std::optional<NilpotentResult> try_nilpotent(const Connection &b)
{
    try {
        return reduce_nilpotent_center(Weight::zero(b.n()), b, true);
    } catch (const Error &) {
        return std::nullopt;
    }
}

} // namespace

Reduced borel_reduce(const Weight &w, const Connection &a, const Budget &budget)
{
    std::size_t n = a.n();
    GaugeWord norm = integer_normalizer(w);
    Connection a0 = gauge(norm, a);
    std::int64_t c = plain_order(a0);
    if (c <= 1)
        fail(ErrorKind::OrderTooLow, "order must exceed one");
    QMat lead = a0.mat.coeff(-c);
    auto xis = cochar_box(n, budget.search_box);
    auto perms = permutation_matrices(n);

    if (is_nilpotent(lead)) {
        if (borel_shape(a0, c))
            return {a0, norm};
        auto nc = try_nilpotent(a0);
        if (!nc)
            fail(ErrorKind::SearchExhausted, "no Borel form found");
        GaugeWord base = concat(norm, nc->w);
        if (borel_shape(nc->B, c))
            return {nc->B, base};
        for (const auto &p : perms)
            for (const auto &xi : xis) {
                GaugeWord m = move_word(p, xi);
                if (m.empty())
                    continue;
                Connection b = gauge(m, nc->B);
                if (borel_shape(b, c))
                    return {b, concat(base, m)};
            }
        fail(ErrorKind::SearchExhausted, "no Borel form found");
    }

    QMat S = jordan_chevalley(lead).first;
    QMat vi = QMat::identity(n);
    if (auto eb = rational_eigenbasis(S, true))
        vi = inverse(eb->V);
    std::vector<QMat> ts{QMat::identity(n)};
    QMat vd = vandermonde(n);
    if (det(vd) != 0)
        ts.push_back(vd);
    for (const auto &p : perms)
        if (p != QMat::identity(n))
            ts.push_back(p);
    for (const auto &t : ts)
        for (const auto &xi : xis) {
            GaugeWord m = move_word(t * vi, xi);
            Connection b = gauge(m, a0);
            if (borel_shape(b, c + 1))
                return {b, concat(norm, m)};
            if (b.mat.is_zero() || plain_order(b) != c + 1 || !is_nilpotent(b.mat.coeff(-c - 1)))
                continue;
            if (auto nc = try_nilpotent(b); nc && borel_shape(nc->B, c + 1))
                return {nc->B, concat(concat(norm, m), nc->w)};
        }
    fail(ErrorKind::SearchExhausted, "no Borel form found");
}

namespace {

std::int64_t series_cap(const MatSeries &g) { return g.exact() ? 32 : g.trunc(); }

// log(I + N) for N of positive valuation.
MatSeries log_unipotent(const MatSeries &nm, std::int64_t cap)
{
    std::size_t n = nm.n();
    std::int64_t lim = std::min(cap, nm.trunc());
    MatSeries out(n);
    MatSeries p = nm;
    for (std::int64_t k = 1;; ++k) {
        if (p.is_zero())
            return out;
        if (p.val() >= lim)
            break;
        Rat coef = make_rat(k % 2 == 1 ? 1 : -1, k);
        out = out + p.scaled(coef);
        p = (p * nm).truncated(lim);
    }
    return out.truncated(lim);
}

// h in GL_n(O) as the word exp(log(C^{-1} h)) followed by C = h(0).
GaugeWord integral_word(const MatSeries &h)
{
    std::size_t n = h.n();
    if (!h.is_zero() && h.val() < 0)
        fail(ErrorKind::InvariantViolation, "factor is not integral");
    QMat c = h.coeff(0);
    QMat ci = inverse(c);
    MatSeries nm = ci * h - MatSeries::identity(n);
    MatSeries x = log_unipotent(nm, series_cap(h));
    GaugeWord w;
    if (!x.is_zero())
        w.push(ExpFactor{x, Weight::zero(n)});
    if (c != QMat::identity(n))
        w.push(ConstFactor{c});
    return w;
}

GaugeWord conjugated(const GaugeWord &w, const std::vector<std::int64_t> &th)
{
    bool nz = std::any_of(th.begin(), th.end(), [](auto v) { return v != 0; });
    if (!nz || w.empty())
        return w;
    std::vector<std::int64_t> neg;
    for (auto v : th)
        neg.push_back(-v);
    GaugeWord out;
    out.push(CocharFactor{th});
    for (const auto &f : w.factors)
        out.push(f);
    out.push(CocharFactor{neg});
    return out;
}

void swap_rows(MatSeries &m, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < m.n(); ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(MatSeries &m, std::size_t i, std::size_t j)
{
    for (std::size_t r = 0; r < m.n(); ++r)
        std::swap(m.at(r, i), m.at(r, j));
}

} // namespace

BirkhoffFactors birkhoff_factor(const MatSeries &g, const Weight &w)
{
    std::size_t n = g.n();
    if (w.n() != n)
        fail(ErrorKind::DimensionMismatch, "weight and matrix sizes differ");
    std::vector<std::int64_t> th;
    for (std::size_t a = 0; a < n; ++a) {
        Rat d = w.theta[a] - w.theta[n - 1];
        if (!is_integer(d))
            fail(ErrorKind::UnsupportedWeight, "only integral weights are supported");
        th.push_back(to_i64(d));
    }
    BirkhoffFactors out;

    bool monomial_diag = true;
    for (std::size_t a = 0; a < n && monomial_diag; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a == b ? g.at(a, a).size() != 1 : !g.at(a, b).is_zero())
                monomial_diag = false;
    if (monomial_diag) {
        std::vector<Rat> cs;
        for (std::size_t a = 0; a < n; ++a) {
            out.xi.push_back(g.at(a, a).val());
            cs.push_back(g.at(a, a).coeff(g.at(a, a).val()));
        }
        QMat cd = QMat::diag(cs);
        if (cd != QMat::identity(n))
            out.g2.push(ConstFactor{cd});
        return out;
    }

    MatSeries gp(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            gp.at(a, b) = g.at(a, b).shifted(th[a] - th[b]);

    if (!gp.is_zero() && gp.val() >= 0 && det(gp.coeff(0)) != 0) {
        out.g1 = conjugated(integral_word(gp), th);
        out.xi.assign(n, 0);
        return out;
    }

    std::int64_t cap = series_cap(gp);
    MatSeries m = gp, e = MatSeries::identity(n), f = MatSeries::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::tuple<std::int64_t, std::size_t, std::size_t>> best;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                const Series &s = m.at(i, j);
                if (s.is_zero())
                    continue;
                auto cand = std::make_tuple(s.val(), i, j);
                if (!best || cand < *best)
                    best = cand;
            }
        if (!best)
            fail(ErrorKind::NotInvertible, "matrix is singular to the available precision");
        auto [v, pi, pj] = *best;
        swap_rows(m, k, pi);
        swap_rows(e, k, pi);
        swap_cols(m, k, pj);
        swap_cols(f, k, pj);
        Series pinv = series_inv(m.at(k, k), cap);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero())
                continue;
            Series q = m.at(i, k) * pinv;
            for (std::size_t c = 0; c < n; ++c) {
                m.at(i, c) = m.at(i, c) - q * m.at(k, c);
                e.at(i, c) = e.at(i, c) - q * e.at(k, c);
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m.at(k, j).is_zero())
                continue;
            Series q = pinv * m.at(k, j);
            for (std::size_t r = 0; r < n; ++r) {
                m.at(r, j) = m.at(r, j) - m.at(r, k) * q;
                f.at(r, j) = f.at(r, j) - f.at(r, k) * q;
            }
        }
        // Entries of row and column k other than the pivot are now zero below their precision.
        for (std::size_t i = k + 1; i < n; ++i) {
            m.at(i, k) = Series(m.at(i, k).trunc());
            m.at(k, i) = Series(m.at(k, i).trunc());
        }
    }
    MatSeries d(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t v = m.at(k, k).val();
        out.xi.push_back(v);
        d.at(k, k) = m.at(k, k).shifted(-v);
    }
    MatSeries left = mat_inverse(e, cap);
    MatSeries right = d * mat_inverse(f, cap);
    out.g1 = conjugated(integral_word(left), th);
    out.g2 = conjugated(integral_word(right), th);
    return out;
}

MatSeries birkhoff_product(const BirkhoffFactors &f, std::size_t n, std::int64_t cap)
{
    MatSeries z(n);
    for (std::size_t a = 0; a < n; ++a)
        z.at(a, a) = Series::monomial(1, f.xi.at(a));
    return word_element(f.g1, n, cap) * z * word_element(f.g2, n, cap);
}

bool nilpotency_transport_check(const Weight &w, const Connection &a, const MatSeries &g)
{
    std::size_t n = a.n();
    for (std::size_t i = 1; i < n; ++i)
        if (w.theta[i] != w.theta[0])
            fail(ErrorKind::PreconditionFailed, "weight is not fixed by the Weyl group");
    std::int64_t c = plain_order(a);
    if (c < 2)
        fail(ErrorKind::PreconditionFailed, "order must be at least two");
    if (!is_nilpotent(a.mat.coeff(-c)))
        fail(ErrorKind::PreconditionFailed, "leading residue is not nilpotent");
    BirkhoffFactors f = birkhoff_factor(g, w);
    GaugeWord word = f.g2;
    word.push(CocharFactor{f.xi});
    word = concat(word, f.g1);
    Connection b = gauge(word, a);
    if (b.mat.is_zero())
        return true;
    std::int64_t cb = plain_order(b);
    if (cb > c)
        fail(ErrorKind::PreconditionFailed, "gauge element raises the order");
    QMat chi = cb == c ? b.mat.coeff(-c) : QMat(n);
    return is_nilpotent(chi);
}

std::int64_t springer_bound(const Weight &w, const Connection &a, const GaugeWord &g)
{
    std::int64_t c = theta_order(w, gauge(g, a));
    std::int64_t n = static_cast<std::int64_t>(a.n());
    return (c + 1 + floor_i64(w.max_grade())) * n * n;
}

std::int64_t springer_tangent_dim(const Weight &w, const Connection &a, const GaugeWord &g, std::int64_t window)
{
    std::size_t n = a.n();
    if (window < 0 || window > 64)
        fail(ErrorKind::WindowTooLarge, "window must lie in [0, 64]");
    Connection ap = gauge(g, a);
    std::int64_t c = theta_order(w, ap);
    if (c < 0)
        fail(ErrorKind::PreconditionFailed, "order must be at least zero");
    std::int64_t lm = floor_i64(w.max_grade());
    if (ap.mat.trunc() != kInf && ap.mat.trunc() < -c + lm + window + 1)
        fail(ErrorKind::WindowTooLarge, "window exceeds the available precision");

    // Unknowns x_abk for k in [-window, window].
    std::size_t width = static_cast<std::size_t>(2 * window + 1);
    std::size_t nv = n * n * width;
    auto var = [&](std::size_t a0, std::size_t b0, std::int64_t k) {
        return (a0 * n + b0) * width + static_cast<std::size_t>(k + window);
    };
    std::vector<std::size_t> in_p;
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t b0 = 0; b0 < n; ++b0)
            for (std::int64_t k = -window; k <= window; ++k)
                if (w.grade(a0, b0) + k >= 0)
                    in_p.push_back(var(a0, b0, k));

    // Equations: coefficient of E_pq z^m in dX - [A', X] whenever its depth is below -c.
    std::map<std::tuple<std::size_t, std::size_t, std::int64_t>, std::map<std::size_t, Rat>> eqs;
    auto low = [&](std::size_t p, std::size_t q, std::int64_t m) { return w.grade(p, q) + m + c < 0; };
    auto exps = ap.mat.exponents();
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t b0 = 0; b0 < n; ++b0)
            for (std::int64_t k = -window; k <= window; ++k) {
                std::size_t v = var(a0, b0, k);
                if (k != 0 && low(a0, b0, k - 1))
                    eqs[{a0, b0, k - 1}][v] += Rat(static_cast<long>(k));
                for (auto j : exps) {
                    std::int64_t m = j + k;
                    QMat aj = ap.mat.coeff(j);
                    // -(A_j E_ab - E_ab A_j)
                    for (std::size_t p = 0; p < n; ++p) {
                        if (aj(p, a0) != 0 && low(p, b0, m))
                            eqs[{p, b0, m}][v] -= aj(p, a0);
                        if (aj(b0, p) != 0 && low(a0, p, m))
                            eqs[{a0, p, m}][v] += aj(b0, p);
                    }
                }
            }
    QMat sys(eqs.size(), nv);
    std::size_t r = 0;
    for (const auto &[key, row] : eqs) {
        for (const auto &[v, x] : row)
            sys(r, v) = x;
        ++r;
    }
    // dim K - dim (K cap P), with K the solution space and P the parahoric unknowns.
    std::int64_t rk = eqs.empty() ? 0 : static_cast<std::int64_t>(rank(sys));
    std::int64_t rk_p = 0;
    if (!eqs.empty() && !in_p.empty()) {
        QMat sp(eqs.size(), in_p.size());
        for (std::size_t i = 0; i < eqs.size(); ++i)
            for (std::size_t j = 0; j < in_p.size(); ++j)
                sp(i, j) = sys(i, in_p[j]);
        rk_p = static_cast<std::int64_t>(rank(sp));
    }
    std::int64_t np = static_cast<std::int64_t>(in_p.size());
    return (static_cast<std::int64_t>(nv) - rk) - (np - rk_p);
}

} // namespace parahoric
