#include "parahoric/gauge.hpp"
#include "parahoric/errors.hpp"
#include "parahoric/lie.hpp"

#include <algorithm>

namespace parahoric {

namespace {

constexpr std::int64_t kExactCap = 32;
constexpr int kMaxExpTerms = 20000;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// Monomials of depth exactly zero.
MatSeries depth_zero_part(const MatSeries &x, const Weight &w)
{
    MatSeries m(x.n());
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b)
            for (const auto &[k, v] : x.at(a, b).terms())
                if (w.grade(a, b) + k == 0)
                    m.at(a, b).add_at(k, v);
    return m;
}

// zeta^e A zeta^{-e} + diag(e)/zeta for an integer diagonal e.
Connection twist(const Connection &a, const std::vector<std::int64_t> &e)
{
    std::size_t n = a.n();
    if (e.size() != n)
        fail(ErrorKind::DimensionMismatch, "twist exponent length");
    Connection out = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.mat.at(i, j) = a.mat.at(i, j).shifted(e[i] - e[j]);
    if (!a.higgs)
        for (std::size_t i = 0; i < n; ++i)
            out.mat.at(i, i).add_at(-1, Rat(e[i]));
    return out;
}

Connection conj_const(const Connection &a, const QMat &c)
{
    if (c.rows() != a.n() || c.cols() != a.n())
        fail(ErrorKind::DimensionMismatch, "constant gauge factor size");
    QMat ci = inverse(c);
    Connection out = a;
    out.mat = c * a.mat * ci;
    return out;
}

std::vector<std::int64_t> integer_vector(const std::vector<Rat> &v, std::int64_t scale)
{
    std::vector<std::int64_t> out;
    for (const auto &x : v) {
        Rat y = x * scale;
        if (!is_integer(y))
            fail(ErrorKind::InvalidWord, "shear exponent is not an integer");
        out.push_back(to_i64(y));
    }
    return out;
}

Connection apply_shear(const Connection &a, std::int64_t n, const QMat &h)
{
    if (h.rows() != a.n())
        fail(ErrorKind::DimensionMismatch, "shear matrix size");
    if (h.is_diagonal())
        return twist(a, integer_vector(h.diagonal(), n));
    auto eb = rational_eigenbasis(h);
    if (!eb)
        fail(ErrorKind::InvalidWord, "shear matrix is not diagonalizable over Q");
    Connection t = conj_const(a, inverse(eb->V));
    t = twist(t, integer_vector(eb->values, n));
    return conj_const(t, eb->V);
}

Rat exp_cap_for(const Connection &a, const Weight &w)
{
    Rat dv = depth_val(a.mat, w);
    Rat dt = depth_trunc(a.mat, w);
    Rat lift = dv < 0 ? Rat(-dv) : Rat(0);
    if (lift < 1)
        lift = 1;
    if (dt >= kDepthInf)
        return Rat(kExactCap) + lift + 1;
    return dt + lift + 1;
}

} // namespace

std::int64_t GaugeWord::ramification() const
{
    std::int64_t b = 1;
    for (const auto &f : factors)
        if (auto r = std::get_if<RamifyFactor>(&f))
            b *= r->b;
    return b;
}

GaugeWord pullback(const GaugeWord &w, std::int64_t b)
{
    GaugeWord out;
    for (const auto &f : w.factors) {
        std::visit(overloaded{
                       [&](const ExpFactor &e) { out.push(ExpFactor{ramify(e.X, b), e.theta.scaled(Rat(b))}); },
                       [&](const ConstFactor &c) { out.push(c); },
                       [&](const CocharFactor &c) { out.push(c); },
                       [&](const ShearFactor &s) { out.push(ShearFactor{s.n * b, s.H}); },
                       [&](const RamifyFactor &r) { out.push(r); },
                   },
                   f);
    }
    return out;
}

GaugeWord concat(const GaugeWord &u, const GaugeWord &v)
{
    if (v.empty() || !std::holds_alternative<RamifyFactor>(v.factors.front())) {
        GaugeWord out = u;
        for (const auto &f : v.factors)
            out.push(f);
        return out;
    }
    std::int64_t b = std::get<RamifyFactor>(v.factors.front()).b;
    std::int64_t bu = 1;
    GaugeWord rest;
    for (std::size_t i = 0; i < u.factors.size(); ++i) {
        if (i == 0 && std::holds_alternative<RamifyFactor>(u.factors[0]))
            bu = std::get<RamifyFactor>(u.factors[0]).b;
        else
            rest.push(u.factors[i]);
    }
    GaugeWord out;
    out.push(RamifyFactor{bu * b});
    for (const auto &f : pullback(rest, b).factors)
        out.push(f);
    for (std::size_t i = 1; i < v.factors.size(); ++i)
        out.push(v.factors[i]);
    return out;
}

GaugeWord inverse(const GaugeWord &w)
{
    GaugeWord out;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        std::visit(overloaded{
                       [&](const ExpFactor &e) { out.push(ExpFactor{-e.X, e.theta}); },
                       [&](const ConstFactor &c) { out.push(ConstFactor{inverse(c.C)}); },
                       [&](const CocharFactor &c) {
                           CocharFactor m = c;
                           for (auto &x : m.xi)
                               x = -x;
                           out.push(m);
                       },
                       [&](const ShearFactor &s) { out.push(ShearFactor{-s.n, s.H}); },
                       [&](const RamifyFactor &) {
                           fail(ErrorKind::InvalidWord, "a ramification factor has no inverse");
                       },
                   },
                   *it);
    }
    return out;
}

MatSeries exp_trunc(const MatSeries &x, const Weight &theta, const Rat &cap)
{
    std::size_t n = x.n();
    if (theta.n() != n)
        fail(ErrorKind::DimensionMismatch, "exponential weight size");
    MatSeries id = MatSeries::identity(n);
    if (x.is_zero())
        return depth_truncated(id, theta, depth_trunc(x, theta));
    Rat dv = depth_val(x, theta);
    if (dv < 0)
        fail(ErrorKind::NonConvergent, "exponential argument has negative depth");
    MatSeries r0 = depth_zero_part(x, theta);
    MatSeries p = r0;
    for (std::size_t k = 1; k < n && !p.is_zero(); ++k)
        p = p * r0;
    if (!p.is_zero())
        fail(ErrorKind::NonConvergent, "depth-zero part of the exponential argument is not nilpotent");
    Rat target = depth_trunc(x, theta);
    if (target >= kDepthInf)
        target = cap;
    MatSeries sum = id;
    MatSeries term = id;
    for (int k = 1; k <= kMaxExpTerms; ++k) {
        term = (term * x).scaled(Rat(1, k));
        term = depth_truncated(term, theta, target);
        if (term.is_zero() && term.trunc() == kInf)
            return sum;
        sum = sum + term;
        if (term.is_zero() || depth_val(term, theta) >= target)
            return depth_truncated(sum, theta, target);
    }
    fail(ErrorKind::NonConvergent, "exponential series did not reach the requested depth");
}

MatSeries exp_trunc(const MatSeries &x) { return exp_trunc(x, Weight::zero(x.n()), Rat(kExactCap)); }

Connection gauge_factor(const Factor &f, const Connection &a)
{
    return std::visit(
        overloaded{
            [&](const ExpFactor &e) {
                if (e.X.n() != a.n())
                    fail(ErrorKind::DimensionMismatch, "exponential factor size");
                Rat cap = exp_cap_for(a, e.theta);
                MatSeries g = exp_trunc(e.X, e.theta, cap);
                MatSeries gi = exp_trunc(-e.X, e.theta, cap);
                Connection out = a;
                out.mat = g * a.mat * gi;
                if (!a.higgs)
                    out.mat = out.mat + deriv(g) * gi;
                return out;
            },
            [&](const ConstFactor &c) { return conj_const(a, c.C); },
            [&](const CocharFactor &c) {
                std::vector<std::int64_t> e;
                for (auto x : c.xi)
                    e.push_back(x * a.b);
                return twist(a, e);
            },
            [&](const ShearFactor &s) { return apply_shear(a, s.n, s.H); },
            [&](const RamifyFactor &r) {
                if (r.b < 1)
                    fail(ErrorKind::InvalidWord, "ramification index must be positive");
                Connection out = a;
                out.mat = ramify(a.mat, r.b).shifted(r.b - 1).scaled(Rat(r.b));
                out.b = a.b * r.b;
                return out;
            },
        },
        f);
}

Connection gauge(const GaugeWord &w, const Connection &a)
{
    Connection cur = a;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i > 0 && std::holds_alternative<RamifyFactor>(w.factors[i]))
            fail(ErrorKind::InvalidWord, "ramification factor after the first position");
        cur = gauge_factor(w.factors[i], cur);
    }
    return cur;
}

MatSeries mat_inverse(const MatSeries &g, std::int64_t cap)
{
    std::size_t n = g.n();
    MatSeries a = g;
    MatSeries inv = MatSeries::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a.at(r, col).is_zero() && (piv == n || a.at(r, col).val() < a.at(piv, col).val()))
                piv = r;
        if (piv == n)
            fail(ErrorKind::NotInvertible, "matrix series is singular to the known precision");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Series pinv = series_inv(a.at(col, col), cap);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * pinv;
            inv.at(col, j) = inv.at(col, j) * pinv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero())
                continue;
            Series f = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Connection gauge_by(const MatSeries &g, const Connection &a)
{
    std::int64_t cap = a.trunc() == kInf ? kExactCap : a.trunc() + std::max<std::int64_t>(1, -a.mat.val()) + 1;
    MatSeries gi = mat_inverse(g, cap);
    Connection out = a;
    out.mat = g * a.mat * gi;
    if (!a.higgs)
        out.mat = out.mat + deriv(g) * gi;
    return out;
}

MatSeries word_element(const GaugeWord &w, std::size_t n, std::int64_t cap)
{
    MatSeries g = MatSeries::identity(n);
    for (const auto &f : w.factors) {
        MatSeries h = std::visit(
            overloaded{
                [&](const ExpFactor &e) { return exp_trunc(e.X, e.theta, Rat(cap)); },
                [&](const ConstFactor &c) { return MatSeries::from_const(c.C); },
                [&](const CocharFactor &c) {
                    MatSeries d(n);
                    for (std::size_t i = 0; i < n; ++i)
                        d.at(i, i) = Series::monomial(1, c.xi.at(i));
                    return d;
                },
                [&](const ShearFactor &s) {
                    auto eb = rational_eigenbasis(s.H);
                    if (!eb)
                        fail(ErrorKind::InvalidWord, "shear matrix is not diagonalizable over Q");
                    auto e = integer_vector(eb->values, s.n);
                    MatSeries d(n);
                    for (std::size_t i = 0; i < n; ++i)
                        d.at(i, i) = Series::monomial(1, e[i]);
                    return eb->V * d * inverse(eb->V);
                },
                [&](const RamifyFactor &) -> MatSeries {
                    fail(ErrorKind::InvalidWord, "a ramified word has no group element over K");
                },
            },
            f);
        g = h * g;
    }
    return g;
}

} // namespace parahoric
