#include "parahoric/lie.hpp"
#include "parahoric/errors.hpp"
#include "parahoric/poly.hpp"

#include <algorithm>

namespace parahoric {

static QMat rows_of(const std::vector<QMat> &gens, std::size_t n)
{
    QMat m(gens.size(), n * n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rows() != n || gens[i].cols() != n)
            fail(ErrorKind::DimensionMismatch, "generator size");
        for (std::size_t k = 0; k < n * n; ++k)
            m(i, k) = gens[i].data()[k];
    }
    return m;
}

Subalgebra::Subalgebra(std::size_t n, const std::vector<QMat> &gens) : n_(n)
{
    if (gens.empty())
        return;
    Rref r = rref(rows_of(gens, n));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        QMat b(n);
        for (std::size_t k = 0; k < n * n; ++k)
            b(k / n, k % n) = r.m(i, k);
        basis_.push_back(std::move(b));
    }
}

Subalgebra Subalgebra::full(std::size_t n)
{
    std::vector<QMat> g;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.push_back(QMat::unit(n, a, b));
    return Subalgebra(n, g);
}

Subalgebra Subalgebra::diagonal(std::size_t n)
{
    std::vector<QMat> g;
    for (std::size_t a = 0; a < n; ++a)
        g.push_back(QMat::unit(n, a, a));
    return Subalgebra(n, g);
}

Subalgebra Subalgebra::graded(const Weight &w, const Rat &g)
{
    std::size_t n = w.n();
    std::vector<QMat> gens;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (w.grade(a, b) == g)
                gens.push_back(QMat::unit(n, a, b));
    return Subalgebra(n, gens);
}

std::optional<Vec> Subalgebra::coords(const QMat &x) const
{
    if (x.rows() != n_ || x.cols() != n_)
        fail(ErrorKind::DimensionMismatch, "element size");
    if (basis_.empty())
        return x.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::vector<Vec> cols;
    for (const auto &b : basis_)
        cols.push_back(flatten(b));
    return solve(from_columns(cols, n_ * n_), flatten(x));
}

bool Subalgebra::contains(const QMat &x) const { return coords(x).has_value(); }

Subalgebra Subalgebra::intersect(const Subalgebra &o) const
{
    if (n_ != o.n_)
        fail(ErrorKind::DimensionMismatch, "intersection of subspaces of different algebras");
    std::size_t d1 = dim(), d2 = o.dim();
    if (d1 == 0 || d2 == 0)
        return Subalgebra(n_, {});
    QMat m(n_ * n_, d1 + d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t k = 0; k < n_ * n_; ++k)
            m(k, i) = basis_[i].data()[k];
    for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t k = 0; k < n_ * n_; ++k)
            m(k, d1 + j) = -o.basis_[j].data()[k];
    std::vector<QMat> gens;
    for (const auto &v : kernel(m)) {
        QMat x(n_);
        for (std::size_t i = 0; i < d1; ++i)
            if (v[i] != 0)
                x += v[i] * basis_[i];
        gens.push_back(std::move(x));
    }
    return Subalgebra(n_, gens);
}

bool Subalgebra::closed_under_bracket() const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!contains(bracket(basis_[i], basis_[j])))
                return false;
    return true;
}

bool Subalgebra::is_abelian() const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!bracket(basis_[i], basis_[j]).is_zero())
                return false;
    return true;
}

bool Subalgebra::operator==(const Subalgebra &o) const { return n_ == o.n_ && basis_ == o.basis_; }

bool sl2_relations_hold(const Sl2Triple &t)
{
    return bracket(t.H, t.P) == Rat(-2) * t.P && bracket(t.H, t.Q) == Rat(2) * t.Q &&
           bracket(t.P, t.Q) == -t.H;
}

QMat ad_matrix(const QMat &x, const Subalgebra &dom)
{
    std::vector<Vec> cols;
    for (const auto &d : dom.basis())
        cols.push_back(flatten(bracket(x, d)));
    return from_columns(cols, x.rows() * x.rows());
}

static Subalgebra kernel_in(const std::vector<QMat> &elems, const Subalgebra &ambient)
{
    std::size_t n = ambient.ambient_n(), d = ambient.dim();
    if (d == 0)
        return ambient;
    QMat sys(elems.size() * n * n, d);
    for (std::size_t e = 0; e < elems.size(); ++e) {
        QMat ad = ad_matrix(elems[e], ambient);
        for (std::size_t r = 0; r < n * n; ++r)
            for (std::size_t c = 0; c < d; ++c)
                sys(e * n * n + r, c) = ad(r, c);
    }
    std::vector<QMat> gens;
    for (const auto &v : kernel(sys)) {
        QMat x(n);
        for (std::size_t i = 0; i < d; ++i)
            if (v[i] != 0)
                x += v[i] * ambient.basis()[i];
        gens.push_back(std::move(x));
    }
    return Subalgebra(n, gens);
}

Subalgebra centralizer(const std::vector<QMat> &elems, const Subalgebra &ambient)
{
    for (const auto &e : elems)
        if (!ambient.contains(e))
            fail(ErrorKind::NotInAmbient, "centralizer argument outside the ambient subalgebra");
    return kernel_in(elems, ambient);
}

QMat solve_commutator(const QMat &S, const QMat &P, const QMat &B, const Subalgebra &domain)
{
    std::size_t n = S.rows();
    QMat rhs_m = -bracket(S, B);
    if (domain.dim() == 0) {
        if (rhs_m.is_zero())
            return QMat(n);
        fail(ErrorKind::Inconsistent, "commutator equation has no solution in a zero domain");
    }
    std::vector<Vec> cols;
    for (const auto &d : domain.basis())
        cols.push_back(flatten(bracket(S, bracket(d, P))));
    auto y = solve(from_columns(cols, n * n), flatten(rhs_m));
    if (!y)
        fail(ErrorKind::Inconsistent, "commutator equation [S, B + [Y, P]] = 0 is inconsistent");
    QMat Y(n);
    for (std::size_t i = 0; i < domain.dim(); ++i)
        if ((*y)[i] != 0)
            Y += (*y)[i] * domain.basis()[i];
    return Y;
}

std::pair<QMat, QMat> jordan_chevalley(const QMat &m)
{
    Poly q = squarefree_part(charpoly(m));
    Poly dq = derivative(q);
    QMat s = m;
    for (int it = 0; it < 256; ++it) {
        QMat qs = q.eval(s);
        if (qs.is_zero())
            return {s, m - s};
        s = s - qs * inverse(dq.eval(s));
    }
    fail(ErrorKind::NonConvergent, "Jordan-Chevalley iteration did not terminate");
}

bool is_semisimple(const QMat &m) { return squarefree_part(charpoly(m)).eval(m).is_zero(); }

static QMat combine(const Subalgebra &dom, const Vec &c)
{
    QMat x(dom.ambient_n());
    for (std::size_t i = 0; i < dom.dim(); ++i)
        if (c[i] != 0)
            x += c[i] * dom.basis()[i];
    return x;
}

Sl2Triple jacobson_morozov(const QMat &P, const Subalgebra &q_domain, const Subalgebra &h_domain)
{
    if (P.is_zero() || !is_nilpotent(P))
        fail(ErrorKind::NotNilpotent, "Jacobson-Morozov needs a nonzero nilpotent element");
    std::size_t n = P.rows();
    std::vector<Vec> cols;
    for (const auto &d : q_domain.basis())
        cols.push_back(flatten(bracket(P, bracket(P, d))));
    if (cols.empty())
        fail(ErrorKind::Inconsistent, "empty domain for the nilnegative element");
    auto y0 = solve(from_columns(cols, n * n), flatten(Rat(-2) * P));
    if (!y0)
        fail(ErrorKind::Inconsistent, "no element y with ad_P^2 y = -2P in the domain");
    QMat k = bracket(P, combine(q_domain, *y0));

    std::size_t d = q_domain.dim();
    QMat sys(2 * n * n, d);
    for (std::size_t i = 0; i < d; ++i) {
        const QMat &b = q_domain.basis()[i];
        QMat top = bracket(P, b);
        QMat bot = bracket(k, b) + Rat(2) * b;
        for (std::size_t r = 0; r < n * n; ++r) {
            sys(r, i) = top.data()[r];
            sys(n * n + r, i) = bot.data()[r];
        }
    }
    Vec rhs(2 * n * n);
    for (std::size_t r = 0; r < n * n; ++r)
        rhs[r] = k.data()[r];
    auto y = solve(sys, rhs);
    if (!y)
        fail(ErrorKind::Inconsistent, "no nilnegative completion in the domain");
    Sl2Triple t{P, combine(q_domain, *y), -k};
    if (!sl2_relations_hold(t) || !h_domain.contains(t.H))
        fail(ErrorKind::InvariantViolation, "Jacobson-Morozov output fails the sl2 relations");
    return t;
}

Sl2Triple jacobson_morozov(const QMat &P, const Subalgebra &ambient)
{
    if (!ambient.contains(P))
        fail(ErrorKind::NotInAmbient, "nilpositive element outside the ambient subalgebra");
    return jacobson_morozov(P, ambient, ambient);
}

std::optional<Eigenbasis> rational_eigenbasis(const QMat &m, bool descending)
{
    std::size_t n = m.rows();
    std::vector<Rat> ev = rational_roots(charpoly(m));
    if (descending)
        std::reverse(ev.begin(), ev.end());
    std::vector<Vec> cols;
    std::vector<Rat> vals;
    for (const auto &e : ev) {
        QMat shifted = m - e * QMat::identity(n);
        for (auto &v : kernel(shifted)) {
            cols.push_back(std::move(v));
            vals.push_back(e);
        }
    }
    if (cols.size() != n)
        return std::nullopt;
    return Eigenbasis{from_columns(cols, n), vals};
}

QMat eigen_projector(const QMat &map, const std::vector<Rat> &eigenvalues, const Rat &e)
{
    QMat id = QMat::identity(map.rows());
    QMat p = id;
    for (const auto &f : eigenvalues)
        if (f != e)
            p = p * ((1 / (e - f)) * (map - f * id));
    return p;
}

} // namespace parahoric
