#include "reduction_util.hpp"

namespace parahoric {

namespace detail {

Leading leading_datum(const Weight &w, const Connection &a)
{
    ThetaRep rep = theta_rep(w, a);
    if (rep.terms.empty())
        fail(ErrorKind::ZeroConnection, "connection has no terms");
    Rat l1 = 1;
    for (const auto &t : rep.terms)
        if (t.r == -rep.c && t.l < l1)
            l1 = t.l;
    Rat depth = Rat(-rep.c) + l1;
    return {rep.c, depth, depth_slice(a.mat, w, depth)};
}

// Upper end of the depth range worth visiting: the precision, or the last
// stored level for exact input.
static Rat level_limit(const Weight &w, const Connection &b)
{
    Rat t = depth_trunc(b.mat, w);
    if (t < kDepthInf)
        return t;
    auto lv = depth_levels(b.mat, w);
    return lv.empty() ? Rat(0) : lv.back() + Rat(1, 1000000);
}

void commute_levels(const Weight &w, Connection &b, GaugeWord &word, const QMat &S, const QMat &L,
                    const Rat &lead_depth, const Subalgebra &domain)
{
    Rat step = lattice_step(w);
    for (Rat s = step; lead_depth + s < level_limit(w, b); s += step) {
        QMat z = depth_slice(b.mat, w, lead_depth + s);
        if (bracket(S, z).is_zero())
            continue;
        QMat y = solve_commutator(S, L, z, slice_domain(w, s, domain));
        apply(b, word, ExpFactor{depth_unslice(y, w, s), w});
    }
}

void nilpotent_levels(const Weight &w, Connection &b, GaugeWord &word, const Sl2Triple &t,
                      const Rat &lead_depth, const Subalgebra &domain)
{
    Rat step = lattice_step(w);
    for (Rat s = step; lead_depth + s < level_limit(w, b); s += step) {
        QMat z = depth_slice(b.mat, w, lead_depth + s);
        if (bracket(t.Q, z).is_zero())
            continue;
        QMat y = solve_commutator(t.Q, t.P, z, slice_domain(w, s, domain));
        apply(b, word, ExpFactor{depth_unslice(y, w, s), w});
    }
}

// Conjugates the nonzero integer grades of the leading slice into the
// centralizer of S with depth-zero exponentials.
static void levi_step(const Weight &w, Connection &b, GaugeWord &word, const QMat &S, const Rat &t0,
                      const Subalgebra &domain)
{
    auto grades = nonzero_integer_grades(w);
    if (grades.empty())
        return;
    for (int iter = 0; iter < 64; ++iter) {
        QMat L = depth_slice(b.mat, w, t0);
        if (bracket(S, L).is_zero())
            return;
        for (const auto &mu : grades) {
            QMat L0 = grade_part(L, w, Rat(0));
            QMat Lmu = grade_part(L, w, mu);
            if (bracket(S, Lmu).is_zero())
                continue;
            QMat y = solve_commutator(S, L0, Lmu, Subalgebra::graded(w, mu).intersect(domain));
            if (y.is_zero())
                continue;
            apply(b, word, ExpFactor{depth_unslice(y, w, Rat(0)), w});
            L = depth_slice(b.mat, w, t0);
        }
    }
    fail(ErrorKind::Inconsistent, "leading term cannot be made to commute with its semisimple part");
}

// Levels at or past the depth precision are only partly known and are skipped.
static bool slices_in(const Weight &w, const Connection &b, const Subalgebra &sub, const Rat *skip)
{
    Rat limit = depth_trunc(b.mat, w);
    for (const auto &t : depth_levels(b.mat, w)) {
        if (t >= limit)
            break;
        if (skip && t == *skip)
            continue;
        if (!sub.contains(depth_slice(b.mat, w, t)))
            return false;
    }
    return true;
}

Subalgebra center_of(const Subalgebra &g)
{
    std::size_t n = g.ambient_n(), d = g.dim();
    if (d == 0)
        return g;
    QMat sys(d * n * n, d);
    for (std::size_t e = 0; e < d; ++e) {
        QMat ad = ad_matrix(g.basis()[e], g);
        for (std::size_t r = 0; r < n * n; ++r)
            for (std::size_t c = 0; c < d; ++c)
                sys(e * n * n + r, c) = ad(r, c);
    }
    std::vector<QMat> gens;
    for (const auto &v : kernel(sys))
        gens.push_back(combine(g, v));
    return Subalgebra(n, gens);
}

Subalgebra derived_of(const Subalgebra &g)
{
    std::vector<QMat> gens;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            gens.push_back(bracket(g.basis()[i], g.basis()[j]));
    return Subalgebra(g.ambient_n(), gens);
}

MatSeries derived_projection(const MatSeries &x, const Subalgebra &center, const Subalgebra &derived)
{
    std::size_t n = x.n();
    std::size_t dc = center.dim(), dd = derived.dim();
    std::vector<Vec> cols;
    for (const auto &b : center.basis())
        cols.push_back(flatten(b));
    for (const auto &b : derived.basis())
        cols.push_back(flatten(b));
    QMat sys = from_columns(cols, n * n);
    MatSeries out(n);
    std::int64_t t = x.trunc();
    for (auto k : x.exponents()) {
        if (k >= t)
            break;
        QMat c = x.coeff(k);
        if (dc + dd == 0) {
            if (!c.is_zero())
                fail(ErrorKind::InvariantViolation, "coefficient outside the working subalgebra");
            continue;
        }
        auto co = solve(sys, flatten(c));
        if (!co)
            fail(ErrorKind::InvariantViolation, "coefficient outside the working subalgebra");
        QMat d(n);
        for (std::size_t j = 0; j < dd; ++j)
            if ((*co)[dc + j] != 0)
                d += (*co)[dc + j] * derived.basis()[j];
        out.add_term(d, k);
    }
    out.set_trunc_all(t);
    return out;
}

} // namespace detail

using namespace detail;

CommuteResult reduce_semisimple_commute(const Weight &w, const Connection &a)
{
    std::int64_t c = theta_order(w, a);
    if (c <= 1)
        fail(ErrorKind::OrderTooLow, "order must exceed one");
    Rat t0 = -c;
    QMat L = depth_slice(a.mat, w, t0);
    QMat S = jordan_chevalley(grade_part(L, w, Rat(0))).first;
    if (S.is_zero())
        fail(ErrorKind::ZeroSemisimplePart, "semisimple part of the leading residue vanishes");
    Subalgebra full = Subalgebra::full(a.n());
    CommuteResult out{a, {}, S};
    levi_step(w, out.B, out.w, S, t0, full);
    commute_levels(w, out.B, out.w, S, depth_slice(out.B.mat, w, t0), t0, full);
    if (!slices_in(w, out.B, centralizer({S}, full), nullptr))
        fail(ErrorKind::InvariantViolation, "a slice fails to commute with the semisimple part");
    return out;
}

Reduced reduce_multi_semisimple(const Weight &w, const Connection &a, const std::vector<QMat> &s_list)
{
    if (s_list.empty())
        return {a, {}};
    std::size_t n = a.n();
    for (std::size_t i = 0; i < s_list.size(); ++i) {
        const QMat &s = s_list[i];
        if (s.rows() != n)
            fail(ErrorKind::DimensionMismatch, "semisimple list element size");
        if (grade_part(s, w, Rat(0)) != s || !is_semisimple(s))
            fail(ErrorKind::NonCommutingList, "list element is not a grade-zero semisimple matrix");
        for (std::size_t j = 0; j < i; ++j)
            if (!bracket(s, s_list[j]).is_zero())
                fail(ErrorKind::NonCommutingList, "list elements do not commute");
    }
    std::int64_t c = theta_order(w, a);
    if (c <= 1)
        fail(ErrorKind::OrderTooLow, "order must exceed one");
    Rat t0 = -c;
    QMat S = jordan_chevalley(grade_part(depth_slice(a.mat, w, t0), w, Rat(0))).first;
    QMat sum(n);
    for (const auto &s : s_list)
        sum += s;
    if (sum != S)
        fail(ErrorKind::PreconditionFailed, "list does not sum to the leading semisimple part");
    Subalgebra full = Subalgebra::full(n);
    Reduced out{a, {}};
    levi_step(w, out.B, out.w, S, t0, full);
    QMat L = depth_slice(out.B.mat, w, t0);
    for (const auto &s : s_list)
        if (!bracket(s, L).is_zero())
            fail(ErrorKind::PreconditionFailed, "leading slice does not commute with every list element");
    Subalgebra domain = full;
    for (const auto &s : s_list) {
        commute_levels(w, out.B, out.w, s, L, t0, domain);
        domain = centralizer({s}, domain);
    }
    if (!slices_in(w, out.B, domain, nullptr))
        fail(ErrorKind::InvariantViolation, "a slice leaves the joint centralizer");
    return out;
}

Reduced reduce_to_cartan(const Weight &w, const Connection &a, const std::vector<QMat> &s_list)
{
    std::size_t n = a.n();
    Subalgebra full = Subalgebra::full(n);
    Subalgebra t = centralizer(s_list, full);
    if (!t.is_abelian() || !(centralizer(t.basis(), full) == t))
        fail(ErrorKind::NotCartan, "joint centralizer is not a Cartan subalgebra");
    Reduced out = reduce_multi_semisimple(w, a, s_list);
    std::int64_t c = theta_order(w, a);
    QMat S(n);
    for (const auto &s : s_list)
        S += s;
    Rat t0 = -c;
    if (depth_slice(out.B.mat, w, t0) != S || depth_val(out.B.mat, w) < t0)
        fail(ErrorKind::InvariantViolation, "leading coefficient differs from the semisimple part");
    if (!slices_in(w, out.B, t, nullptr))
        fail(ErrorKind::InvariantViolation, "a coefficient leaves the Cartan subalgebra");
    return out;
}

NilpotentResult reduce_nilpotent_center(const Weight &w, const Connection &a, bool align_h)
{
    std::size_t n = a.n();
    std::int64_t c = theta_order(w, a);
    if (c <= 1)
        fail(ErrorKind::OrderTooLow, "order must exceed one");
    Leading lead = leading_datum(w, a);
    if (lead.datum.is_zero() || !is_nilpotent(lead.datum))
        fail(ErrorKind::NotNilpotentLeading, "leading datum is not a nonzero nilpotent");
    Subalgebra full = Subalgebra::full(n);
    Sl2Triple t = jacobson_morozov(lead.datum, slice_domain(w, -lead.depth, full), slice_domain(w, Rat(0), full));
    NilpotentResult out{a, {}, t, lead.depth};
    if (align_h && !t.H.is_diagonal() && nonzero_integer_grades(w).empty()) {
        // Eigenvectors of H, descending, inside each block of equal theta.
        QMat V(n);
        std::vector<bool> done(n, false);
        for (std::size_t a0 = 0; a0 < n; ++a0) {
            if (done[a0])
                continue;
            std::vector<std::size_t> blk;
            for (std::size_t b = a0; b < n; ++b)
                if (w.theta[b] == w.theta[a0]) {
                    blk.push_back(b);
                    done[b] = true;
                }
            QMat hb(blk.size());
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = 0; j < blk.size(); ++j)
                    hb(i, j) = t.H(blk[i], blk[j]);
            auto eb = rational_eigenbasis(hb, true);
            if (!eb)
                fail(ErrorKind::InvariantViolation, "neutral element is not diagonalizable over Q");
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = 0; j < blk.size(); ++j)
                    V(blk[i], blk[j]) = eb->V(i, j);
        }
        QMat Vi = inverse(V);
        apply(out.B, out.w, ConstFactor{Vi});
        out.triple = Sl2Triple{Vi * t.P * V, Vi * t.Q * V, Vi * t.H * V};
    }
    nilpotent_levels(w, out.B, out.w, out.triple, lead.depth, full);
    Subalgebra kq = centralizer({out.triple.Q}, full);
    if (!slices_in(w, out.B, kq, &out.lead_depth))
        fail(ErrorKind::InvariantViolation, "a non-leading slice leaves ker ad_Q");
    return out;
}

SplittingInvariants splitting_invariants(const Weight &w, const Connection &b, const Sl2Triple &t,
                                         const Subalgebra &ambient)
{
    std::size_t n = b.n();
    Subalgebra full = Subalgebra::full(n);
    QMat adH = ad_matrix(t.H, full);
    std::vector<Rat> hev = rational_roots(charpoly(t.H));
    std::vector<Rat> evs;
    for (const auto &x : hev)
        for (const auto &y : hev)
            if (std::find(evs.begin(), evs.end(), x - y) == evs.end())
                evs.push_back(x - y);
    std::sort(evs.begin(), evs.end());
    Subalgebra kq = centralizer({t.Q}, ambient);
    SplittingInvariants out{Rat(0), std::nullopt};
    bool any = false;
    for (const auto &e : evs) {
        QMat proj = eigen_projector(adH, evs, e);
        bool present = false;
        for (const auto &z : kq.basis())
            if (!is_zero_vec(proj * flatten(z)))
                present = true;
        if (present && (!any || e / 2 + 1 > out.Lambda)) {
            out.Lambda = e / 2 + 1;
            any = true;
        }
    }
    ThetaRep rep = theta_rep(w, b);
    std::int64_t c = rep.c;
    for (const auto &term : rep.terms) {
        Rat r = term.r;
        if (r < -c + 1 || r >= Rat(-c) + out.Lambda * (c - 1))
            continue;
        Vec x = flatten(term.X);
        for (const auto &e : evs) {
            if (e / 2 + 1 <= 0)
                continue;
            if (is_zero_vec(eigen_projector(adH, evs, e) * x))
                continue;
            Rat cand = (r + c) / (e / 2 + 1);
            if (!out.Upsilon || cand < *out.Upsilon)
                out.Upsilon = cand;
        }
    }
    return out;
}

SplittingInvariants splitting_invariants(const Weight &w, const Connection &b, const Sl2Triple &t)
{
    return splitting_invariants(w, b, t, Subalgebra::full(b.n()));
}

Reduced shear(const Connection &b, const Sl2Triple &t, std::int64_t cover, std::int64_t n)
{
    if (cover < 1)
        fail(ErrorKind::PreconditionFailed, "cover degree must be positive");
    GaugeWord w;
    if (cover > 1)
        w.push(RamifyFactor{cover});
    if (n != 0)
        w.push(ShearFactor{n, t.H});
    return {gauge(w, b), w};
}

} // namespace parahoric
