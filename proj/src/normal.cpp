#include "reduction_util.hpp"

#include <map>

namespace parahoric {

using namespace detail;

namespace {

QMat diag_weight(const Weight &w) { return QMat::diag(w.theta); }

// X -> (ad_M - s) X on the depth-s slice coordinates.
QMat shifted_ad(const QMat &m, const Rat &s, const QMat &x) { return bracket(m, x) - s * x; }

// The linear map Y -> [Y, X0] + (s - ad_Theta) Y, i.e. the first-order
// change of the depth-s slice under exp(Y).
QMat first_order(const QMat &y, const QMat &x0, const QMat &th, const Rat &s)
{
    return bracket(y, x0) + s * y - bracket(th, y);
}

} // namespace

BoalchResult boalch_normalize(const Weight &w, const Connection &a)
{
    std::size_t n = a.n();
    if (!filtration_member(w, a.mat.shifted(1), Filtration::parahoric))
        fail(ErrorKind::NotLogarithmic, "z A is not in the parahoric algebra");
    QMat th = diag_weight(w);
    QMat x0 = residue0(w, a.mat.shifted(1));
    QMat R = jordan_chevalley(x0).first;
    QMat M = R + th;
    BoalchResult out{a, {}, R};
    Rat step = lattice_step(w);
    Subalgebra full = Subalgebra::full(n);
    for (Rat s = step;; s += step) {
        MatSeries xh = out.B.mat.shifted(1);
        Rat lim = depth_trunc(xh, w);
        if (lim >= kDepthInf) {
            auto lv = depth_levels(xh, w);
            lim = lv.empty() ? Rat(0) : lv.back() + step;
        }
        if (s >= lim)
            break;
        QMat xs = depth_slice(xh, w, s);
        QMat rhs = shifted_ad(M, s, xs);
        if (rhs.is_zero())
            continue;
        Subalgebra dom = slice_domain(w, s, full);
        std::vector<Vec> cols;
        for (const auto &e : dom.basis())
            cols.push_back(flatten(shifted_ad(M, s, first_order(e, x0, th, s))));
        auto y = cols.empty() ? std::nullopt : solve(from_columns(cols, n * n), flatten(-rhs));
        if (!y)
            fail(ErrorKind::FieldExtensionNeeded, "no rational solution removes the non-resonant part");
        QMat ym = combine(dom, *y);
        apply(out.B, out.w, ExpFactor{depth_unslice(ym, w, s), w});
    }
    return out;
}

bool is_boalch_type(const Weight &w, const Connection &a, const QMat &R)
{
    MatSeries xh = a.mat.shifted(1);
    if (!filtration_member(w, xh, Filtration::parahoric))
        return false;
    QMat x0 = residue0(w, xh);
    if (jordan_chevalley(x0).first != R)
        return false;
    QMat M = R + diag_weight(w);
    for (const auto &s : depth_levels(xh, w))
        if (s > 0 && !shifted_ad(M, s, depth_slice(xh, w, s)).is_zero())
            return false;
    return true;
}

Reduced deligne_twist(const Connection &a, const QMat &R)
{
    std::size_t n = a.n();
    Reduced out{a, {}};
    QMat r = R;
    if (!R.is_diagonal()) {
        auto eb = rational_eigenbasis(R);
        if (!eb) {
            for (auto k : a.mat.exponents())
                if (k != -1 && !a.mat.coeff(k).is_zero())
                    fail(ErrorKind::FieldExtensionNeeded, "residue eigenvalues are not rational");
            return out;
        }
        QMat vi = inverse(eb->V);
        apply(out.B, out.w, ConstFactor{vi});
        r = vi * R * eb->V;
    }
    std::vector<Rat> ev = r.diagonal();
    std::vector<std::int64_t> xi(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        Rat lo = ev[p];
        for (std::size_t q = 0; q < n; ++q)
            if (is_integer(ev[q] - ev[p]) && ev[q] < lo)
                lo = ev[q];
        xi[p] = -to_i64(ev[p] - lo);
    }
    if (std::any_of(xi.begin(), xi.end(), [](auto v) { return v != 0; }))
        apply(out.B, out.w, CocharFactor{xi});
    return out;
}

} // namespace parahoric
