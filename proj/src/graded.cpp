#include "parahoric/graded.hpp"
#include "parahoric/errors.hpp"

#include <set>

namespace parahoric {

const Rat kDepthInf = Rat(Int(1) << 62);

std::int64_t floor_i64(const Rat &r) { return to_i64(floor_rat(r)); }

std::int64_t ceil_i64(const Rat &r) { return -to_i64(floor_rat(-r)); }

Rat depth_val(const MatSeries &x, const Weight &w)
{
    Rat best = kDepthInf;
    bool any = false;
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b) {
            const Series &s = x.at(a, b);
            if (s.is_zero())
                continue;
            Rat d = w.grade(a, b) + s.val();
            if (!any || d < best)
                best = d;
            any = true;
        }
    return any ? best : depth_trunc(x, w);
}

Rat depth_trunc(const MatSeries &x, const Weight &w)
{
    Rat best = kDepthInf;
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b) {
            std::int64_t t = x.at(a, b).trunc();
            if (t == kInf)
                continue;
            Rat d = w.grade(a, b) + t;
            if (d < best)
                best = d;
        }
    return best;
}

MatSeries depth_truncated(const MatSeries &x, const Weight &w, const Rat &d)
{
    if (d >= kDepthInf)
        return x;
    MatSeries m = x;
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b)
            m.at(a, b) = x.at(a, b).truncated(ceil_i64(d - w.grade(a, b)));
    return m;
}

QMat depth_slice(const MatSeries &x, const Weight &w, const Rat &t)
{
    QMat s(x.n());
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b) {
            Rat k = t - w.grade(a, b);
            if (is_integer(k))
                s(a, b) = x.at(a, b).coeff(to_i64(k));
        }
    return s;
}

MatSeries depth_unslice(const QMat &y, const Weight &w, const Rat &t)
{
    std::size_t n = y.rows();
    MatSeries m(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (y(a, b) == 0)
                continue;
            Rat k = t - w.grade(a, b);
            if (!is_integer(k))
                fail(ErrorKind::InvariantViolation, "slice entry off the depth lattice");
            m.at(a, b).add_at(to_i64(k), y(a, b));
        }
    return m;
}

std::vector<Rat> depth_levels(const MatSeries &x, const Weight &w)
{
    std::set<Rat> lv;
    for (std::size_t a = 0; a < x.n(); ++a)
        for (std::size_t b = 0; b < x.n(); ++b)
            for (const auto &kv : x.at(a, b).terms())
                lv.insert(w.grade(a, b) + kv.first);
    return {lv.begin(), lv.end()};
}

} // namespace parahoric
