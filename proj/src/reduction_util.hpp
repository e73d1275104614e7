#pragma once

#include "parahoric/errors.hpp"
#include "parahoric/poly.hpp"
#include "parahoric/reduction.hpp"

#include <algorithm>

namespace parahoric::detail {

inline Rat lattice_step(const Weight &w) { return Rat(Int(1), w.denominator()); }

// Span of the E_ab that carry monomials at depth s, intersected with amb.
inline Subalgebra slice_domain(const Weight &w, const Rat &s, const Subalgebra &amb)
{
    std::vector<QMat> gens;
    std::size_t n = w.n();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (is_integer(s - w.grade(a, b)))
                gens.push_back(QMat::unit(n, a, b));
    return Subalgebra(n, gens).intersect(amb);
}

inline QMat grade_part(const QMat &x, const Weight &w, const Rat &mu)
{
    QMat out(x.rows());
    for (std::size_t a = 0; a < x.rows(); ++a)
        for (std::size_t b = 0; b < x.cols(); ++b)
            if (w.grade(a, b) == mu)
                out(a, b) = x(a, b);
    return out;
}

inline std::vector<Rat> nonzero_integer_grades(const Weight &w)
{
    std::vector<Rat> out;
    for (std::size_t a = 0; a < w.n(); ++a)
        for (std::size_t b = 0; b < w.n(); ++b) {
            Rat g = w.grade(a, b);
            if (g != 0 && is_integer(g) && std::find(out.begin(), out.end(), g) == out.end())
                out.push_back(g);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline void apply(Connection &b, GaugeWord &w, const Factor &f)
{
    b = gauge_factor(f, b);
    w.push(f);
}

inline bool is_zero_vec(const Vec &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat &x) { return x == 0; });
}

inline QMat combine(const Subalgebra &dom, const Vec &c)
{
    QMat x(dom.ambient_n());
    for (std::size_t i = 0; i < dom.dim(); ++i)
        if (c[i] != 0)
            x += c[i] * dom.basis()[i];
    return x;
}

// Leading datum of the canonical representation: minimal sharp level at r = -c.
struct Leading {
    std::int64_t c;
    Rat depth;
    QMat datum;
};
Leading leading_datum(const Weight &w, const Connection &a);

// Makes every depth slice above lead_depth commute with S, using exponentials of
// elements of domain. L is the slice at lead_depth.
void commute_levels(const Weight &w, Connection &b, GaugeWord &word, const QMat &S, const QMat &L,
                    const Rat &lead_depth, const Subalgebra &domain);
// Puts every depth slice above lead_depth into ker ad_Q.
void nilpotent_levels(const Weight &w, Connection &b, GaugeWord &word, const Sl2Triple &t,
                      const Rat &lead_depth, const Subalgebra &domain);

Subalgebra center_of(const Subalgebra &g);
Subalgebra derived_of(const Subalgebra &g);
// Component of every coefficient along the derived algebra, splitting off the center.
MatSeries derived_projection(const MatSeries &x, const Subalgebra &center, const Subalgebra &derived);

// Cocharacter word moving an integral weight to zero. Throws NotIntegerWeight.
GaugeWord integer_normalizer(const Weight &w);
std::int64_t default_ramification_cap(std::size_t n);

} // namespace parahoric::detail
