#pragma once

#include "parahoric/reduction.hpp"

#include <doctest.h>

#include <tuple>
#include <vector>

namespace th {

using namespace parahoric;

inline QMat E(std::size_t n, std::size_t a, std::size_t b) { return QMat::unit(n, a, b); }

inline QMat diag(std::vector<long> d)
{
    std::vector<Rat> r;
    for (long x : d)
        r.push_back(Rat(x));
    return QMat::diag(r);
}

inline QMat qmat(std::vector<std::vector<Rat>> rows)
{
    QMat m(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows.size(); ++b)
            m(a, b) = rows[a][b];
    return m;
}

// Terms (row, col, exponent, value), zero-based indices.
inline MatSeries mat(std::size_t n, const std::vector<std::tuple<int, int, std::int64_t, Rat>> &t,
                     std::int64_t trunc = kInf)
{
    MatSeries m(n);
    for (const auto &[a, b, k, v] : t)
        m.at(a, b).add_at(k, v);
    m.set_trunc_all(trunc);
    return m;
}

inline Connection conn(std::size_t n, const std::vector<std::tuple<int, int, std::int64_t, Rat>> &t,
                       std::int64_t trunc = kInf)
{
    return {mat(n, t, trunc), 1, false};
}

inline Series series(const std::vector<std::pair<std::int64_t, Rat>> &t, std::int64_t trunc = kInf)
{
    Series s(trunc);
    for (const auto &[k, v] : t)
        s.add_at(k, v);
    return s;
}

inline Rat q(const char *s) { return parse_rat(s); }

} // namespace th

namespace doctest {
template <> struct StringMaker<parahoric::MatSeries> {
    static String convert(const parahoric::MatSeries &m) { return m.str().c_str(); }
};
template <> struct StringMaker<parahoric::QMat> {
    static String convert(const parahoric::QMat &m) { return parahoric::MatSeries::from_const(m).str().c_str(); }
};
} // namespace doctest
