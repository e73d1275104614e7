#include "parahoric/matseries.hpp"
#include "parahoric/errors.hpp"

#include <algorithm>
#include <sstream>

namespace parahoric {

MatSeries::MatSeries(std::size_t n, std::int64_t trunc) : n_(n), e_(n * n, Series(trunc))
{
    if (n == 0)
        fail(ErrorKind::DimensionMismatch, "matrix dimension must be positive");
}

MatSeries MatSeries::identity(std::size_t n) { return from_const(QMat::identity(n)); }

MatSeries MatSeries::from_const(const QMat &c, std::int64_t k, std::int64_t trunc)
{
    MatSeries m(c.rows(), trunc);
    m.add_term(c, k);
    return m;
}

std::int64_t MatSeries::trunc() const
{
    std::int64_t t = kInf;
    for (const auto &s : e_)
        t = std::min(t, s.trunc());
    return t;
}

std::int64_t MatSeries::val() const
{
    std::int64_t v = kInf;
    bool any = false;
    for (const auto &s : e_)
        if (!s.is_zero()) {
            v = std::min(v, s.val());
            any = true;
        }
    return any ? v : trunc();
}

bool MatSeries::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const Series &s) { return s.is_zero(); });
}

QMat MatSeries::coeff(std::int64_t k) const
{
    QMat c(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            c(a, b) = at(a, b).coeff(k);
    return c;
}

std::set<std::int64_t> MatSeries::exponents() const
{
    std::set<std::int64_t> out;
    for (const auto &s : e_)
        for (const auto &kv : s.terms())
            out.insert(kv.first);
    return out;
}

void MatSeries::add_term(const QMat &c, std::int64_t k)
{
    if (c.rows() != n_ || c.cols() != n_)
        fail(ErrorKind::DimensionMismatch, "matrix term size");
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            at(a, b).add_at(k, c(a, b));
}

void MatSeries::set_trunc_all(std::int64_t t)
{
    for (auto &s : e_)
        s = s.truncated(t);
}

MatSeries MatSeries::truncated(std::int64_t t) const
{
    MatSeries m = *this;
    m.set_trunc_all(t);
    return m;
}

MatSeries MatSeries::shifted(std::int64_t k) const
{
    MatSeries m = *this;
    for (auto &s : m.e_)
        s = s.shifted(k);
    return m;
}

MatSeries MatSeries::scaled(const Rat &k) const
{
    MatSeries m = *this;
    for (auto &s : m.e_)
        s = s.scaled(k);
    return m;
}

bool MatSeries::agrees(const MatSeries &o) const
{
    if (n_ != o.n_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].agrees(o.e_[i]))
            return false;
    return true;
}

std::string MatSeries::str(const std::string &var) const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t a = 0; a < n_; ++a) {
        os << (a ? ", [" : "[");
        for (std::size_t b = 0; b < n_; ++b)
            os << (b ? ", " : "") << at(a, b).str(var);
        os << "]";
    }
    os << "]";
    return os.str();
}

static void same_n(const MatSeries &a, const MatSeries &b)
{
    if (a.n() != b.n())
        fail(ErrorKind::DimensionMismatch, "matrix series sizes differ");
}

MatSeries operator+(const MatSeries &a, const MatSeries &b)
{
    same_n(a, b);
    MatSeries m(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

MatSeries operator-(const MatSeries &a, const MatSeries &b)
{
    same_n(a, b);
    MatSeries m(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

MatSeries operator-(const MatSeries &a) { return a.scaled(Rat(-1)); }

MatSeries operator*(const MatSeries &a, const MatSeries &b)
{
    same_n(a, b);
    std::size_t n = a.n();
    MatSeries m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Series acc;
            for (std::size_t k = 0; k < n; ++k)
                acc = acc + a.at(i, k) * b.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

MatSeries operator*(const QMat &a, const MatSeries &b) { return MatSeries::from_const(a) * b; }

MatSeries operator*(const MatSeries &a, const QMat &b) { return a * MatSeries::from_const(b); }

MatSeries bracket(const MatSeries &x, const MatSeries &y) { return x * y - y * x; }

MatSeries deriv(const MatSeries &a)
{
    MatSeries m(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            m.at(i, j) = series_deriv(a.at(i, j));
    return m;
}

MatSeries ramify(const MatSeries &a, std::int64_t b)
{
    MatSeries m(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            m.at(i, j) = ramify(a.at(i, j), b);
    return m;
}

} // namespace parahoric
