#include "parahoric/matrix.hpp"
#include "parahoric/errors.hpp"

#include <sstream>

namespace parahoric {

QMat QMat::identity(std::size_t n)
{
    QMat m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMat QMat::unit(std::size_t n, std::size_t a, std::size_t b)
{
    QMat m(n);
    m(a, b) = 1;
    return m;
}

QMat QMat::diag(const std::vector<Rat> &d)
{
    QMat m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>> &rows)
{
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool QMat::is_zero() const
{
    for (const auto &x : a_)
        if (x != 0)
            return false;
    return true;
}

bool QMat::is_diagonal() const
{
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

bool QMat::is_upper_triangular() const
{
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < i && j < c_; ++j)
            if ((*this)(i, j) != 0)
                return false;
    return true;
}

QMat QMat::transpose() const
{
    QMat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Rat QMat::trace() const
{
    Rat t = 0;
    for (std::size_t i = 0; i < r_ && i < c_; ++i)
        t += (*this)(i, i);
    return t;
}

std::vector<Rat> QMat::diagonal() const
{
    std::vector<Rat> d;
    for (std::size_t i = 0; i < r_ && i < c_; ++i)
        d.push_back((*this)(i, i));
    return d;
}

std::string QMat::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j)
            os << (j ? ", " : "") << rat_str((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

QMat &QMat::operator+=(const QMat &o)
{
    if (r_ != o.r_ || c_ != o.c_)
        fail(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

QMat &QMat::operator-=(const QMat &o)
{
    if (r_ != o.r_ || c_ != o.c_)
        fail(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

bool QMat::operator<(const QMat &o) const
{
    if (r_ != o.r_)
        return r_ < o.r_;
    if (c_ != o.c_)
        return c_ < o.c_;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i])
            return a_[i] < o.a_[i];
    return false;
}

QMat operator+(QMat a, const QMat &b) { return a += b; }
QMat operator-(QMat a, const QMat &b) { return a -= b; }
QMat operator-(const QMat &a) { return Rat(-1) * a; }

QMat operator*(const QMat &a, const QMat &b)
{
    if (a.cols() != b.rows())
        fail(ErrorKind::DimensionMismatch, "matrix product");
    QMat m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat &x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    m(i, j) += x * b(k, j);
        }
    return m;
}

QMat operator*(const Rat &k, const QMat &a)
{
    QMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = k * a(i, j);
    return m;
}

Vec operator*(const QMat &a, const Vec &v)
{
    if (a.cols() != v.size())
        fail(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                out[i] += a(i, j) * v[j];
    return out;
}

QMat bracket(const QMat &x, const QMat &y) { return x * y - y * x; }

QMat mat_pow(const QMat &a, unsigned k)
{
    QMat r = QMat::identity(a.rows());
    for (unsigned i = 0; i < k; ++i)
        r = r * a;
    return r;
}

bool is_nilpotent(const QMat &a) { return mat_pow(a, static_cast<unsigned>(a.rows())).is_zero(); }

Rref rref(QMat a)
{
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(row, j));
        Rat inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a(row, j) != 0)
                    a(i, j) -= f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.m = std::move(a);
    return out;
}

std::size_t rank(const QMat &a) { return rref(a).pivots.size(); }

std::optional<Vec> solve(const QMat &a, const Vec &b)
{
    if (b.size() != a.rows())
        fail(ErrorKind::DimensionMismatch, "right-hand side length");
    QMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols())
        return std::nullopt;
    Vec x(a.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        x[r.pivots[k]] = r.m(k, a.cols());
    return x;
}

std::vector<Vec> kernel(const QMat &a)
{
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det(const QMat &a)
{
    if (!a.is_square())
        fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    QMat m = a;
    Rat d = 1;
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rat f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

QMat inverse(const QMat &a)
{
    if (!a.is_square())
        fail(ErrorKind::NotInvertible, "non-square matrix");
    std::size_t n = a.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1)
        fail(ErrorKind::NotInvertible, "singular matrix " + a.str());
    QMat inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r.m(i, n + j);
    return inv;
}

QMat from_columns(const std::vector<Vec> &cols, std::size_t rows)
{
    QMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    return m;
}

Vec flatten(const QMat &a) { return a.data(); }

QMat unflatten(const Vec &v, std::size_t n)
{
    QMat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = v[i * n + j];
    return m;
}

} // namespace parahoric
