#pragma once

#include "parahoric/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Dense rational matrix. Square instances are the constant Lie algebra elements.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    explicit QMat(std::size_t n) : QMat(n, n) {}
    static QMat identity(std::size_t n);
    static QMat unit(std::size_t n, std::size_t a, std::size_t b);
    static QMat diag(const std::vector<Rat> &d);
    static QMat from_rows(const std::vector<std::vector<Rat>> &rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    std::size_t n() const { return r_; }
    Rat &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Rat> &data() const { return a_; }

    bool is_zero() const;
    bool is_square() const { return r_ == c_; }
    bool is_diagonal() const;
    bool is_upper_triangular() const;
    QMat transpose() const;
    Rat trace() const;
    std::vector<Rat> diagonal() const;
    std::string str() const;

    QMat &operator+=(const QMat &o);
    QMat &operator-=(const QMat &o);
    bool operator==(const QMat &o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const QMat &o) const { return !(*this == o); }
    bool operator<(const QMat &o) const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

using ConstMat = QMat;
using Vec = std::vector<Rat>;

QMat operator+(QMat a, const QMat &b);
QMat operator-(QMat a, const QMat &b);
QMat operator-(const QMat &a);
QMat operator*(const QMat &a, const QMat &b);
QMat operator*(const Rat &k, const QMat &a);
Vec operator*(const QMat &a, const Vec &v);

QMat bracket(const QMat &x, const QMat &y);
QMat mat_pow(const QMat &a, unsigned k);
bool is_nilpotent(const QMat &a);

// Row-reduced echelon form with pivot columns, by exact Gauss-Jordan.
struct Rref {
    QMat m;
    std::vector<std::size_t> pivots;
};
Rref rref(QMat a);
std::size_t rank(const QMat &a);
// Particular solution of a x = b with every free variable zero.
std::optional<Vec> solve(const QMat &a, const Vec &b);
// Basis of the null space; one vector per free column, in column order.
std::vector<Vec> kernel(const QMat &a);
Rat det(const QMat &a);
// Throws NotInvertible.
QMat inverse(const QMat &a);

// Matrix whose columns are the given vectors.
QMat from_columns(const std::vector<Vec> &cols, std::size_t rows);
Vec flatten(const QMat &a);
QMat unflatten(const Vec &v, std::size_t n);

} // namespace parahoric
