#pragma once

#include "parahoric/matrix.hpp"
#include "parahoric/series.hpp"

#include <set>
#include <string>
#include <vector>

namespace parahoric {

// n x n matrix of truncated Laurent series. Each entry keeps its own truncation;
// trunc() is the minimum over entries.
class MatSeries {
public:
    MatSeries() = default;
    explicit MatSeries(std::size_t n, std::int64_t trunc = kInf);
    static MatSeries identity(std::size_t n);
    // c * z^k
    static MatSeries from_const(const QMat &c, std::int64_t k = 0, std::int64_t trunc = kInf);

    std::size_t n() const { return n_; }
    Series &at(std::size_t a, std::size_t b) { return e_[a * n_ + b]; }
    const Series &at(std::size_t a, std::size_t b) const { return e_[a * n_ + b]; }

    std::int64_t trunc() const;
    std::int64_t val() const;
    bool is_zero() const;
    bool exact() const { return trunc() == kInf; }
    QMat coeff(std::int64_t k) const;
    std::set<std::int64_t> exponents() const;
    void add_term(const QMat &c, std::int64_t k);
    void set_trunc_all(std::int64_t t);

    MatSeries truncated(std::int64_t t) const;
    MatSeries shifted(std::int64_t k) const;
    MatSeries scaled(const Rat &k) const;

    // Entrywise agreement below both truncations.
    bool agrees(const MatSeries &o) const;
    bool operator==(const MatSeries &o) const { return n_ == o.n_ && e_ == o.e_; }
    std::string str(const std::string &var = "z") const;

private:
    std::size_t n_ = 0;
    std::vector<Series> e_;
};

MatSeries operator+(const MatSeries &a, const MatSeries &b);
MatSeries operator-(const MatSeries &a, const MatSeries &b);
MatSeries operator-(const MatSeries &a);
MatSeries operator*(const MatSeries &a, const MatSeries &b);
MatSeries operator*(const QMat &a, const MatSeries &b);
MatSeries operator*(const MatSeries &a, const QMat &b);
MatSeries bracket(const MatSeries &x, const MatSeries &y);
MatSeries deriv(const MatSeries &a);
MatSeries ramify(const MatSeries &a, std::int64_t b);

} // namespace parahoric
