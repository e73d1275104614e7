#pragma once

#include "parahoric/matrix.hpp"

#include <vector>

namespace parahoric {

// Univariate polynomial over Q, coefficients stored lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> c);
    static Poly constant(const Rat &c) { return Poly({c}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat> &coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
    Poly monic() const;
    Rat eval(const Rat &x) const;
    QMat eval(const QMat &m) const;
    bool operator==(const Poly &o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

Poly operator+(const Poly &a, const Poly &b);
Poly operator-(const Poly &a, const Poly &b);
Poly operator*(const Poly &a, const Poly &b);
void divmod(const Poly &a, const Poly &b, Poly &q, Poly &r);
Poly gcd(const Poly &a, const Poly &b);
Poly derivative(const Poly &p);
Poly squarefree_part(const Poly &p);
Poly charpoly(const QMat &m);
// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const Poly &p);

} // namespace parahoric
