#include "parahoric/poly.hpp"
#include "parahoric/errors.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    Rat l = lead();
    std::vector<Rat> c(c_);
    for (auto &x : c)
        x /= l;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat &x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QMat Poly::eval(const QMat &m) const
{
    QMat acc(m.rows());
    QMat id = QMat::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * m + (*it) * id;
    return acc;
}

Poly operator+(const Poly &a, const Poly &b)
{
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly &a, const Poly &b)
{
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(c));
}

void divmod(const Poly &a, const Poly &b, Poly &q, Poly &r)
{
    if (b.is_zero())
        fail(ErrorKind::ZeroInverse, "polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rat> quo(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        Rat f = rem[k] / b.lead();
        if (f == 0)
            continue;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[k - db + j] -= f * b.coeffs()[j];
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly gcd(const Poly &a, const Poly &b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

Poly derivative(const Poly &p)
{
    std::vector<Rat> c;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        c.push_back(p.coeffs()[k] * static_cast<long>(k));
    return Poly(std::move(c));
}

Poly squarefree_part(const Poly &p)
{
    Poly g = gcd(p, derivative(p));
    Poly q, r;
    divmod(p, g, q, r);
    return q.monic();
}

// Faddeev-LeVerrier recursion; exact over Q.
Poly charpoly(const QMat &m)
{
    std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMat mk(n);
    QMat id = QMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        QMat am = m * mk;
        c[n - k] = -am.trace() / static_cast<long>(k);
    }
    return Poly(std::move(c));
}

static std::vector<Int> divisors(Int v)
{
    std::vector<Int> out;
    if (v < 0)
        v = -v;
    if (v == 0)
        return out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    }
    return out;
}

std::vector<Rat> rational_roots(const Poly &p)
{
    std::set<Rat> roots;
    if (p.is_zero())
        return {};
    std::vector<Rat> c = p.coeffs();
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0)
        ++shift;
    if (shift > 0)
        roots.insert(Rat(0));
    std::vector<Rat> rest(c.begin() + static_cast<long>(shift), c.end());
    if (rest.size() > 1) {
        Int den = 1;
        for (const auto &x : rest)
            den = lcm(den, x.get_den());
        std::vector<Int> ic;
        for (const auto &x : rest)
            ic.push_back(Int(x * den));
        Poly q(rest);
        for (const auto &a : divisors(ic.front()))
            for (const auto &b : divisors(ic.back()))
                for (int s : {1, -1}) {
                    Rat cand(Int(a * s), b);
                    cand.canonicalize();
                    if (q.eval(cand) == 0)
                        roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

} // namespace parahoric
