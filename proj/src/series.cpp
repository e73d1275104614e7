#include "parahoric/series.hpp"
#include "parahoric/errors.hpp"

#include <algorithm>
#include <sstream>

namespace parahoric {

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    if (a == kInf || b == kInf)
        return kInf;
    std::int64_t r = a + b;
    check_exponent(r);
    return r;
}

void check_exponent(std::int64_t e)
{
    if (e != kInf && (e > kMaxExponent || e < -kMaxExponent))
        fail(ErrorKind::ExponentOverflow, "exponent " + std::to_string(e) + " out of range");
}

static std::int64_t sat_mul(std::int64_t a, std::int64_t b)
{
    if (a == kInf)
        return kInf;
    if (a > kMaxExponent || a < -kMaxExponent || b > kMaxExponent || b < -kMaxExponent)
        fail(ErrorKind::ExponentOverflow, "exponent product out of range");
    std::int64_t r = a * b;
    check_exponent(r);
    return r;
}

Series::Series(std::int64_t trunc) : trunc_(trunc) { check_exponent(trunc); }

Series Series::constant(const Rat &c, std::int64_t trunc) { return monomial(c, 0, trunc); }

Series Series::monomial(const Rat &c, std::int64_t e, std::int64_t trunc)
{
    Series s(trunc);
    s.set(e, c);
    return s;
}

Series Series::from_terms(const std::vector<std::pair<std::int64_t, Rat>> &terms, std::int64_t trunc)
{
    Series s(trunc);
    for (const auto &[e, v] : terms)
        s.add_at(e, v);
    return s;
}

std::int64_t Series::val() const { return c_.empty() ? trunc_ : c_.begin()->first; }

std::int64_t Series::max_exp() const { return c_.empty() ? trunc_ : c_.rbegin()->first; }

Rat Series::coeff(std::int64_t e) const
{
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void Series::set(std::int64_t e, const Rat &v)
{
    check_exponent(e);
    if (e >= trunc_)
        return;
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

void Series::add_at(std::int64_t e, const Rat &v)
{
    if (v == 0)
        return;
    check_exponent(e);
    if (e >= trunc_)
        return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        c_.erase(it);
}

Series Series::truncated(std::int64_t n) const
{
    Series s(std::min(n, trunc_));
    for (auto it = c_.begin(); it != c_.end() && it->first < s.trunc_; ++it)
        s.c_.emplace_hint(s.c_.end(), it->first, it->second);
    return s;
}

Series Series::shifted(std::int64_t k) const
{
    Series s(sat_add(trunc_, k));
    for (const auto &[e, v] : c_)
        s.c_.emplace_hint(s.c_.end(), sat_add(e, k), v);
    return s;
}

Series Series::scaled(const Rat &k) const
{
    if (k == 0)
        return Series(trunc_);
    Series s(trunc_);
    for (const auto &[e, v] : c_)
        s.c_.emplace_hint(s.c_.end(), e, v * k);
    return s;
}

Series Series::operator-() const { return scaled(Rat(-1)); }

bool Series::agrees(const Series &o) const { return agrees_below(o, std::min(trunc_, o.trunc_)); }

bool Series::agrees_below(const Series &o, std::int64_t n) const
{
    auto a = c_.begin();
    auto b = o.c_.begin();
    while (true) {
        bool ea = a == c_.end() || a->first >= n;
        bool eb = b == o.c_.end() || b->first >= n;
        if (ea || eb)
            return ea && eb;
        if (a->first != b->first || a->second != b->second)
            return false;
        ++a;
        ++b;
    }
}

std::string Series::str(const std::string &var) const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, v] : c_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << rat_str(v) << ")";
        if (e != 0)
            os << "*" << var << "^" << e;
    }
    if (first)
        os << "0";
    if (trunc_ != kInf)
        os << " + O(" << var << "^" << trunc_ << ")";
    return os.str();
}

Series operator+(const Series &a, const Series &b)
{
    Series s(std::min(a.trunc(), b.trunc()));
    for (const auto &[e, v] : a.terms())
        s.add_at(e, v);
    for (const auto &[e, v] : b.terms())
        s.add_at(e, v);
    return s;
}

Series operator-(const Series &a, const Series &b) { return a + (-b); }

Series operator*(const Series &a, const Series &b)
{
    std::int64_t t = std::min(sat_add(a.trunc(), b.val()), sat_add(b.trunc(), a.val()));
    Series s(t);
    if (a.is_zero() || b.is_zero())
        return s;
    for (const auto &[ea, va] : a.terms()) {
        for (const auto &[eb, vb] : b.terms()) {
            std::int64_t e = ea + eb;
            if (e >= t)
                break;
            s.add_at(e, va * vb);
        }
    }
    return s;
}

Series series_add(const Series &a, const Series &b) { return a + b; }

Series series_mul(const Series &a, const Series &b) { return a * b; }

Series series_inv(const Series &a, std::int64_t cap)
{
    if (a.is_zero())
        fail(ErrorKind::ZeroInverse, "inverse of a zero series");
    std::int64_t v = a.val();
    Rat a0 = a.terms().begin()->second;
    if (a.size() == 1 && a.exact())
        return Series::monomial(1 / a0, -v);
    std::int64_t out_trunc = a.exact() ? cap : sat_add(a.trunc(), -2 * v);
    std::int64_t rel = out_trunc == kInf ? 0 : out_trunc + v;
    Series s(out_trunc);
    if (rel <= 0)
        return s;
    std::vector<Rat> u(static_cast<std::size_t>(rel));
    for (const auto &[e, c] : a.terms()) {
        std::int64_t k = e - v;
        if (k >= rel)
            break;
        u[static_cast<std::size_t>(k)] = c / a0;
    }
    std::vector<Rat> inv(static_cast<std::size_t>(rel));
    inv[0] = 1;
    for (std::int64_t k = 1; k < rel; ++k) {
        Rat acc = 0;
        for (std::int64_t j = 1; j <= k; ++j)
            if (u[j] != 0)
                acc -= u[j] * inv[k - j];
        inv[k] = acc;
    }
    for (std::int64_t k = 0; k < rel; ++k)
        s.add_at(k - v, inv[k] / a0);
    return s;
}

Series series_deriv(const Series &a)
{
    Series s(sat_add(a.trunc(), -1));
    for (const auto &[e, v] : a.terms())
        if (e != 0)
            s.add_at(e - 1, v * e);
    return s;
}

Series ramify(const Series &a, std::int64_t b)
{
    if (b < 1)
        fail(ErrorKind::PreconditionFailed, "ramification index must be positive");
    Series s(sat_mul(a.trunc(), b));
    for (const auto &[e, v] : a.terms())
        s.add_at(sat_mul(e, b), v);
    return s;
}

Series unramify(const Series &a, std::int64_t b)
{
    if (b < 1)
        fail(ErrorKind::PreconditionFailed, "ramification index must be positive");
    std::int64_t t = a.trunc();
    if (t != kInf)
        t = t >= 0 ? (t + b - 1) / b : -((-t) / b);
    Series s(t);
    for (const auto &[e, v] : a.terms()) {
        if (e % b != 0)
            fail(ErrorKind::PreconditionFailed, "exponent not divisible by ramification index");
        s.add_at(e / b, v);
    }
    return s;
}

} // namespace parahoric
