#include "parahoric/weight.hpp"

namespace parahoric {

bool Weight::is_integer() const
{
    for (std::size_t a = 0; a < n(); ++a)
        if (!parahoric::is_integer(grade(a, 0)))
            return false;
    return true;
}

bool Weight::is_zero() const
{
    for (const auto &t : theta)
        if (t != 0)
            return false;
    return true;
}

Int Weight::denominator() const
{
    Int d = 1;
    for (std::size_t a = 0; a < n(); ++a)
        d = lcm(d, grade(a, 0).get_den());
    return d;
}

Rat Weight::max_grade() const
{
    Rat m = 0;
    for (std::size_t a = 0; a < n(); ++a)
        for (std::size_t b = 0; b < n(); ++b)
            if (grade(a, b) > m)
                m = grade(a, b);
    return m;
}

Weight Weight::scaled(const Rat &k) const
{
    Weight w = *this;
    for (auto &t : w.theta)
        t *= k;
    return w;
}

std::string Weight::str() const
{
    std::string s = "(";
    for (std::size_t a = 0; a < n(); ++a)
        s += (a ? ", " : "") + rat_str(theta[a]);
    return s + ")";
}

} // namespace parahoric
