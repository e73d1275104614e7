#pragma once

#include "parahoric/rat.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace parahoric {

// Sentinel for "exact": no truncation.
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
inline constexpr std::int64_t kMaxExponent = std::int64_t(1) << 40;

std::int64_t sat_add(std::int64_t a, std::int64_t b);
void check_exponent(std::int64_t e);

// Truncated Laurent series in one variable. Coefficients at exponents below
// trunc() are exact; nothing is known at or above it.
class Series {
public:
    Series() = default;
    explicit Series(std::int64_t trunc);
    static Series constant(const Rat &c, std::int64_t trunc = kInf);
    static Series monomial(const Rat &c, std::int64_t e, std::int64_t trunc = kInf);
    static Series from_terms(const std::vector<std::pair<std::int64_t, Rat>> &terms,
                             std::int64_t trunc = kInf);

    std::int64_t trunc() const { return trunc_; }
    bool exact() const { return trunc_ == kInf; }
    bool is_zero() const { return c_.empty(); }
    // Lowest stored exponent, or trunc() for the zero series.
    std::int64_t val() const;
    std::int64_t max_exp() const;
    Rat coeff(std::int64_t e) const;
    const std::map<std::int64_t, Rat> &terms() const { return c_; }
    std::size_t size() const { return c_.size(); }

    void set(std::int64_t e, const Rat &v);
    void add_at(std::int64_t e, const Rat &v);

    Series truncated(std::int64_t n) const;
    Series shifted(std::int64_t k) const;
    Series scaled(const Rat &k) const;
    Series operator-() const;

    // Equality of coefficients below min of both truncations.
    bool agrees(const Series &o) const;
    bool agrees_below(const Series &o, std::int64_t n) const;
    bool operator==(const Series &o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

    std::string str(const std::string &var = "z") const;

private:
    std::map<std::int64_t, Rat> c_;
    std::int64_t trunc_ = kInf;
};

Series operator+(const Series &a, const Series &b);
Series operator-(const Series &a, const Series &b);
Series operator*(const Series &a, const Series &b);

Series series_add(const Series &a, const Series &b);
Series series_mul(const Series &a, const Series &b);
// cap is the output truncation used when a is exact but not a monomial.
Series series_inv(const Series &a, std::int64_t cap = 32);
Series series_deriv(const Series &a);
Series ramify(const Series &a, std::int64_t b);
// Inverse of ramify: requires every exponent to be divisible by b.
Series unramify(const Series &a, std::int64_t b);

} // namespace parahoric
