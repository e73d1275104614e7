#pragma once

#include "parahoric/rat.hpp"

#include <string>
#include <vector>

namespace parahoric {

// Point of the standard apartment of gl_n; grades E_ab by theta_a - theta_b.
struct Weight {
    std::vector<Rat> theta;

    Weight() = default;
    explicit Weight(std::vector<Rat> t) : theta(std::move(t)) {}
    static Weight zero(std::size_t n) { return Weight(std::vector<Rat>(n)); }

    std::size_t n() const { return theta.size(); }
    Rat grade(std::size_t a, std::size_t b) const { return theta[a] - theta[b]; }
    bool is_integer() const;
    bool is_zero() const;
    // All pairwise grades, and their common denominator.
    Int denominator() const;
    Rat max_grade() const;
    Weight scaled(const Rat &k) const;
    bool operator==(const Weight &o) const { return theta == o.theta; }
    std::string str() const;
};

} // namespace parahoric
