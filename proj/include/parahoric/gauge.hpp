#pragma once

#include "parahoric/graded.hpp"
#include "parahoric/matseries.hpp"
#include "parahoric/weight.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace parahoric {

// dz-coefficient of a connection (or Higgs field). When b > 1 the matrix is
// the coefficient of d(zeta) with z = zeta^b.
struct Connection {
    MatSeries mat;
    std::int64_t b = 1;
    bool higgs = false;

    std::size_t n() const { return mat.n(); }
    std::int64_t trunc() const { return mat.trunc(); }
    bool agrees(const Connection &o) const { return b == o.b && higgs == o.higgs && mat.agrees(o.mat); }
};

// exp(X). theta is the weight whose filtration makes X of nonnegative depth
// with a nilpotent depth-zero part.
struct ExpFactor {
    MatSeries X;
    Weight theta;
};
struct ConstFactor {
    QMat C;
};
// z^xi, read in the ambient variable z whatever the current cover is.
struct CocharFactor {
    std::vector<std::int64_t> xi;
};
// zeta^{nH} in the current cover variable.
struct ShearFactor {
    std::int64_t n;
    QMat H;
};
struct RamifyFactor {
    std::int64_t b;
};

using Factor = std::variant<ExpFactor, ConstFactor, CocharFactor, ShearFactor, RamifyFactor>;

// Factors are applied in list order: the first factor acts first.
struct GaugeWord {
    std::vector<Factor> factors;

    bool empty() const { return factors.empty(); }
    std::size_t size() const { return factors.size(); }
    std::int64_t ramification() const;
    GaugeWord &push(Factor f)
    {
        factors.push_back(std::move(f));
        return *this;
    }
};

// Word that applies u first and then v. A leading ramification of v is moved
// to the front and the factors of u are pulled back along it.
GaugeWord concat(const GaugeWord &u, const GaugeWord &v);
GaugeWord inverse(const GaugeWord &w);
// Rewrites a word on the b-fold cover of its own cover.
GaugeWord pullback(const GaugeWord &w, std::int64_t b);

// Truncated exponential. cap is the depth up to which an exact but
// non-terminating series is expanded. Throws NonConvergent.
MatSeries exp_trunc(const MatSeries &x, const Weight &theta, const Rat &cap);
MatSeries exp_trunc(const MatSeries &x);

Connection gauge_factor(const Factor &f, const Connection &a);
Connection gauge(const GaugeWord &w, const Connection &a);

// g A g^{-1} + dg g^{-1} for an explicit invertible g.
Connection gauge_by(const MatSeries &g, const Connection &a);
// Inverse over Laurent series by elimination; throws NotInvertible.
MatSeries mat_inverse(const MatSeries &g, std::int64_t cap = 32);
// Product g_k ... g_1 of a word without ramification, with cap as in exp_trunc.
MatSeries word_element(const GaugeWord &w, std::size_t n, std::int64_t cap);

} // namespace parahoric
