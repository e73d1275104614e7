#pragma once

#include "parahoric/gauge.hpp"
#include "parahoric/graded.hpp"
#include "parahoric/weight.hpp"

#include <utility>
#include <vector>

namespace parahoric {

Rat grading(const Weight &w, std::size_t a, std::size_t b);

enum class Filtration { parahoric, levi, unipotent };
bool filtration_member(const Weight &w, const MatSeries &x, Filtration kind);

// Levi part: the monomials with lambda + i == 0. Throws NotParahoric.
MatSeries residue(const Weight &w, const MatSeries &x);
// Constant (i == 0) piece of the residue.
QMat residue0(const Weight &w, const MatSeries &x);

struct ThetaTerm {
    std::int64_t r;
    Rat l;
    std::int64_t i;
    QMat X;
};

struct ThetaRep {
    Weight weight;
    std::int64_t c = 0;
    std::vector<ThetaTerm> terms;
};

ThetaRep theta_rep(const Weight &w, const Connection &a);
// Sum of X z^{r+i} over the terms, exact.
MatSeries reassemble(const ThetaRep &rep, std::size_t n);
// Throws ZeroConnection.
std::int64_t theta_order(const Weight &w, const Connection &a);

// theta_a = (n - a) / c_scale with a counted from 1. Throws ScaleTooSmall.
Weight iwahori_weight(std::size_t n, std::int64_t c_scale);

bool moy_prasad_member(const Weight &x, const Rat &s, const MatSeries &m);
Rat depth_at(const Weight &x, const Connection &a);

// Levi image h of a word inside the parahoric group, and whether
// Res(Ad_g X) == Ad_h Res(X). h lies in the Levi group (constant when
// no grade is a nonzero integer).
struct EquivarianceResult {
    MatSeries h;
    bool ok;
};
EquivarianceResult residue_equivariance_check(const Weight &w, const GaugeWord &g, const MatSeries &x);

} // namespace parahoric
