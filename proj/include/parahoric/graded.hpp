#pragma once

#include "parahoric/matseries.hpp"
#include "parahoric/weight.hpp"

#include <map>

namespace parahoric {

// Depth of the monomial E_ab z^k under a weight is theta_a - theta_b + k.
// Depths are returned as rationals; kDepthInf stands for "no bound".
extern const Rat kDepthInf;

std::int64_t ceil_i64(const Rat &r);
std::int64_t floor_i64(const Rat &r);

// Least depth of a stored monomial (or the depth precision when X is zero).
Rat depth_val(const MatSeries &x, const Weight &w);
// Least depth at which some entry stops being known.
Rat depth_trunc(const MatSeries &x, const Weight &w);
// Drops everything of depth >= d and records that truncation per entry.
MatSeries depth_truncated(const MatSeries &x, const Weight &w, const Rat &d);

// Constant matrix of the depth-t part: entry (a,b) is the coefficient of
// z^{t - lambda_ab} when that exponent is an integer.
QMat depth_slice(const MatSeries &x, const Weight &w, const Rat &t);
// Inverse of depth_slice for one slice.
MatSeries depth_unslice(const QMat &y, const Weight &w, const Rat &t);
// Distinct depths of stored monomials, ascending.
std::vector<Rat> depth_levels(const MatSeries &x, const Weight &w);

} // namespace parahoric
