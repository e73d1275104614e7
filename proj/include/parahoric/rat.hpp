#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace parahoric {

using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p", "p/q" with optional sign. Rejects zero denominators.
Rat parse_rat(const std::string &text);

// Canonical text: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string rat_str(const Rat &r);

Rat floor_rat(const Rat &r);
Rat frac_rat(const Rat &r);
bool is_integer(const Rat &r);
std::int64_t to_i64(const Rat &r);
Int lcm(const Int &a, const Int &b);
// p/q in lowest terms; q != 0.
Rat make_rat(std::int64_t p, std::int64_t q);

} // namespace parahoric
