#include "helpers.hpp"
#include "parahoric/errors.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace th;

namespace {

Series random_series(gen::Rng &r, std::int64_t lo, std::int64_t trunc)
{
    Series s(trunc);
    for (std::int64_t k = lo; k < trunc; ++k)
        if (gen::coin(r, 60))
            s.add_at(k, gen::small_rat(r));
    return s;
}

} // namespace

TEST_CASE("rationals canonicalize and print")
{
    CHECK(make_rat(4, -6) == q("-2/3"));
    CHECK(rat_str(q("6/4")) == "3/2");
    CHECK(rat_str(Rat(-5)) == "-5");
    CHECK_THROWS_AS(make_rat(1, 0), Error);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("sum matches the term-by-term loop")
{
    gen::Rng r(11);
    for (int i = 0; i < 50; ++i) {
        Series a = random_series(r, -3, gen::uniform(r, 2, 8));
        Series b = random_series(r, -2, gen::uniform(r, 2, 8));
        Series s = a + b;
        std::int64_t t = std::min(a.trunc(), b.trunc());
        CHECK(s.trunc() == t);
        for (std::int64_t k = -3; k < t; ++k)
            CHECK(s.coeff(k) == a.coeff(k) + b.coeff(k));
    }
}

TEST_CASE("product matches naive convolution below the truncation")
{
    gen::Rng r(12);
    for (int i = 0; i < 50; ++i) {
        Series a = random_series(r, -2, 6);
        Series b = random_series(r, -1, 5);
        Series p = a * b;
        for (std::int64_t k = -3; k < p.trunc(); ++k) {
            Rat acc = 0;
            for (std::int64_t j = -2; j < 6; ++j)
                acc += a.coeff(j) * b.coeff(k - j);
            CHECK(p.coeff(k) == acc);
        }
        if (!a.is_zero() && !b.is_zero())
            CHECK(p.trunc() == std::min(a.trunc() + b.val(), b.trunc() + a.val()));
    }
}

TEST_CASE("exact series stay exact")
{
    Series a = series({{-1, Rat(2)}, {3, Rat(1)}});
    Series b = series({{0, Rat(1)}, {1, Rat(-1)}});
    CHECK((a * b).exact());
    CHECK((a * b) == series({{-1, Rat(2)}, {0, Rat(-2)}, {3, Rat(1)}, {4, Rat(-1)}}));
}

TEST_CASE("inverse times input is one modulo the truncation")
{
    gen::Rng r(13);
    for (int i = 0; i < 40; ++i) {
        Series a = random_series(r, 1, 9);
        a.add_at(gen::uniform(r, -2, 0), gen::nonzero_rat(r));
        Series p = a * series_inv(a);
        CHECK(p.agrees(Series::constant(Rat(1))));
        CHECK(p.trunc() >= 9 - 2 * 2);
    }
    CHECK_THROWS_AS(series_inv(Series(5)), Error);
}

TEST_CASE("product rule")
{
    gen::Rng r(14);
    for (int i = 0; i < 40; ++i) {
        Series a = random_series(r, -2, 7);
        Series b = random_series(r, -2, 7);
        CHECK(series_deriv(a * b).agrees(series_deriv(a) * b + a * series_deriv(b)));
    }
}

TEST_CASE("ramification round trip")
{
    gen::Rng r(15);
    for (int i = 0; i < 20; ++i) {
        Series a = random_series(r, -3, 6);
        std::int64_t b = gen::uniform(r, 1, 4);
        Series up = ramify(a, b);
        CHECK(up.trunc() == 6 * b);
        CHECK(unramify(up, b) == a);
    }
    CHECK(ramify(series({{-1, Rat(3)}}), 2) == series({{-2, Rat(3)}}));
}

TEST_CASE("truncation semantics")
{
    Series a = series({{0, Rat(1)}, {2, Rat(5)}}, 4);
    CHECK(a.truncated(2) == series({{0, Rat(1)}}, 2));
    CHECK(a.shifted(-3).trunc() == 1);
    CHECK(a.agrees(series({{0, Rat(1)}, {2, Rat(5)}, {7, Rat(1)}})));
    CHECK_FALSE(a.agrees(series({{0, Rat(1)}})));
    CHECK_THROWS_AS(check_exponent(kMaxExponent + 1), Error);
}
