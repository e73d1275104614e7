#include "helpers.hpp"
#include "parahoric/errors.hpp"
#include "parahoric/poly.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <algorithm>

using namespace th;

TEST_CASE("matrix basics")
{
    QMat m = qmat({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    CHECK(det(m) == Rat(-2));
    CHECK(m * inverse(m) == QMat::identity(2));
    CHECK(rank(qmat({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);
    CHECK_THROWS_AS(inverse(qmat({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})), Error);
}

TEST_CASE("Jacobi identity")
{
    gen::Rng r(21);
    for (int i = 0; i < 30; ++i) {
        QMat x = gen::random_mat(r, 3), y = gen::random_mat(r, 3), w = gen::random_mat(r, 3);
        QMat j = bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(w, bracket(x, y));
        CHECK(j.is_zero());
    }
}

TEST_CASE("Jordan-Chevalley postconditions")
{
    gen::Rng r(22);
    for (int i = 0; i < 40; ++i) {
        QMat m = gen::random_mat(r, 3);
        auto [S, N] = jordan_chevalley(m);
        CHECK(S + N == m);
        CHECK(bracket(S, N).is_zero());
        CHECK(is_nilpotent(N));
        CHECK(is_semisimple(S));
    }
}

TEST_CASE("Jacobson-Morozov for the regular nilpotent of gl3")
{
    QMat P = E(3, 0, 1) + E(3, 1, 2);
    Sl2Triple t = jacobson_morozov(P, Subalgebra::full(3));
    CHECK(t.P == P);
    CHECK(sl2_relations_hold(t));
    CHECK((t.H == diag({2, 0, -2}) || t.H == diag({-2, 0, 2})));
    CHECK(bracket(t.H, t.P) == Rat(-2) * t.P);
    CHECK(bracket(t.H, t.Q) == Rat(2) * t.Q);
    CHECK(bracket(t.P, t.Q) == -t.H);
}

TEST_CASE("centralizers")
{
    Subalgebra c2 = centralizer({diag({1, -1})}, Subalgebra::full(2));
    CHECK(c2.dim() == 2);
    CHECK(c2 == Subalgebra::diagonal(2));
    Subalgebra c3 = centralizer({diag({1, 2, 3})}, Subalgebra::full(3));
    CHECK(c3 == Subalgebra::diagonal(3));
    CHECK(c3.is_abelian());
    CHECK(centralizer(c3.basis(), Subalgebra::full(3)) == c3);
    CHECK(centralizer({diag({1, 1, 0})}, Subalgebra::full(3)).dim() == 5);
}

TEST_CASE("commutator solves")
{
    QMat S = diag({1, -1});
    QMat Y = solve_commutator(S, S, E(2, 0, 1), Subalgebra::full(2));
    CHECK(Y == make_rat(1, 2) * E(2, 0, 1));
    CHECK((E(2, 0, 1) + bracket(Y, S)).is_zero());

    QMat Q = E(2, 0, 1);
    QMat B = diag({1, 0});
    QMat Y2 = solve_commutator(Q, E(2, 1, 0), B, Subalgebra::full(2));
    QMat rest = B + bracket(Y2, E(2, 1, 0));
    CHECK(bracket(Q, rest).is_zero());
    CHECK(rest == make_rat(1, 2) * QMat::identity(2));
}

TEST_CASE("rational eigenbasis and characteristic polynomial")
{
    QMat m = qmat({{Rat(2), Rat(1)}, {Rat(0), Rat(-1)}});
    auto eb = rational_eigenbasis(m, true);
    REQUIRE(eb);
    CHECK(inverse(eb->V) * m * eb->V == diag({2, -1}));
    CHECK_FALSE(rational_eigenbasis(qmat({{Rat(0), Rat(1)}, {Rat(2), Rat(0)}})));
    auto roots = rational_roots(charpoly(diag({3, 3, -1})));
    CHECK(std::find(roots.begin(), roots.end(), Rat(3)) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rat(-1)) != roots.end());
    Poly p = (Poly::x() - Poly::constant(Rat(3))) * (Poly::x() - Poly::constant(Rat(3)));
    CHECK(squarefree_part(p).monic() == (Poly::x() - Poly::constant(Rat(3))));
}
