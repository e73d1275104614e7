#pragma once

#include "parahoric/matrix.hpp"
#include "parahoric/weight.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace parahoric {

// Linear span of constant n x n matrices, kept as a row-reduced basis in the
// row-major E_ab coordinates. Used for subalgebras and for graded slices of them.
class Subalgebra {
public:
    Subalgebra() = default;
    Subalgebra(std::size_t n, const std::vector<QMat> &gens);
    static Subalgebra full(std::size_t n);
    static Subalgebra diagonal(std::size_t n);
    // Span of the E_ab with theta_a - theta_b == g.
    static Subalgebra graded(const Weight &w, const Rat &g);

    std::size_t ambient_n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QMat> &basis() const { return basis_; }
    bool contains(const QMat &x) const;
    std::optional<Vec> coords(const QMat &x) const;
    Subalgebra intersect(const Subalgebra &o) const;
    bool closed_under_bracket() const;
    bool is_abelian() const;
    bool operator==(const Subalgebra &o) const;

private:
    std::size_t n_ = 0;
    std::vector<QMat> basis_;
};

struct Sl2Triple {
    QMat P, Q, H;
};

// Orientation used throughout: [H,P] = -2P, [H,Q] = 2Q, [P,Q] = -H.
bool sl2_relations_hold(const Sl2Triple &t);

Subalgebra centralizer(const std::vector<QMat> &elems, const Subalgebra &ambient);

// Solves [S, B + [Y, P]] = 0 for Y in domain; free coordinates are set to zero.
QMat solve_commutator(const QMat &S, const QMat &P, const QMat &B, const Subalgebra &domain);

std::pair<QMat, QMat> jordan_chevalley(const QMat &m);
bool is_semisimple(const QMat &m);

Sl2Triple jacobson_morozov(const QMat &P, const Subalgebra &ambient);
// Q is sought in q_domain and H in h_domain (both inside the ambient).
Sl2Triple jacobson_morozov(const QMat &P, const Subalgebra &q_domain, const Subalgebra &h_domain);

// Rational diagonalization m = V diag(ev) V^{-1}. Columns of V grouped by
// eigenvalue in the given order. Fails when m is not diagonalizable over Q.
struct Eigenbasis {
    QMat V;
    std::vector<Rat> values;
};
std::optional<Eigenbasis> rational_eigenbasis(const QMat &m, bool descending = false);

// Lagrange projector onto the eigenvalue-e part of a diagonalizable linear map,
// given as its matrix together with its distinct eigenvalues.
QMat eigen_projector(const QMat &map, const std::vector<Rat> &eigenvalues, const Rat &e);

// Matrix of X -> [x, X] restricted to a subspace, in E_ab coordinates.
QMat ad_matrix(const QMat &x, const Subalgebra &dom);

} // namespace parahoric
