#pragma once

#include <algorithm>
#include <concepts>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "tait/f3.hpp"

namespace tait {

using Index = Eigen::Index;

/// Edge weights x_e indexed by (original) edge id.
using EdgeWeights = std::vector<F3>;

/// Anything with a vertex count and a range of edges carrying endpoints and
/// an edge id into an EdgeWeights vector.
template <class G>
concept WeightedGraph = requires(const G& g) {
    { g.vertex_count() } -> std::convertible_to<Index>;
    { g.edges().begin()->u } -> std::convertible_to<Index>;
    { g.edges().begin()->v } -> std::convertible_to<Index>;
    { g.edges().begin()->id } -> std::convertible_to<Index>;
};

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& c) {
    if (c.rows() != c.cols()) return false;
    for (Index i = 0; i < c.rows(); ++i)
        for (Index j = i + 1; j < c.cols(); ++j)
            if (!(c(i, j) == c(j, i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Laplace-Kirchhoff matrices

/// Oriented incidence matrix B (vertices x edges, one +1 and one -1 per
/// column) together with the diagonal of the weight matrix.
struct OrientedIncidence {
    F3Matrix b;
    F3Vector weights;
};

template <WeightedGraph G>
OrientedIncidence oriented_incidence(const G& g, std::span<const F3> x) {
    const auto& edges = g.edges();
    const Index m = static_cast<Index>(std::ranges::size(edges));
    OrientedIncidence inc{F3Matrix::Zero(g.vertex_count(), m), F3Vector::Zero(m)};
    Index col = 0;
    for (const auto& e : edges) {
        inc.b(e.u, col) = F3(1);
        inc.b(e.v, col) = F3(-1);
        inc.weights(col) = x[static_cast<std::size_t>(e.id)];
        ++col;
    }
    return inc;
}

/// L = B diag(w) B^T, the product route.
inline SymF3Matrix laplacian(const OrientedIncidence& inc) {
    return inc.b * inc.weights.asDiagonal() * inc.b.transpose();
}

/// Direct assembly of L(G; x) into `out`, reusing its storage.
/// Off-diagonal entries are -sum of parallel edge weights, diagonal entries
/// the weighted degree.
template <WeightedGraph G>
void laplacian_into(const G& g, std::span<const F3> x, SymF3Matrix& out) {
    const Index n = g.vertex_count();
    out.setZero(n, n);
    for (const auto& e : g.edges()) {
        const F3 w = x[static_cast<std::size_t>(e.id)];
        if (w.is_zero()) continue;
        out(e.u, e.u) += w;
        out(e.v, e.v) += w;
        out(e.u, e.v) -= w;
        out(e.v, e.u) -= w;
    }
}

template <WeightedGraph G>
SymF3Matrix laplacian(const G& g, std::span<const F3> x) {
    SymF3Matrix l;
    laplacian_into(g, x, l);
    return l;
}

// ---------------------------------------------------------------------------
// Determinants and rank by ordinary row reduction

/// Determinant over F3 by Gaussian elimination with row swaps.
/// The determinant of a 0x0 matrix is 1.
template <class Derived>
F3 determinant(const Eigen::MatrixBase<Derived>& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("determinant: matrix is not square");
    F3Matrix a = c;
    const Index n = a.rows();
    F3 det(1);
    for (Index k = 0; k < n; ++k) {
        Index p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return F3(0);
        if (p != k) {
            a.row(p).swap(a.row(k));
            det = -det;
        }
        const F3 pivot = a(k, k);
        det *= pivot;
        const F3 inv = inverse(pivot);
        for (Index i = k + 1; i < n; ++i) {
            const F3 f = a(i, k) * inv;
            if (f.is_zero()) continue;
            for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Rank by plain row reduction; independent of any symmetry.
template <class Derived>
Index row_reduction_rank(const Eigen::MatrixBase<Derived>& c) {
    F3Matrix a = c;
    Index rank = 0;
    for (Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
        Index p = rank;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(rank));
        const F3 inv = inverse(a(rank, col));
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == rank || a(i, col).is_zero()) continue;
            const F3 f = a(i, col) * inv;
            for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Determinant of the principal submatrix on `s` (empty set gives 1).
template <class Derived>
F3 principal_minor_det(const Eigen::MatrixBase<Derived>& c, std::span<const Index> s) {
    F3Matrix sub(static_cast<Index>(s.size()), static_cast<Index>(s.size()));
    for (Index i = 0; i < sub.rows(); ++i)
        for (Index j = 0; j < sub.cols(); ++j) sub(i, j) = c(s[i], s[j]);
    return determinant(sub);
}

// ---------------------------------------------------------------------------
// Symmetric rank certificate

/// A principal index set realizing the rank of a symmetric matrix.
///
/// The principal submatrix on `pivots` is nonsingular with determinant
/// `det`, and `pivots.size()` equals the rank, so no larger principal
/// submatrix is nonsingular.
struct PivotCertificate {
    std::vector<Index> pivots;  // sorted ascending
    F3 det{1};

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Computes rank, a maximal nonsingular principal index set and its
/// determinant by symmetric (congruence) elimination.
///
/// Each step takes the first nonzero diagonal entry as a 1x1 pivot. When
/// the remaining diagonal is all zero, the first pair (i, j) with a nonzero
/// coupling is taken as a 2x2 pivot block, whose determinant is
/// -a_ij^2 = -1. The minor of the pivot set is the product of the pivot
/// determinants. `work` is scratch storage and is overwritten.
template <class Derived>
PivotCertificate sym_rank_certificate(const Eigen::MatrixBase<Derived>& c, F3Matrix& work) {
    if (!is_symmetric(c)) throw std::invalid_argument("sym_rank_certificate: matrix is not symmetric");
    const Index n = c.rows();
    work = c;
    PivotCertificate cert;
    cert.pivots.reserve(static_cast<std::size_t>(n));

    // Remaining (not yet pivoted) indices, kept in ascending order.
    std::vector<Index> active(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

    auto drop = [&active](Index i) { active.erase(std::ranges::find(active, i)); };

    while (!active.empty()) {
        auto diag = std::ranges::find_if(active, [&](Index i) { return !work(i, i).is_zero(); });
        if (diag != active.end()) {
            const Index p = *diag;
            const F3 d = work(p, p);
            const F3 inv = inverse(d);
            drop(p);
            for (Index j : active) {
                const F3 f = work(j, p) * inv;
                if (f.is_zero()) continue;
                for (Index k : active) work(j, k) -= f * work(p, k);
            }
            cert.pivots.push_back(p);
            cert.det *= d;
            continue;
        }

        Index bi = -1, bj = -1;
        for (std::size_t a = 0; a < active.size() && bi < 0; ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b)
                if (!work(active[a], active[b]).is_zero()) {
                    bi = active[a];
                    bj = active[b];
                    break;
                }
        if (bi < 0) break;  // remaining block is zero

        // Block [[0, t], [t, 0]] has inverse [[0, 1/t], [1/t, 0]] and det -t^2.
        const F3 t = work(bi, bj);
        const F3 tinv = inverse(t);
        drop(bi);
        drop(bj);
        for (Index j : active) {
            // Row j of S = A - A[:,B] B^{-1} A[B,:]; coefficients of rows bi, bj.
            const F3 fi = work(j, bj) * tinv;
            const F3 fj = work(j, bi) * tinv;
            if (fi.is_zero() && fj.is_zero()) continue;
            for (Index k : active) work(j, k) -= fi * work(bi, k) + fj * work(bj, k);
        }
        cert.pivots.push_back(bi);
        cert.pivots.push_back(bj);
        cert.det *= -(t * t);
    }

    std::ranges::sort(cert.pivots);
    return cert;
}

template <class Derived>
PivotCertificate sym_rank_certificate(const Eigen::MatrixBase<Derived>& c) {
    F3Matrix work;
    return sym_rank_certificate(c, work);
}

}  // namespace tait
