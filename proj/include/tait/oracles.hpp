#pragma once

// Brute-force ground truth for every quantity the alpha-representation
// relies on. Deliberately naive: nothing here goes through determinants or
// rank certificates unless it is comparing against them.

#include <cstdint>
#include <ostream>
#include <span>

#include "tait/alpharep.hpp"
#include "tait/budget.hpp"
#include "tait/gf3linalg.hpp"
#include "tait/triangulation.hpp"

namespace tait {

/// Exact element a + b*s of Z[s], s = sqrt(-3) taken as -i*sqrt(3).
///
/// Under this convention i*sqrt(3) = -s, so the one-variable sum
/// g(c) = legendre(c) * i*sqrt(3) has b = -legendre(c).
struct CyclotomicInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    /// c * i*sqrt(3)
    static constexpr CyclotomicInt i_sqrt3(std::int64_t c) { return {0, -c}; }

    constexpr CyclotomicInt& operator+=(const CyclotomicInt& o) { a += o.a; b += o.b; return *this; }
    constexpr CyclotomicInt& operator-=(const CyclotomicInt& o) { a -= o.a; b -= o.b; return *this; }
    friend constexpr CyclotomicInt operator+(CyclotomicInt x, const CyclotomicInt& y) { return x += y; }
    friend constexpr CyclotomicInt operator-(CyclotomicInt x, const CyclotomicInt& y) { return x -= y; }
    friend constexpr CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
        return {x.a * y.a - 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend constexpr bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;
    friend std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z) {
        return os << z.a << (z.b < 0 ? " - " : " + ") << (z.b < 0 ? -z.b : z.b) << "*sqrt(-3)";
    }
};

/// Face spins sigma(F) in {-1, +1}; bit f set means sigma(F_f) = -1.
using SpinAssignment = AlphaAssignment;

/// Vertex charges k_v in F3.
using VertexCharge = F3Vector;

/// Number of edge 3-colorings in which every face sees three colors.
/// Throws BudgetExceeded above `max_vertices`.
std::uint64_t tait_brute(const Triangulation& g, int max_vertices = budget::kMaxBruteVertices);

/// True iff the spins sum to zero mod 3 around every vertex.
bool heawood_satisfied(const Triangulation& g, const SpinAssignment& sigma);

/// Number of spin vectors satisfying heawood_satisfied.
/// Throws BudgetExceeded above `max_faces`.
std::uint64_t heawood_count(const Triangulation& g, int max_faces = budget::kMaxFaces);

/// Sum over spanning trees of the product of edge weights, by explicit
/// enumeration: (n-1)-edge subsets with a union-find acyclicity test when
/// at most 20 edges carry nonzero weight, deletion-contraction otherwise.
/// Throws std::invalid_argument on a disconnected graph and BudgetExceeded
/// when deletion-contraction exceeds `max_calls`.
F3 spanning_tree_sum(const ContractedMultigraph& h, std::span<const F3> x, std::uint64_t max_calls = 100'000'000);

/// Gau(C) = sum over y in F3^n of exp(2 pi i y^T C y / 3), exactly.
/// Throws BudgetExceeded above `max_order`.
CyclotomicInt gau_exact(const SymF3Matrix& c, int max_order = budget::kMaxGauOrder);

/// 3^n * legendre(det C_r) * (i/sqrt(3))^r expanded exactly.
CyclotomicInt gau_closed_form(Index n, const PivotCertificate& cert);

/// gau_exact(c) == gau_closed_form(n, sym_rank_certificate(c)).
bool check_gau_closed_form(const SymF3Matrix& c);

/// principal_minor_det(L(g;x), V \ w) == spanning_tree_sum(g / w, x).
/// Precondition: w nonempty (throws std::invalid_argument otherwise).
bool check_minor_tree_sum(const Triangulation& g, std::span<const F3> x, const VertexSet& w);

/// Sum over all alpha of gau_exact(L(g; x(alpha))).
CyclotomicInt gau_alpha_sum(const Triangulation& g, int max_faces = budget::kMaxFaces,
                            int max_order = budget::kMaxGauOrder);

/// The alpha-sum of Gaussian sums divided by 3^|V| is real, integral and
/// equals heawood_count(g).
bool check_gau_identity(const Triangulation& g);

}  // namespace tait
