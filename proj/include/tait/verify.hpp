#pragma once

// Oracle check suite: each function sweeps a family of inputs, compares an
// implementation route against its brute-force counterpart and tallies
// failures.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tait/f3.hpp"
#include "tait/triangulation.hpp"

namespace tait {

struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> samples;  // first few failure descriptions

    bool passed() const { return checked > 0 && failures == 0; }
    void fail(std::string what);
};

/// All symmetric matrices of the given order, in a fixed order.
std::vector<SymF3Matrix> all_symmetric_matrices(Index order);
SymF3Matrix random_symmetric_matrix(Index order, std::mt19937_64& rng);
F3Matrix random_invertible_matrix(Index order, std::mt19937_64& rng);

/// Gaussian sum against its closed form, every symmetric matrix of order <= max_order.
CheckReport verify_gauss_exhaustive(Index max_order);
/// Same on `samples` random matrices with orders drawn from [min_order, max_order].
CheckReport verify_gauss_random(Index min_order, Index max_order, std::uint64_t samples, std::uint64_t seed);
/// Gau, rank and closed form unchanged under C -> P^T C P.
CheckReport verify_congruence(Index min_order, Index max_order, std::uint64_t samples, std::uint64_t seed);
/// Certificate rank equals row-reduction rank and its determinant equals the
/// principal minor on the pivot set, every symmetric matrix of order <= max_order.
CheckReport verify_rank_certificate(Index max_order);
/// Every nonsingular principal minor of maximal order has the certificate's
/// Legendre symbol, every symmetric matrix of order <= max_order.
CheckReport verify_minor_choice(Index max_order);

/// Odd-rank alpha: rank(alpha) = rank(-alpha), Gau(alpha) + Gau(-alpha) = 0,
/// and the odd-rank total is zero.
CheckReport verify_odd_rank_cancellation(const Triangulation& g);
/// x(-alpha) = -x(alpha) and even-rank weights agree for alpha and -alpha.
CheckReport verify_negation_symmetry(const Triangulation& g);
/// Principal minor on V \ W equals the enumerated tree sum of G/W for every
/// alpha and nonempty W; with `rank_window`, only W with |V|-|W| <= rank+1.
CheckReport verify_minor_tree(const Triangulation& g, bool rank_window);
/// tree sum of G/W* is the witness value and nonzero; no nonempty W with
/// |W| < |W*| has a nonzero tree sum.
CheckReport verify_witness_minimality(const Triangulation& g);
/// 3 * heawood_count = tait_brute.
CheckReport verify_heawood(const Triangulation& g);
/// Sum over alpha of Gau(L(x(alpha))) / 3^|V| = heawood_count.
CheckReport verify_gau_identity(const Triangulation& g);
/// tait0_alpha = heawood_count = tait_brute / 3.
CheckReport verify_theorem(const Triangulation& g, int threads = 1);

}  // namespace tait
