#include "tait/verify.hpp"

#include <bit>
#include <sstream>

#include "tait/alpharep.hpp"
#include "tait/gf3linalg.hpp"
#include "tait/oracles.hpp"

namespace tait {
namespace {

constexpr std::size_t kMaxSamples = 5;

std::string matrix_string(const F3Matrix& c) {
    std::ostringstream os;
    os << '[';
    for (Index i = 0; i < c.rows(); ++i) {
        os << (i ? "; " : "");
        for (Index j = 0; j < c.cols(); ++j) os << (j ? " " : "") << c(i, j);
    }
    os << ']';
    return os.str();
}

std::string mask_string(std::uint64_t mask, Index faces) {
    std::string s;
    for (Index f = 0; f < faces; ++f) s += (mask >> f) & 1U ? '-' : '+';
    return s;
}

std::string set_string(const VertexSet& w) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << '}';
    return os.str();
}

// Subsets of 0..n-1 as bitmasks.
VertexSet subset_from_mask(Index n, std::uint64_t mask) {
    VertexSet s;
    for (Index v = 0; v < n; ++v)
        if ((mask >> v) & 1U) s.push_back(v);
    return s;
}

SymF3Matrix alpha_laplacian(const Triangulation& g, std::uint64_t mask, EdgeWeights& x) {
    edge_weights_from_mask(g, mask, x);
    return laplacian(g, x);
}

std::uint64_t all_alpha(const Triangulation& g) {
    if (g.face_count() > budget::kMaxFaces) throw BudgetExceeded("too many faces for exhaustive alpha checks");
    return std::uint64_t{1} << g.face_count();
}

}  // namespace

void CheckReport::fail(std::string what) {
    ++failures;
    if (samples.size() < kMaxSamples) samples.push_back(std::move(what));
}

std::vector<SymF3Matrix> all_symmetric_matrices(Index order) {
    const Index free = order * (order + 1) / 2;
    std::uint64_t total = 1;
    for (Index i = 0; i < free; ++i) total *= 3;
    std::vector<SymF3Matrix> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        SymF3Matrix c(order, order);
        std::uint64_t rest = code;
        for (Index i = 0; i < order; ++i)
            for (Index j = i; j < order; ++j) {
                c(i, j) = c(j, i) = F3(static_cast<int>(rest % 3));
                rest /= 3;
            }
        out.push_back(std::move(c));
    }
    return out;
}

SymF3Matrix random_symmetric_matrix(Index order, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-1, 1);
    SymF3Matrix c(order, order);
    for (Index i = 0; i < order; ++i)
        for (Index j = i; j < order; ++j) c(i, j) = c(j, i) = F3(entry(rng));
    return c;
}

F3Matrix random_invertible_matrix(Index order, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-1, 1);
    while (true) {
        F3Matrix p(order, order);
        for (Index i = 0; i < order; ++i)
            for (Index j = 0; j < order; ++j) p(i, j) = F3(entry(rng));
        if (!determinant(p).is_zero()) return p;
    }
}

// ---------------------------------------------------------------------------
// Matrix-level checks

CheckReport verify_gauss_exhaustive(Index max_order) {
    CheckReport rep("gauss-closed-form exhaustive order<=" + std::to_string(max_order));
    for (Index n = 0; n <= max_order; ++n)
        for (const auto& c : all_symmetric_matrices(n)) {
            ++rep.checked;
            if (!check_gau_closed_form(c)) rep.fail("closed form mismatch for " + matrix_string(c));
        }
    return rep;
}

CheckReport verify_gauss_random(Index min_order, Index max_order, std::uint64_t samples, std::uint64_t seed) {
    CheckReport rep("gauss-closed-form random orders " + std::to_string(min_order) + "-" + std::to_string(max_order));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> order(min_order, max_order);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto c = random_symmetric_matrix(order(rng), rng);
        ++rep.checked;
        if (!check_gau_closed_form(c)) rep.fail("closed form mismatch for " + matrix_string(c));
    }
    return rep;
}

CheckReport verify_congruence(Index min_order, Index max_order, std::uint64_t samples, std::uint64_t seed) {
    CheckReport rep("congruence-invariance orders " + std::to_string(min_order) + "-" + std::to_string(max_order));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> order(min_order, max_order);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Index n = order(rng);
        const auto c = random_symmetric_matrix(n, rng);
        const auto p = random_invertible_matrix(n, rng);
        const SymF3Matrix a = p.transpose() * c * p;
        ++rep.checked;
        const auto cc = sym_rank_certificate(c);
        const auto ca = sym_rank_certificate(a);
        if (cc.rank() != ca.rank()) {
            rep.fail("rank changed under congruence for " + matrix_string(c));
        } else if (!(gau_closed_form(n, cc) == gau_closed_form(n, ca))) {
            rep.fail("closed form changed under congruence for " + matrix_string(c));
        } else if (!(gau_exact(c) == gau_exact(a))) {
            rep.fail("Gaussian sum changed under congruence for " + matrix_string(c));
        }
    }
    return rep;
}

CheckReport verify_rank_certificate(Index max_order) {
    CheckReport rep("rank-certificate exhaustive order<=" + std::to_string(max_order));
    for (Index n = 0; n <= max_order; ++n)
        for (const auto& c : all_symmetric_matrices(n)) {
            ++rep.checked;
            const auto cert = sym_rank_certificate(c);
            if (cert.rank() != row_reduction_rank(c))
                rep.fail("rank mismatch for " + matrix_string(c));
            else if (!(principal_minor_det(c, cert.pivots) == cert.det) || cert.det.is_zero())
                rep.fail("certificate determinant mismatch for " + matrix_string(c));
        }
    return rep;
}

CheckReport verify_minor_choice(Index max_order) {
    CheckReport rep("minor-choice exhaustive order<=" + std::to_string(max_order));
    for (Index n = 0; n <= max_order; ++n)
        for (const auto& c : all_symmetric_matrices(n)) {
            ++rep.checked;
            const auto cert = sym_rank_certificate(c);
            const int expected = legendre(cert.det);
            bool ok = true;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && ok; ++mask) {
                const auto s = subset_from_mask(n, mask);
                const F3 det = principal_minor_det(c, s);
                if (static_cast<Index>(s.size()) > cert.rank())
                    ok = det.is_zero();
                else if (static_cast<Index>(s.size()) == cert.rank() && !det.is_zero())
                    ok = legendre(det) == expected;
            }
            if (!ok) rep.fail("maximal principal minors disagree for " + matrix_string(c));
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Graph-level checks

CheckReport verify_odd_rank_cancellation(const Triangulation& g) {
    CheckReport rep("odd-rank-cancellation");
    const std::uint64_t total = all_alpha(g);
    const std::uint64_t full = total - 1;
    EdgeWeights x, y;
    CyclotomicInt odd_sum;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto l = alpha_laplacian(g, mask, x);
        const auto ln = alpha_laplacian(g, mask ^ full, y);
        const Index r = sym_rank_certificate(l).rank();
        if (r % 2 == 0) continue;
        ++rep.checked;
        const auto gau = gau_exact(l);
        odd_sum += gau;
        if (sym_rank_certificate(ln).rank() != r)
            rep.fail("rank differs for alpha and -alpha at " + mask_string(mask, g.face_count()));
        else if (!(gau + gau_exact(ln) == CyclotomicInt{}))
            rep.fail("Gaussian sums of alpha and -alpha do not cancel at " + mask_string(mask, g.face_count()));
    }
    if (!(odd_sum == CyclotomicInt{})) {
        std::ostringstream os;
        os << "odd-rank total is " << odd_sum;
        rep.fail(os.str());
    }
    return rep;
}

CheckReport verify_negation_symmetry(const Triangulation& g) {
    CheckReport rep("negation-symmetry");
    const std::uint64_t total = all_alpha(g);
    EdgeWeights x, y;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++rep.checked;
        edge_weights_from_mask(g, mask, x);
        edge_weights_from_mask(g, mask ^ (total - 1), y);
        bool negated = true;
        for (std::size_t e = 0; e < x.size(); ++e) negated = negated && y[e] == -x[e];
        const auto wa = term_weight(g, x);
        const auto wb = term_weight(g, y);
        if (!negated)
            rep.fail("x(-alpha) != -x(alpha) at " + mask_string(mask, g.face_count()));
        else if (!(wa == wb))
            rep.fail("weights of alpha and -alpha differ at " + mask_string(mask, g.face_count()));
    }
    return rep;
}

CheckReport verify_minor_tree(const Triangulation& g, bool rank_window) {
    CheckReport rep(rank_window ? "minor-tree-sum (rank window)" : "minor-tree-sum (all W)");
    const std::uint64_t total = all_alpha(g);
    const Index n = g.vertex_count();
    EdgeWeights x;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto l = alpha_laplacian(g, mask, x);
        const Index r = sym_rank_certificate(l).rank();
        for (std::uint64_t wmask = 1; wmask < (std::uint64_t{1} << n); ++wmask) {
            const auto w = subset_from_mask(n, wmask);
            if (rank_window && n - static_cast<Index>(w.size()) > r + 1) continue;
            ++rep.checked;
            if (!check_minor_tree_sum(g, x, w))
                rep.fail("minor != tree sum at alpha " + mask_string(mask, g.face_count()) + ", W " + set_string(w));
        }
    }
    return rep;
}

CheckReport verify_witness_minimality(const Triangulation& g) {
    CheckReport rep("witness-minimality");
    const std::uint64_t total = all_alpha(g);
    const Index n = g.vertex_count();
    EdgeWeights x;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edge_weights_from_mask(g, mask, x);
        const auto wit = contraction_witness(g, x);
        ++rep.checked;
        const auto star = static_cast<Index>(wit.w_star.size());
        const F3 s_star = spanning_tree_sum(contract(g, wit.w_star), x);
        if (wit.tree_sum.is_zero() || !(s_star == wit.tree_sum) || wit.contracted_vertex_count != n - star + 1) {
            rep.fail("witness inconsistent at alpha " + mask_string(mask, g.face_count()));
            continue;
        }
        for (std::uint64_t wmask = 1; wmask < (std::uint64_t{1} << n); ++wmask) {
            if (std::popcount(wmask) >= star) continue;
            const auto w = subset_from_mask(n, wmask);
            if (!spanning_tree_sum(contract(g, w), x).is_zero()) {
                rep.fail("smaller W " + set_string(w) + " has nonzero tree sum at alpha " +
                         mask_string(mask, g.face_count()));
                break;
            }
        }
    }
    return rep;
}

CheckReport verify_heawood(const Triangulation& g) {
    CheckReport rep("heawood");
    ++rep.checked;
    const auto h = heawood_count(g);
    const auto b = tait_brute(g);
    if (3 * h != b) rep.fail("3 * heawood = " + std::to_string(3 * h) + " but brute = " + std::to_string(b));
    return rep;
}

CheckReport verify_gau_identity(const Triangulation& g) {
    CheckReport rep("gau-identity");
    ++rep.checked;
    if (!check_gau_identity(g)) {
        std::ostringstream os;
        os << "alpha-sum of Gaussian sums is " << gau_alpha_sum(g) << ", heawood count " << heawood_count(g);
        rep.fail(os.str());
    }
    return rep;
}

CheckReport verify_theorem(const Triangulation& g, int threads) {
    CheckReport rep("alpha-representation");
    ++rep.checked;
    const auto alpha = parallel_driver(g, threads).tait0;
    const auto h = heawood_count(g);
    const auto b = tait_brute(g);
    if (alpha != h || 3 * alpha != b)
        rep.fail("alpha = " + std::to_string(alpha) + ", heawood = " + std::to_string(h) + ", brute/3 = " +
                 std::to_string(b / 3));
    return rep;
}

}  // namespace tait
