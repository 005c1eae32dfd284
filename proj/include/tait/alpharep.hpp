#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tait/budget.hpp"
#include "tait/gf3linalg.hpp"
#include "tait/triangulation.hpp"

namespace tait {

using BigInt = boost::multiprecision::cpp_int;

/// Face signs alpha(F) in {-1, +1}.
///
/// As a bitmask, bit f set means alpha(F_f) = -1.
struct AlphaAssignment {
    std::vector<std::int8_t> signs;

    static AlphaAssignment from_mask(Index face_count, std::uint64_t mask);
    std::uint64_t mask() const;
    AlphaAssignment negated() const;
};

/// x_e = alpha(F'_e) + alpha(F''_e) in F3.
EdgeWeights edge_weights_from_alpha(const Triangulation& g, const AlphaAssignment& alpha);
void edge_weights_from_mask(const Triangulation& g, std::uint64_t mask, EdgeWeights& out);

/// The value sign * (-1)^halfrank * 3^(-halfrank), i.e. sign / (-3)^halfrank.
struct ExactWeight {
    int sign = 0;
    Index halfrank = 0;

    static ExactWeight zero() { return {}; }
    bool is_zero() const { return sign == 0; }
    friend bool operator==(const ExactWeight&, const ExactWeight&) = default;
};

/// Exact sum of ExactWeights at the fixed scale 3^m, m = floor((n-1)/2).
///
/// Terms are tallied as signed counts per half-rank and only expanded into
/// an arbitrary-precision integer on demand, so merging is plain integer
/// addition and independent of order.
class WeightAccumulator {
public:
    explicit WeightAccumulator(Index vertex_count);

    void add(const ExactWeight& w, std::int64_t multiplicity = 1);
    void merge(const WeightAccumulator& other);

    Index scale_exponent() const { return scale_; }
    /// Sum times 3^scale_exponent().
    BigInt scaled_sum() const;
    /// Exact integer value; throws std::logic_error if the sum is not an integer.
    BigInt integer_value() const;

private:
    Index scale_;
    std::vector<std::int64_t> net_;  // net_[k]: signed count of terms with halfrank k
};

/// Contracted set W*, realized as the complement of the rank certificate's
/// pivot set.
struct ContractionWitness {
    VertexSet w_star;
    Index contracted_vertex_count = 0;  // |V| - |W*| + 1 = rank + 1
    F3 tree_sum;                        // s(G/W*; x)
};

/// Weight of one term: zero for odd Laplacian rank, otherwise
/// legendre(det C_r) / (-3)^(r/2).
ExactWeight term_weight(const PivotCertificate& cert);

template <WeightedGraph G>
ExactWeight term_weight(const G& g, std::span<const F3> x) {
    return term_weight(sym_rank_certificate(laplacian(g, x)));
}

template <WeightedGraph G>
ContractionWitness contraction_witness(const G& g, std::span<const F3> x) {
    const auto cert = sym_rank_certificate(laplacian(g, x));
    ContractionWitness wit;
    std::size_t p = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (p < cert.pivots.size() && cert.pivots[p] == v)
            ++p;
        else
            wit.w_star.push_back(v);
    }
    wit.contracted_vertex_count = cert.rank() + 1;
    wit.tree_sum = cert.det;
    return wit;
}

/// Classification of a term by Laplacian rank and Legendre symbol of the
/// certificate minor.
struct TermClass {
    Index rank = 0;
    int legendre = 0;
    auto operator<=>(const TermClass&) const = default;
};

struct AlphaOptions {
    int threads = 1;
    int max_faces = budget::kMaxFaces;
    /// Fix alpha(F_0) = +1 and double; valid because even-rank weights are
    /// invariant under alpha -> -alpha and odd-rank weights are zero.
    bool sign_symmetry = false;
};

struct AlphaResult {
    std::uint64_t tait0 = 0;
    std::uint64_t terms = 0;  // alpha vectors accounted for (always 2^|F|)
    std::map<TermClass, std::uint64_t> classes;
    WeightAccumulator accumulator{1};

    std::map<Index, std::uint64_t> rank_histogram() const;
};

/// Tait0(G) by summing term weights over all 2^|F| face-sign vectors.
/// Throws BudgetExceeded if |F| exceeds options.max_faces.
AlphaResult tait0_alpha(const Triangulation& g, const AlphaOptions& options = {});

/// Same as tait0_alpha with the mask range split across `threads` workers,
/// each with a private accumulator merged at the end.
AlphaResult parallel_driver(const Triangulation& g, int threads, AlphaOptions options = {});

}  // namespace tait
