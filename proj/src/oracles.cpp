#include "tait/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace tait {
namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::int64_t pow3(Index k) {
    std::int64_t p = 1;
    for (Index i = 0; i < k; ++i) p *= 3;
    return p;
}

struct WeightedEdge {
    Index u, v;
    F3 w;
};

bool connected(Index n, const std::vector<WeightedEdge>& edges) {
    UnionFind uf(static_cast<std::size_t>(n));
    Index components = n;
    for (const auto& e : edges)
        if (uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) --components;
    return components == 1;
}

F3 tree_sum_by_subsets(Index n, const std::vector<WeightedEdge>& edges) {
    const auto m = static_cast<unsigned>(edges.size());
    const auto k = static_cast<unsigned>(n - 1);
    if (k == 0) return F3(1);
    if (k > m) return F3(0);
    F3 total(0);
    // Gosper's hack over m-bit masks with k bits set.
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << m;
    while (mask < limit) {
        UnionFind uf(static_cast<std::size_t>(n));
        F3 product(1);
        bool tree = true;
        for (unsigned i = 0; i < m && tree; ++i) {
            if (!((mask >> i) & 1U)) continue;
            const auto& e = edges[i];
            tree = uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
            product *= e.w;
        }
        if (tree) total += product;
        const std::uint32_t c = mask & -mask;
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return total;
}

struct DeletionContraction {
    std::uint64_t calls = 0;
    std::uint64_t max_calls;

    F3 operator()(Index n, std::vector<WeightedEdge> edges) {
        if (++calls > max_calls)
            throw BudgetExceeded("deletion-contraction exceeded " + std::to_string(max_calls) + " calls");
        std::erase_if(edges, [](const WeightedEdge& e) { return e.u == e.v; });
        if (n == 1) return F3(1);
        if (!connected(n, edges)) return F3(0);
        const WeightedEdge e = edges.back();
        edges.pop_back();
        const F3 deleted = (*this)(n, edges);
        // Merge e.v into e.u, then move the last vertex into the freed slot.
        const Index last = n - 1;
        for (auto& f : edges) {
            if (f.u == e.v) f.u = e.u;
            if (f.v == e.v) f.v = e.u;
            if (e.v != last) {
                if (f.u == last) f.u = e.v;
                if (f.v == last) f.v = e.v;
            }
        }
        const F3 contracted = (*this)(n - 1, std::move(edges));
        return deleted + e.w * contracted;
    }
};

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t tait_brute(const Triangulation& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw BudgetExceeded("brute-force coloring limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                             std::to_string(g.vertex_count()));
    const auto m = static_cast<std::size_t>(g.edge_count());

    // Edges sharing a face with e (two per bordering face).
    std::vector<std::vector<std::size_t>> mates(m);
    for (const auto& f : g.faces())
        for (EdgeId a : f.edges)
            for (EdgeId b : f.edges)
                if (a != b) mates[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));

    // Most-constrained-first order: repeatedly take the edge with the most
    // already-ordered face-mates.
    std::vector<std::size_t> order;
    std::vector<char> placed(m, 0);
    std::vector<int> placed_mates(m, 0);
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t best = m;
        for (std::size_t e = 0; e < m; ++e)
            if (!placed[e] && (best == m || placed_mates[e] > placed_mates[best])) best = e;
        placed[best] = 1;
        order.push_back(best);
        for (std::size_t o : mates[best]) ++placed_mates[o];
    }

    std::vector<int> color(m, -1);
    std::uint64_t count = 0;
    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (depth == m) {
            ++count;
            return;
        }
        const std::size_t e = order[depth];
        for (int c = 0; c < 3; ++c) {
            const bool clash = std::ranges::any_of(mates[e], [&](std::size_t o) { return color[o] == c; });
            if (clash) continue;
            color[e] = c;
            self(self, depth + 1);
        }
        color[e] = -1;
    };
    search(search, 0);
    return count;
}

bool heawood_satisfied(const Triangulation& g, const SpinAssignment& sigma) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int sum = 0;
        for (FaceId f : g.faces_at(v)) sum += sigma.signs.at(static_cast<std::size_t>(f));
        if (sum % 3 != 0) return false;
    }
    return true;
}

std::uint64_t heawood_count(const Triangulation& g, int max_faces) {
    const Index faces = g.face_count();
    const int cap = std::min(max_faces, budget::kHardMaxFaces);
    if (faces > cap)
        throw BudgetExceeded("spin enumeration over 2^" + std::to_string(faces) + " vectors exceeds the face limit " +
                             std::to_string(cap));
    std::vector<std::uint64_t> incident(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (FaceId f : g.faces_at(v)) incident[static_cast<std::size_t>(v)] |= std::uint64_t{1} << f;
        degree[static_cast<std::size_t>(v)] = static_cast<int>(g.faces_at(v).size());
    }
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << faces;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < incident.size() && ok; ++v) {
            // Sum of spins = (#plus) - (#minus) = deg - 2 * #minus.
            const int minus = std::popcount(mask & incident[v]);
            ok = (degree[v] - 2 * minus) % 3 == 0;
        }
        if (ok) ++count;
    }
    return count;
}

F3 spanning_tree_sum(const ContractedMultigraph& h, std::span<const F3> x, std::uint64_t max_calls) {
    const Index n = h.vertex_count();
    std::vector<WeightedEdge> all, nonzero;
    for (const auto& e : h.edges()) {
        const WeightedEdge we{e.u, e.v, x[static_cast<std::size_t>(e.id)]};
        all.push_back(we);
        if (e.u != e.v && !we.w.is_zero()) nonzero.push_back(we);
    }
    if (n < 1 || !connected(n, all)) throw std::invalid_argument("spanning_tree_sum: graph is disconnected");
    // Trees through a zero-weight edge contribute nothing.
    if (nonzero.size() <= 20) return tree_sum_by_subsets(n, nonzero);
    DeletionContraction dc{0, max_calls};
    return dc(n, std::move(nonzero));
}

CyclotomicInt gau_exact(const SymF3Matrix& c, int max_order) {
    const Index n = c.rows();
    if (c.cols() != n) throw std::invalid_argument("gau_exact: matrix is not square");
    if (n > max_order)
        throw BudgetExceeded("Gaussian sum enumeration limited to order " + std::to_string(max_order) + ", got " +
                             std::to_string(n));
    // counts[t + 1] = #{y : y^T C y = t}
    std::array<std::int64_t, 3> counts{0, 0, 0};
    std::vector<int> y(static_cast<std::size_t>(n), 0);  // entries in {0, 1, -1}
    while (true) {
        int q = 0;
        for (Index i = 0; i < n; ++i) {
            const int yi = y[static_cast<std::size_t>(i)];
            if (yi == 0) continue;
            for (Index j = 0; j < n; ++j) q += c(i, j).value() * yi * y[static_cast<std::size_t>(j)];
        }
        ++counts[static_cast<std::size_t>(F3(q).value() + 1)];

        // Odometer step 0 -> 1 -> -1 -> carry.
        Index i = 0;
        for (; i < n; ++i) {
            int& d = y[static_cast<std::size_t>(i)];
            if (d == 0) { d = 1; break; }
            if (d == 1) { d = -1; break; }
            d = 0;
        }
        if (i == n) break;
    }

    // Gau = N0 + N1 w + N2 w^2 with w = (-1 + i sqrt3) / 2.
    const std::int64_t n0 = counts[1], n1 = counts[2], n2 = counts[0];
    // y and -y give the same value, so nonzero y pair up and N1, N2 are even.
    if (n1 % 2 != 0 || n2 % 2 != 0) throw std::logic_error("gau_exact: value counts are not even");
    return CyclotomicInt{n0 - (n1 + n2) / 2, 0} + CyclotomicInt::i_sqrt3((n1 - n2) / 2);
}

CyclotomicInt gau_closed_form(Index n, const PivotCertificate& cert) {
    const Index r = cert.rank();
    const std::int64_t sign = legendre(cert.det) * ((r / 2) % 2 ? -1 : 1);
    // (i/sqrt3)^(2k) = (-1)^k 3^-k; (i/sqrt3)^(2k+1) = (-1)^k 3^(-k-1) * i sqrt3
    if (r % 2 == 0) return {sign * pow3(n - r / 2), 0};
    return CyclotomicInt::i_sqrt3(sign * pow3(n - r / 2 - 1));
}

bool check_gau_closed_form(const SymF3Matrix& c) {
    return gau_exact(c) == gau_closed_form(c.rows(), sym_rank_certificate(c));
}

bool check_minor_tree_sum(const Triangulation& g, std::span<const F3> x, const VertexSet& w) {
    if (w.empty()) throw std::invalid_argument("check_minor_tree_sum: contracted set must be nonempty");
    std::vector<char> in_w(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : w) in_w.at(static_cast<std::size_t>(v)) = 1;
    std::vector<Index> kept;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!in_w[static_cast<std::size_t>(v)]) kept.push_back(v);
    const F3 minor = principal_minor_det(laplacian(g, x), kept);
    return minor == spanning_tree_sum(contract(g, w), x);
}

CyclotomicInt gau_alpha_sum(const Triangulation& g, int max_faces, int max_order) {
    const Index faces = g.face_count();
    const int cap = std::min(max_faces, budget::kHardMaxFaces);
    if (faces > cap)
        throw BudgetExceeded("alpha enumeration over 2^" + std::to_string(faces) + " vectors exceeds the face limit " +
                             std::to_string(cap));
    CyclotomicInt total;
    EdgeWeights x;
    SymF3Matrix l;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << faces); ++mask) {
        edge_weights_from_mask(g, mask, x);
        laplacian_into(g, x, l);
        total += gau_exact(l, max_order);
    }
    return total;
}

bool check_gau_identity(const Triangulation& g) {
    const CyclotomicInt total = gau_alpha_sum(g);
    const std::int64_t scale = pow3(g.vertex_count());
    if (total.b != 0 || total.a % scale != 0) return false;
    return static_cast<std::uint64_t>(total.a / scale) == heawood_count(g) && total.a >= 0;
}

}  // namespace tait
