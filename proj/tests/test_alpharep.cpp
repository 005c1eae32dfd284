#include <doctest.h>

#include <bit>

#include "tait/alpharep.hpp"
#include "tait/oracles.hpp"

using namespace tait;

namespace {

// Masks over K4's four faces, by number of faces set to -1.
std::vector<std::uint64_t> k4_masks_with(int minus) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < 16; ++m)
        if (std::popcount(m) == minus) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("edge weights from alpha") {
    const auto k4 = generate({Family::k4});

    SUBCASE("constant alpha gives -1 on every edge") {
        const auto x = edge_weights_from_alpha(k4, AlphaAssignment::from_mask(4, 0));
        for (F3 w : x) CHECK(w == F3(-1));
        const auto y = edge_weights_from_alpha(k4, AlphaAssignment::from_mask(4, 0b1111));
        for (F3 w : y) CHECK(w == F3(1));
    }

    SUBCASE("one flipped face zeroes exactly its three edges") {
        for (FaceId f = 0; f < 4; ++f) {
            const auto x = edge_weights_from_alpha(k4, AlphaAssignment::from_mask(4, std::uint64_t{1} << f));
            int zeros = 0;
            for (EdgeId e = 0; e < 6; ++e) {
                const auto& fe = k4.face(f).edges;
                const bool on_face = std::ranges::find(fe, e) != fe.end();
                CHECK(x[static_cast<std::size_t>(e)].is_zero() == on_face);
                zeros += x[static_cast<std::size_t>(e)].is_zero();
            }
            CHECK(zeros == 3);
        }
    }

    SUBCASE("a proper face 2-coloring of the octahedron zeroes every edge") {
        const auto oct = generate({Family::octahedron});
        bool found = false;
        for (std::uint64_t m = 0; m < 256; ++m) {
            const auto x = edge_weights_from_alpha(oct, AlphaAssignment::from_mask(8, m));
            if (std::ranges::all_of(x, [](F3 w) { return w.is_zero(); })) found = true;
        }
        CHECK(found);
    }

    SUBCASE("mask and assignment routes agree, negation negates") {
        const auto ico = generate({Family::icosahedron});
        EdgeWeights x;
        for (std::uint64_t m : {0ULL, 1ULL, 0x5a5a5ULL, 0xfffffULL, 0x12345ULL}) {
            const auto a = AlphaAssignment::from_mask(20, m);
            CHECK(a.mask() == m);
            edge_weights_from_mask(ico, m, x);
            CHECK(x == edge_weights_from_alpha(ico, a));
            const auto neg = edge_weights_from_alpha(ico, a.negated());
            for (std::size_t e = 0; e < x.size(); ++e) CHECK(neg[e] == -x[e]);
        }
    }

    SUBCASE("incomplete assignment is rejected") {
        CHECK_THROWS_AS(edge_weights_from_alpha(k4, AlphaAssignment::from_mask(3, 0)), std::invalid_argument);
    }
}

TEST_CASE("term weights on K4 follow the three cases") {
    const auto k4 = generate({Family::k4});
    EdgeWeights x;

    // Constant alpha: rank 3, an even vertex count after contraction.
    for (std::uint64_t m : {0ULL, 15ULL}) {
        edge_weights_from_mask(k4, m, x);
        CHECK(sym_rank_certificate(laplacian(k4, x)).rank() == 3);
        CHECK(term_weight(k4, x).is_zero());
    }
    // One face differs: rank 3 again.
    for (int minus : {1, 3})
        for (auto m : k4_masks_with(minus)) {
            edge_weights_from_mask(k4, m, x);
            CHECK(sym_rank_certificate(laplacian(k4, x)).rank() == 3);
            CHECK(term_weight(k4, x).is_zero());
        }
    // Two against two: rank 2, weight (-1)/(-3) = +1/3.
    for (auto m : k4_masks_with(2)) {
        edge_weights_from_mask(k4, m, x);
        const auto w = term_weight(k4, x);
        CHECK(w == ExactWeight{-1, 1});
    }
}

TEST_CASE("zero edge weights give weight +1") {
    const auto g = generate({Family::octahedron});
    const EdgeWeights x(12, F3(0));
    CHECK(term_weight(g, x) == ExactWeight{1, 0});
}

TEST_CASE("contraction witness") {
    const auto k4 = generate({Family::k4});
    EdgeWeights x;

    SUBCASE("constant alpha") {
        edge_weights_from_mask(k4, 0, x);
        const auto w = contraction_witness(k4, x);
        CHECK(w.w_star.size() == 1);
        CHECK(w.contracted_vertex_count == 4);
        CHECK(w.tree_sum == F3(-1));
    }
    SUBCASE("two against two") {
        for (auto m : k4_masks_with(2)) {
            edge_weights_from_mask(k4, m, x);
            const auto w = contraction_witness(k4, x);
            CHECK(w.w_star.size() == 2);
            CHECK(w.contracted_vertex_count == 3);
            CHECK(w.tree_sum == F3(-1));
            CHECK(spanning_tree_sum(contract(k4, w.w_star), x) == F3(-1));
        }
    }
    SUBCASE("zero weights contract all but one vertex") {
        const auto oct = generate({Family::octahedron});
        const EdgeWeights zero(12, F3(0));
        const auto w = contraction_witness(oct, zero);
        CHECK(w.w_star.size() == 6);
        CHECK(w.contracted_vertex_count == 1);
        CHECK(w.tree_sum == F3(1));
    }
}

TEST_CASE("weight accumulator") {
    WeightAccumulator acc(4);  // scale 3^1
    CHECK(acc.scale_exponent() == 1);
    acc.add({-1, 1}, 6);  // six terms of +1/3
    CHECK(acc.scaled_sum() == 6);
    CHECK(acc.integer_value() == 2);

    WeightAccumulator other(4);
    other.add({1, 0});
    acc.merge(other);
    CHECK(acc.integer_value() == 3);

    WeightAccumulator frac(4);
    frac.add({-1, 1});
    CHECK_THROWS_AS(frac.integer_value(), std::logic_error);

    WeightAccumulator small(3);  // scale 3^1, half-rank 2 impossible
    CHECK_THROWS_AS(small.add({1, 2}), std::logic_error);
    CHECK_THROWS_AS(acc.merge(WeightAccumulator(8)), std::logic_error);

    WeightAccumulator zero(12);
    zero.add(ExactWeight::zero(), 100);
    CHECK(zero.scaled_sum() == 0);
}

TEST_CASE("tait0_alpha on K4 with its term breakdown") {
    const auto r = tait0_alpha(generate({Family::k4}));
    CHECK(r.tait0 == 2);
    CHECK(r.terms == 16);
    CHECK(r.rank_histogram() == std::map<Index, std::uint64_t>{{2, 6}, {3, 10}});
    CHECK(r.classes.at({2, -1}) == 6);
    CHECK(r.classes.at({3, -1}) == 5);
    CHECK(r.classes.at({3, 1}) == 5);
}

TEST_CASE("tait0_alpha on small triangulations matches frozen brute-force counts") {
    // Frozen from an independent edge-coloring enumeration.
    const std::vector<std::pair<FamilySpec, std::uint64_t>> expected = {
        {{Family::triangle}, 2},      {{Family::k4}, 2},           {{Family::bipyramid, 3}, 2},
        {{Family::octahedron}, 8},    {{Family::bipyramid, 5}, 10}, {{Family::bipyramid, 6}, 24},
        {{Family::apollonian, 1}, 2},
    };
    for (const auto& [spec, tait0] : expected) {
        CAPTURE(describe(spec));
        const auto g = generate(spec);
        CHECK(tait0_alpha(g).tait0 == tait0);
        AlphaOptions half;
        half.sign_symmetry = true;
        const auto h = tait0_alpha(g, half);
        CHECK(h.tait0 == tait0);
        CHECK(h.rank_histogram() == tait0_alpha(g).rank_histogram());
    }
}

TEST_CASE("triangle: two alpha vectors of weight 1") {
    const auto r = tait0_alpha(generate({Family::triangle}));
    CHECK(r.tait0 == 2);
    CHECK(r.classes.at({0, 1}) == 2);
    CHECK(r.rank_histogram().at(1) == 2);
}

TEST_CASE("parallel driver is independent of thread count") {
    for (const FamilySpec spec : {FamilySpec{Family::k4}, FamilySpec{Family::bipyramid, 4},
                                  FamilySpec{Family::apollonian, 1}}) {
        const auto g = generate(spec);
        const auto one = parallel_driver(g, 1);
        for (int t : {2, 3, 8, 64}) {
            const auto many = parallel_driver(g, t);
            CHECK(many.tait0 == one.tait0);
            CHECK(many.classes == one.classes);
            CHECK(many.accumulator.scaled_sum() == one.accumulator.scaled_sum());
        }
    }
    CHECK_THROWS_AS(parallel_driver(generate({Family::k4}), 0), std::invalid_argument);
}

TEST_CASE("face budget") {
    const auto g = generate({Family::icosahedron});
    AlphaOptions opt;
    opt.max_faces = 12;
    CHECK_THROWS_AS(tait0_alpha(g, opt), BudgetExceeded);
}

TEST_CASE("even-rank weights agree for alpha and -alpha") {
    const auto g = generate({Family::bipyramid, 4});
    EdgeWeights x, y;
    const std::uint64_t full = (std::uint64_t{1} << g.face_count()) - 1;
    for (std::uint64_t m = 0; m <= full; ++m) {
        edge_weights_from_mask(g, m, x);
        edge_weights_from_mask(g, m ^ full, y);
        const auto rx = sym_rank_certificate(laplacian(g, x)).rank();
        CHECK(rx == sym_rank_certificate(laplacian(g, y)).rank());
        CHECK(term_weight(g, x) == term_weight(g, y));
    }
}
