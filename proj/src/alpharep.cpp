#include "tait/alpharep.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <thread>

namespace tait {

AlphaAssignment AlphaAssignment::from_mask(Index face_count, std::uint64_t mask) {
    AlphaAssignment a;
    a.signs.resize(static_cast<std::size_t>(face_count));
    for (Index f = 0; f < face_count; ++f) a.signs[static_cast<std::size_t>(f)] = (mask >> f) & 1U ? -1 : 1;
    return a;
}

std::uint64_t AlphaAssignment::mask() const {
    std::uint64_t m = 0;
    for (std::size_t f = 0; f < signs.size(); ++f)
        if (signs[f] < 0) m |= std::uint64_t{1} << f;
    return m;
}

AlphaAssignment AlphaAssignment::negated() const {
    AlphaAssignment a = *this;
    for (auto& s : a.signs) s = static_cast<std::int8_t>(-s);
    return a;
}

EdgeWeights edge_weights_from_alpha(const Triangulation& g, const AlphaAssignment& alpha) {
    if (static_cast<Index>(alpha.signs.size()) != g.face_count())
        throw std::invalid_argument("alpha assignment does not cover every face");
    EdgeWeights x(g.edges().size());
    for (const auto& e : g.edges()) {
        const int a = alpha.signs[static_cast<std::size_t>(e.faces[0])];
        const int b = alpha.signs[static_cast<std::size_t>(e.faces[1])];
        if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw std::invalid_argument("alpha sign must be +1 or -1");
        x[static_cast<std::size_t>(e.id)] = F3(a + b);
    }
    return x;
}

void edge_weights_from_mask(const Triangulation& g, std::uint64_t mask, EdgeWeights& out) {
    out.resize(g.edges().size());
    for (const auto& e : g.edges()) {
        const bool a = (mask >> e.faces[0]) & 1U;
        const bool b = (mask >> e.faces[1]) & 1U;
        // +1 +1 -> 2 = -1, -1 -1 -> -2 = +1, mixed -> 0
        out[static_cast<std::size_t>(e.id)] = a != b ? F3(0) : (a ? F3(1) : F3(-1));
    }
}

// ---------------------------------------------------------------------------

WeightAccumulator::WeightAccumulator(Index vertex_count)
    : scale_((std::max<Index>(vertex_count, 1) - 1) / 2), net_(static_cast<std::size_t>(scale_) + 1, 0) {}

void WeightAccumulator::add(const ExactWeight& w, std::int64_t multiplicity) {
    if (w.is_zero()) return;
    if (w.halfrank < 0 || w.halfrank > scale_)
        throw std::logic_error("weight half-rank " + std::to_string(w.halfrank) + " exceeds accumulator scale " +
                               std::to_string(scale_));
    net_[static_cast<std::size_t>(w.halfrank)] += w.sign * multiplicity;
}

void WeightAccumulator::merge(const WeightAccumulator& other) {
    if (other.scale_ != scale_) throw std::logic_error("merging accumulators of different scale");
    for (std::size_t k = 0; k < net_.size(); ++k) net_[k] += other.net_[k];
}

BigInt WeightAccumulator::scaled_sum() const {
    BigInt total = 0;
    for (Index k = 0; k <= scale_; ++k) {
        const std::int64_t c = net_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt term = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(scale_ - k));
        term *= c;
        if (k % 2) term = -term;
        total += term;
    }
    return total;
}

BigInt WeightAccumulator::integer_value() const {
    const BigInt scale = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(scale_));
    const BigInt s = scaled_sum();
    if (s % scale != 0) throw std::logic_error("weight sum is not an integer: " + s.str() + " / " + scale.str());
    return s / scale;
}

ExactWeight term_weight(const PivotCertificate& cert) {
    const Index r = cert.rank();
    if (r % 2) return ExactWeight::zero();
    return {legendre(cert.det), r / 2};
}

std::map<Index, std::uint64_t> AlphaResult::rank_histogram() const {
    std::map<Index, std::uint64_t> h;
    for (const auto& [cls, count] : classes) h[cls.rank] += count;
    return h;
}

// ---------------------------------------------------------------------------

namespace {

// counts[r][legendre + 1]
using ClassCounts = std::vector<std::array<std::uint64_t, 3>>;

ClassCounts enumerate_range(const Triangulation& g, std::uint64_t begin, std::uint64_t end, int shift) {
    ClassCounts counts(static_cast<std::size_t>(g.vertex_count()) + 1, {0, 0, 0});
    EdgeWeights x;
    F3Matrix l, work;
    for (std::uint64_t i = begin; i < end; ++i) {
        edge_weights_from_mask(g, i << shift, x);
        laplacian_into(g, x, l);
        const auto cert = sym_rank_certificate(l, work);
        ++counts[static_cast<std::size_t>(cert.rank())][static_cast<std::size_t>(legendre(cert.det) + 1)];
    }
    return counts;
}

}  // namespace

AlphaResult parallel_driver(const Triangulation& g, int threads, AlphaOptions options) {
    const Index faces = g.face_count();
    const int cap = std::min(options.max_faces, budget::kHardMaxFaces);
    if (faces > cap)
        throw BudgetExceeded("alpha enumeration over 2^" + std::to_string(faces) + " vectors exceeds the face limit " +
                             std::to_string(cap));
    if (threads < 1) throw std::invalid_argument("thread count must be positive");

    const int shift = options.sign_symmetry ? 1 : 0;
    const std::uint64_t total = std::uint64_t{1} << (faces - shift);
    const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));

    std::vector<ClassCounts> partial(workers);
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = total / workers * w + std::min(w, total % workers);
            const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
            if (workers == 1)
                partial[w] = enumerate_range(g, begin, end, shift);
            else
                pool.emplace_back([&, w, begin, end] { partial[w] = enumerate_range(g, begin, end, shift); });
        }
    }

    AlphaResult result;
    result.accumulator = WeightAccumulator(g.vertex_count());
    const std::uint64_t mult = options.sign_symmetry ? 2 : 1;
    for (const auto& counts : partial) {
        for (std::size_t r = 0; r < counts.size(); ++r)
            for (int s = 0; s < 3; ++s) {
                const std::uint64_t c = counts[r][static_cast<std::size_t>(s)];
                if (c == 0) continue;
                const TermClass cls{static_cast<Index>(r), s - 1};
                result.classes[cls] += c * mult;
                result.terms += c * mult;
                if (r % 2 == 0)
                    result.accumulator.add(ExactWeight{s - 1, static_cast<Index>(r / 2)},
                                           static_cast<std::int64_t>(c * mult));
            }
    }

    const BigInt value = result.accumulator.integer_value();
    if (value < 0) throw std::logic_error("alpha sum is negative: " + value.str());
    result.tait0 = value.convert_to<std::uint64_t>();
    return result;
}

AlphaResult tait0_alpha(const Triangulation& g, const AlphaOptions& options) {
    return parallel_driver(g, options.threads, options);
}

}  // namespace tait
