// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "tait/alpharep.hpp"
#include "tait/oracles.hpp"
#include "tait/verify.hpp"

using namespace tait;
using nlohmann::json;

namespace {

// Wall-clock limits, seconds.
constexpr double kK4Seconds = 1.0;
constexpr double kGaussSeconds = 30.0;
constexpr double kIcosahedronSeconds = 300.0;

constexpr std::uint64_t kRandomMatrices = 10000;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void require(const CheckReport& rep, const std::string& where) {
        std::ostringstream s;
        s << rep.name << " [" << where << "] " << rep.failures << "/" << rep.checked << " failed";
        for (const auto& sample : rep.samples) s << " (" << sample << ")";
        require(rep.passed(), s.str());
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return code == cli::kSuccess || code == cli::kDisagreement ? json::parse(out.str()) : json{};
}

std::vector<FamilySpec> small_corpus() {
    return {{Family::triangle},     {Family::k4},           {Family::bipyramid, 3}, {Family::bipyramid, 4},
            {Family::bipyramid, 5}, {Family::bipyramid, 6}, {Family::octahedron},   {Family::apollonian, 1}};
}

Outcome k4_ground_truth() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    const auto j = run_cli({"count", "--family", "k4", "--method", "all"}, code);
    const double secs = seconds_since(t0);
    o.require(code == cli::kSuccess, "exit code " + std::to_string(code));
    if (!j.is_null()) {
        o.require(j["results"]["alpha"]["tait0"] == 2, "alpha != 2");
        o.require(j["results"]["brute"]["tait0"] == 2, "brute != 2");
        o.require(j["results"]["heawood"]["tait0"] == 2, "heawood != 2");
    }

    // Classify the 16 alpha vectors by how many faces carry -1.
    const auto g = generate({Family::k4});
    int constant = 0, one_differs = 0, contributing = 0;
    EdgeWeights x;
    for (std::uint64_t m = 0; m < 16; ++m) {
        edge_weights_from_mask(g, m, x);
        const auto rank = sym_rank_certificate(laplacian(g, x)).rank();
        const auto w = term_weight(g, x);
        const int minus = std::popcount(m);
        if (minus == 0 || minus == 4) constant += rank == 3 && w.is_zero();
        else if (minus == 1 || minus == 3) one_differs += rank == 3 && w.is_zero();
        else contributing += rank == 2 && w == ExactWeight{-1, 1};
    }
    o.require(constant == 2, "constant alpha rank-3 zero-weight count " + std::to_string(constant));
    o.require(one_differs == 8, "one-face-differs rank-3 zero-weight count " + std::to_string(one_differs));
    o.require(contributing == 6, "+1/3 contributors " + std::to_string(contributing));
    o.require(secs < kK4Seconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome gauss_closed_form() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto ex = verify_gauss_exhaustive(3);
    o.require(ex, "order<=3");
    o.require(ex.checked == 1 + 3 + 27 + 729, "exhaustive count " + std::to_string(ex.checked));
    const auto rnd = verify_gauss_random(4, 6, kRandomMatrices, kSeed);
    o.require(rnd, "orders 4-6");
    o.require(rnd.checked >= kRandomMatrices, "random count " + std::to_string(rnd.checked));
    const double secs = seconds_since(t0);
    o.require(secs < kGaussSeconds, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome minor_choice() {
    Outcome o;
    o.require(verify_minor_choice(4), "order<=4");
    return o;
}

Outcome odd_rank_cancellation() {
    Outcome o;
    for (const FamilySpec spec :
         {FamilySpec{Family::k4}, FamilySpec{Family::triangle}, FamilySpec{Family::bipyramid, 3}, FamilySpec{Family::octahedron}})
        o.require(verify_odd_rank_cancellation(generate(spec)), describe(spec));
    return o;
}

Outcome minor_tree() {
    Outcome o;
    for (const FamilySpec spec : {FamilySpec{Family::k4}, FamilySpec{Family::bipyramid, 3}})
        o.require(verify_minor_tree(generate(spec), true), describe(spec));
    return o;
}

Outcome heawood_vs_brute() {
    Outcome o;
    for (const auto& spec : small_corpus()) o.require(verify_heawood(generate(spec)), describe(spec));
    return o;
}

Outcome end_to_end() {
    Outcome o;
    for (const auto& spec : small_corpus()) o.require(verify_theorem(generate(spec), 1), describe(spec));

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    const auto j = run_cli({"count", "--family", "icosahedron", "--method", "alpha", "--threads", "8"}, code);
    const auto alpha = j.is_null() ? std::uint64_t{0} : j["tait0"].get<std::uint64_t>();
    const double secs = seconds_since(t0);
    const auto h = heawood_count(generate({Family::icosahedron}));
    o.require(code == cli::kSuccess, "icosahedron exit code " + std::to_string(code));
    o.require(alpha == h, "icosahedron alpha " + std::to_string(alpha) + " vs heawood " + std::to_string(h));
    o.require(secs < kIcosahedronSeconds, "icosahedron took " + std::to_string(secs) + " s");
    return o;
}

Outcome thread_determinism() {
    Outcome o;
    std::string reference;
    for (int t : {1, 2, 8}) {
        int code = 0;
        auto j = run_cli({"count", "--family", "icosahedron", "--threads", std::to_string(t)}, code);
        o.require(code == cli::kSuccess, "exit code " + std::to_string(code) + " at " + std::to_string(t) + " threads");
        if (j.is_null()) continue;
        j["results"]["alpha"].erase("seconds");
        j.erase("threads");
        const auto dump = j.dump();
        if (reference.empty()) reference = dump;
        o.require(dump == reference, "report differs at " + std::to_string(t) + " threads");
    }
    return o;
}

Outcome witness_minimality() {
    Outcome o;
    for (const FamilySpec spec : {FamilySpec{Family::k4}, FamilySpec{Family::triangle}})
        o.require(verify_witness_minimality(generate(spec)), describe(spec));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 K4 ground truth and term breakdown", k4_ground_truth},
        {"2 Gaussian sum closed form", gauss_closed_form},
        {"3 maximal principal minors share a Legendre symbol", minor_choice},
        {"4 odd-rank pair cancellation", odd_rank_cancellation},
        {"5 principal minor equals tree sum of G/W", minor_tree},
        {"6 heawood x 3 equals brute force", heawood_vs_brute},
        {"7 alpha, brute force and heawood agree; icosahedron", end_to_end},
        {"8 thread-count determinism on icosahedron", thread_determinism},
        {"9 witness minimality", witness_minimality},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << seconds_since(t0) << " s)"
                  << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
