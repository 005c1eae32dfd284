#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tait/alpharep.hpp"
#include "tait/oracles.hpp"
#include "tait/triangulation.hpp"
#include "tait/verify.hpp"

namespace tait::cli {
namespace {

using nlohmann::json;

struct GraphOptions {
    std::string file;
    std::string family;
    std::optional<int> size;
    std::optional<int> depth;
};

struct LoadedGraph {
    std::string name;
    std::string source;  // "family" or "file"
    Triangulation graph;
};

/// Usage problems that CLI11 cannot express (e.g. missing graph source).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opt) {
    auto* file = cmd->add_option("--graph", opt.file, "Rotation-system file");
    auto* fam = cmd->add_option("--family", opt.family,
                                "Generated family: triangle, k4, bipyramid, apollonian, octahedron, icosahedron");
    file->excludes(fam);
    cmd->add_option("--size", opt.size, "Cycle length for bipyramid");
    cmd->add_option("--depth", opt.depth, "Insertion depth for apollonian");
}

FamilySpec family_spec(const std::string& name, std::optional<int> size, std::optional<int> depth) {
    FamilySpec spec;
    try {
        spec.family = parse_family(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (spec.family == Family::bipyramid) spec.parameter = size.value_or(4);
    if (spec.family == Family::apollonian) spec.parameter = depth.value_or(size.value_or(1));
    return spec;
}

LoadedGraph load_graph(const GraphOptions& opt) {
    if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw ParseError("cannot open " + opt.file);
        std::stringstream ss;
        ss << in.rdbuf();
        return {opt.file, "file", parse_rotation_system(ss.str())};
    }
    if (opt.family.empty()) throw UsageError("one of --graph or --family is required");
    const auto spec = family_spec(opt.family, opt.size, opt.depth);
    return {describe(spec), "family", generate(spec)};
}

json graph_json(const LoadedGraph& g) {
    return {{"name", g.name},
            {"source", g.source},
            {"n", g.graph.vertex_count()},
            {"edges", g.graph.edge_count()},
            {"faces", g.graph.face_count()}};
}

std::string weight_string(const TermClass& cls) {
    if (cls.rank % 2 || cls.legendre == 0) return "0";
    const Index k = cls.rank / 2;
    const int sign = cls.legendre * (k % 2 ? -1 : 1);
    std::string denom = "1";
    if (k > 0) {
        BigInt d = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(k));
        denom = d.str();
    }
    return std::string(sign < 0 ? "-" : "+") + (k == 0 ? "1" : "1/" + denom);
}

json alpha_json(const AlphaResult& r) {
    json hist = json::object();
    for (const auto& [rank, count] : r.rank_histogram()) hist[std::to_string(rank)] = count;
    json classes = json::array();
    for (const auto& [cls, count] : r.classes)
        classes.push_back({{"rank", cls.rank},
                           {"legendre", cls.legendre},
                           {"count", count},
                           {"weight", weight_string(cls)},
                           {"contributes", cls.rank % 2 == 0}});
    return {{"tait0", r.tait0}, {"terms", r.terms}, {"rank_histogram", hist}, {"term_classes", classes}};
}

std::string histogram_summary(const AlphaResult& r) {
    std::string s;
    for (const auto& [rank, count] : r.rank_histogram())
        s += (s.empty() ? "" : ";") + std::to_string(rank) + ":" + std::to_string(count);
    return s;
}

template <class F>
auto timed(F&& f, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<std::string> expand_methods(const std::string& method) {
    if (method == "all") return {"alpha", "brute", "heawood"};
    return {method};
}

struct Limits {
    int max_faces = budget::kMaxFaces;
    int max_brute_n = budget::kMaxBruteVertices;
};

// ---------------------------------------------------------------------------
// count

struct CountOptions {
    GraphOptions graph;
    std::string method = "alpha";
    int threads = 1;
    Limits limits;
    bool sign_symmetry = false;
    bool csv = false;
};

int cmd_count(const CountOptions& opt, std::ostream& out, std::ostream& err) {
    const LoadedGraph g = load_graph(opt.graph);
    json results = json::object();
    std::map<std::string, std::uint64_t> values;

    for (const auto& m : expand_methods(opt.method)) {
        double seconds = 0;
        if (m == "alpha") {
            AlphaOptions ao;
            ao.max_faces = opt.limits.max_faces;
            ao.sign_symmetry = opt.sign_symmetry;
            const auto r = timed([&] { return parallel_driver(g.graph, opt.threads, ao); }, seconds);
            results[m] = alpha_json(r);
            values[m] = r.tait0;
        } else if (m == "brute") {
            const auto t = timed([&] { return tait_brute(g.graph, opt.limits.max_brute_n); }, seconds);
            results[m] = {{"tait", t}, {"tait0", t / 3}};
            values[m] = t / 3;
        } else {
            const auto h = timed([&] { return heawood_count(g.graph, opt.limits.max_faces); }, seconds);
            results[m] = {{"tait0", h}};
            values[m] = h;
        }
        results[m]["seconds"] = seconds;
    }

    const std::uint64_t first = values.begin()->second;
    const bool agree = std::ranges::all_of(values, [&](const auto& kv) { return kv.second == first; });

    if (opt.csv) {
        out << "graph,method,n,edges,faces,tait0,seconds,threads\n";
        for (const auto& [m, v] : values)
            out << g.name << ',' << m << ',' << g.graph.vertex_count() << ',' << g.graph.edge_count() << ','
                << g.graph.face_count() << ',' << v << ',' << results[m]["seconds"].get<double>() << ','
                << (m == "alpha" ? opt.threads : 1) << '\n';
    } else {
        json report = {{"graph", graph_json(g)},
                       {"method", opt.method},
                       {"threads", opt.threads},
                       {"tait0", first},
                       {"results", results},
                       {"agreement", agree}};
        out << report.dump(2) << '\n';
    }
    if (!agree) {
        err << "disagreement on " << g.name << ':';
        for (const auto& [m, v] : values) err << ' ' << m << '=' << v;
        err << '\n';
        return kDisagreement;
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    GraphOptions graph;
    std::string lemma = "all";
    int order = 3;
    int min_order = 4;
    int max_order = 6;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    int threads = 1;
    bool json_out = false;
};

std::vector<LoadedGraph> verify_graphs(const GraphOptions& g) {
    if (!g.file.empty() || !g.family.empty()) return {load_graph(g)};
    std::vector<LoadedGraph> out;
    for (const FamilySpec spec : {FamilySpec{Family::triangle}, FamilySpec{Family::k4},
                                  FamilySpec{Family::bipyramid, 3}, FamilySpec{Family::octahedron}})
        out.push_back({describe(spec), "family", generate(spec)});
    return out;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    static const std::vector<std::string> matrix_lemmas = {"gauss", "congruence", "rank", "minor-choice"};
    static const std::vector<std::string> graph_lemmas = {"odd-rank", "negation", "minor-tree", "witness",
                                                          "heawood",  "identity", "theorem"};
    std::vector<std::string> lemmas;
    if (opt.lemma == "all") {
        lemmas = matrix_lemmas;
        lemmas.insert(lemmas.end(), graph_lemmas.begin(), graph_lemmas.end());
    } else {
        lemmas = {opt.lemma};
    }

    std::vector<std::pair<std::string, CheckReport>> reports;
    std::vector<LoadedGraph> graphs;
    for (const auto& lemma : lemmas) {
        if (lemma == "gauss") {
            reports.emplace_back("", verify_gauss_exhaustive(opt.order));
            if (!opt.exhaustive)
                reports.emplace_back("", verify_gauss_random(opt.min_order, opt.max_order, opt.samples, opt.seed));
        } else if (lemma == "congruence") {
            reports.emplace_back("", verify_congruence(1, opt.max_order, opt.samples / 10 + 1, opt.seed));
        } else if (lemma == "rank") {
            reports.emplace_back("", verify_rank_certificate(std::min(opt.order + 1, 4)));
        } else if (lemma == "minor-choice") {
            reports.emplace_back("", verify_minor_choice(std::min(opt.order + 1, 4)));
        } else {
            if (graphs.empty()) graphs = verify_graphs(opt.graph);
            for (const auto& g : graphs) {
                CheckReport rep;
                if (lemma == "odd-rank") rep = verify_odd_rank_cancellation(g.graph);
                else if (lemma == "negation") rep = verify_negation_symmetry(g.graph);
                else if (lemma == "minor-tree") rep = verify_minor_tree(g.graph, false);
                else if (lemma == "witness") rep = verify_witness_minimality(g.graph);
                else if (lemma == "heawood") rep = verify_heawood(g.graph);
                else if (lemma == "identity") rep = verify_gau_identity(g.graph);
                else if (lemma == "theorem") rep = verify_theorem(g.graph, opt.threads);
                else throw UsageError("unknown lemma '" + lemma + "'");
                reports.emplace_back(g.name, std::move(rep));
            }
        }
    }

    bool ok = true;
    json arr = json::array();
    for (const auto& [graph, rep] : reports) {
        ok = ok && rep.passed();
        if (opt.json_out) {
            arr.push_back({{"check", rep.name},
                           {"graph", graph},
                           {"checked", rep.checked},
                           {"failures", rep.failures},
                           {"samples", rep.samples},
                           {"passed", rep.passed()}});
        } else {
            out << (rep.passed() ? "PASS " : "FAIL ") << rep.name << (graph.empty() ? "" : " [" + graph + "]")
                << ": " << rep.checked << " checked, " << rep.failures << " failures\n";
            for (const auto& s : rep.samples) out << "    " << s << '\n';
        }
    }
    if (opt.json_out) out << json{{"checks", arr}, {"passed", ok}}.dump(2) << '\n';
    return ok ? kSuccess : kDisagreement;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const GraphOptions& opt, std::ostream& out) {
    if (opt.family.empty()) throw UsageError("gen requires --family");
    out << serialize_rotation_system(load_graph(opt).graph);
    return kSuccess;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
    std::string family = "apollonian";
    std::optional<int> from;
    std::optional<int> to;
    std::optional<int> size;
    std::optional<int> depth;
    std::string method = "all";
    std::vector<int> threads{1};
    Limits limits;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<FamilySpec> specs;
    const auto base = family_spec(opt.family, opt.size, opt.depth);
    if (base.family == Family::bipyramid || base.family == Family::apollonian) {
        const int lo = opt.from.value_or(base.parameter);
        const int hi = opt.to.value_or(lo);
        for (int p = lo; p <= hi; ++p) specs.push_back({base.family, p});
    } else {
        specs.push_back(base);
    }

    out << "graph,method,n,faces,terms,seconds,threads,tait0,status,rank_histogram\n";
    bool agree = true;
    for (const auto& spec : specs) {
        const Triangulation g = generate(spec);
        const std::string name = describe(spec);
        std::optional<std::uint64_t> reference;
        auto row = [&](const std::string& m, std::uint64_t terms, double seconds, int threads,
                       std::optional<std::uint64_t> value, const std::string& status, const std::string& hist) {
            out << name << ',' << m << ',' << g.vertex_count() << ',' << g.face_count() << ',' << terms << ','
                << seconds << ',' << threads << ',' << (value ? std::to_string(*value) : "") << ',' << status << ','
                << hist << '\n';
            if (value) {
                if (reference && *reference != *value) {
                    agree = false;
                    err << "disagreement on " << name << ": " << m << '=' << *value << " vs " << *reference << '\n';
                }
                if (!reference) reference = value;
            }
        };
        for (const auto& m : expand_methods(opt.method)) {
            const std::vector<int> thread_list = m == "alpha" ? opt.threads : std::vector<int>{1};
            for (int t : thread_list) {
                double seconds = 0;
                try {
                    if (m == "alpha") {
                        AlphaOptions ao;
                        ao.max_faces = opt.limits.max_faces;
                        const auto r = timed([&] { return parallel_driver(g, t, ao); }, seconds);
                        row(m, r.terms, seconds, t, r.tait0, "ok", histogram_summary(r));
                    } else if (m == "brute") {
                        const auto v = timed([&] { return tait_brute(g, opt.limits.max_brute_n); }, seconds);
                        row(m, 0, seconds, t, v / 3, "ok", "");
                    } else {
                        const auto v = timed([&] { return heawood_count(g, opt.limits.max_faces); }, seconds);
                        row(m, std::uint64_t{1} << g.face_count(), seconds, t, v, "ok", "");
                    }
                } catch (const BudgetExceeded&) {
                    row(m, 0, 0.0, t, std::nullopt, "skipped", "");
                }
            }
        }
    }
    return agree ? kSuccess : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tait coloring counts of planar triangulations via face-sign exponential sums", "tait"};
    app.require_subcommand(1);

    CountOptions count;
    auto* c = app.add_subcommand("count", "Count Tait colorings of one graph");
    add_graph_options(c, count.graph);
    c->add_option("--method", count.method, "alpha, brute, heawood or all")
        ->check(CLI::IsMember({"alpha", "brute", "heawood", "all"}));
    c->add_option("--threads", count.threads, "Worker threads for the alpha method")->check(CLI::PositiveNumber);
    c->add_option("--max-faces", count.limits.max_faces, "Face limit for alpha and heawood");
    c->add_option("--max-brute-n", count.limits.max_brute_n, "Vertex limit for brute-force coloring");
    c->add_flag("--sign-symmetry", count.sign_symmetry, "Enumerate half the alpha vectors and double");
    c->add_flag("--csv", count.csv, "CSV instead of JSON");
    c->add_flag("--json", "JSON report (default)");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Run the oracle check suite");
    add_graph_options(v, verify.graph);
    v->add_option("--lemma", verify.lemma,
                  "gauss, congruence, rank, minor-choice, odd-rank, negation, minor-tree, witness, heawood, "
                  "identity, theorem or all");
    v->add_option("--order", verify.order, "Largest order for exhaustive matrix sweeps")->check(CLI::Range(0, 5));
    v->add_option("--min-order", verify.min_order, "Smallest order for random matrix sweeps")->check(CLI::Range(1, 9));
    v->add_option("--max-order", verify.max_order, "Largest order for random matrix sweeps")->check(CLI::Range(1, 9));
    v->add_option("--samples", verify.samples, "Random matrices per sweep");
    v->add_option("--seed", verify.seed, "Random seed");
    v->add_flag("--exhaustive", verify.exhaustive, "Exhaustive sweeps only");
    v->add_option("--threads", verify.threads, "Worker threads for the alpha method")->check(CLI::PositiveNumber);
    v->add_flag("--json", verify.json_out, "JSON report");

    GraphOptions gen;
    auto* g = app.add_subcommand("gen", "Print a generated triangulation as rotation-system text");
    add_graph_options(g, gen);

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Time counting methods over a family sweep, CSV output");
    b->add_option("--family", bench.family, "Generated family");
    b->add_option("--size", bench.size, "Cycle length for bipyramid");
    b->add_option("--depth", bench.depth, "Insertion depth for apollonian");
    b->add_option("--from", bench.from, "First family parameter of the sweep");
    b->add_option("--to", bench.to, "Last family parameter of the sweep");
    b->add_option("--method", bench.method, "alpha, brute, heawood or all")
        ->check(CLI::IsMember({"alpha", "brute", "heawood", "all"}));
    b->add_option("--threads", bench.threads, "Thread counts for alpha rows")->check(CLI::PositiveNumber);
    b->add_option("--max-faces", bench.limits.max_faces, "Face limit for alpha and heawood");
    b->add_option("--max-brute-n", bench.limits.max_brute_n, "Vertex limit for brute-force coloring");
    b->add_flag("--csv", "CSV output (default)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (c->parsed()) return cmd_count(count, out, err);
        if (v->parsed()) return cmd_verify(verify, out);
        if (g->parsed()) return cmd_gen(gen, out);
        if (b->parsed()) return cmd_bench(bench, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}

}  // namespace tait::cli
