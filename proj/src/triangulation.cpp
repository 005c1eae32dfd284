#include "tait/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace tait {
namespace {

std::string cycle_string(const std::vector<Vertex>& cycle) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
    return os.str();
}

std::size_t position_in(const std::vector<Vertex>& list, Vertex v) {
    return static_cast<std::size_t>(std::ranges::find(list, v) - list.begin());
}

}  // namespace

Triangulation::Triangulation(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {
    const auto n = static_cast<Index>(rotation_.size());
    if (n < 3) throw ValidationError("triangulation needs at least 3 vertices, got " + std::to_string(n));

    // Simple graph with symmetric adjacency.
    for (Vertex u = 0; u < n; ++u) {
        const auto& nb = rotation_[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Vertex v = nb[i];
            if (v < 0 || v >= n)
                throw ValidationError("vertex " + std::to_string(u) + ": neighbor " + std::to_string(v) +
                                      " out of range");
            if (v == u) throw ValidationError("loop at vertex " + std::to_string(u));
            if (std::find(nb.begin() + static_cast<std::ptrdiff_t>(i) + 1, nb.end(), v) != nb.end())
                throw ValidationError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
            const auto& back = rotation_[static_cast<std::size_t>(v)];
            if (std::ranges::find(back, u) == back.end())
                throw ValidationError("asymmetric adjacency: " + std::to_string(u) + " lists " + std::to_string(v) +
                                      " but not conversely");
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        Index reached = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : rotation_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != n)
            throw ValidationError("graph is disconnected: " + std::to_string(reached) + " of " + std::to_string(n) +
                                  " vertices reachable from vertex 0");
    }

    // Edges in lexicographic order.
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : rotation_[static_cast<std::size_t>(u)])
            if (u < v) edges_.push_back(Edge{u, v, 0, {-1, -1}});
    std::ranges::sort(edges_, [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 0; i < edges_.size(); ++i) edges_[i].id = static_cast<EdgeId>(i);

    // Face tracing over darts u->v. The dart following u->v is v->w with w
    // the successor of u in the rotation at v.
    std::vector<std::size_t> dart_base(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 0; u < n; ++u)
        dart_base[static_cast<std::size_t>(u) + 1] = dart_base[static_cast<std::size_t>(u)] +
                                                     rotation_[static_cast<std::size_t>(u)].size();
    const std::size_t darts = dart_base.back();
    std::vector<std::ptrdiff_t> dart_face(darts, -1);
    std::vector<std::vector<Vertex>> cycles;

    for (Vertex start = 0; start < n; ++start) {
        const auto& nb0 = rotation_[static_cast<std::size_t>(start)];
        for (std::size_t i0 = 0; i0 < nb0.size(); ++i0) {
            if (dart_face[dart_base[static_cast<std::size_t>(start)] + i0] >= 0) continue;
            std::vector<Vertex> cycle;
            Vertex u = start;
            std::size_t iu = i0;
            const auto face_index = static_cast<std::ptrdiff_t>(cycles.size());
            while (dart_face[dart_base[static_cast<std::size_t>(u)] + iu] < 0) {
                dart_face[dart_base[static_cast<std::size_t>(u)] + iu] = face_index;
                cycle.push_back(u);
                if (cycle.size() > darts) break;
                const Vertex v = rotation_[static_cast<std::size_t>(u)][iu];
                const auto& nbv = rotation_[static_cast<std::size_t>(v)];
                const std::size_t back = position_in(nbv, u);
                const std::size_t next = (back + 1) % nbv.size();
                u = v;
                iu = next;
            }
            cycles.push_back(std::move(cycle));
        }
    }

    for (auto& cycle : cycles) {
        std::vector<Vertex> sorted = cycle;
        std::ranges::sort(sorted);
        if (cycle.size() != 3 || std::ranges::adjacent_find(sorted) != sorted.end())
            throw ValidationError("non-triangular face " + cycle_string(cycle));
    }

    const auto e_count = static_cast<Index>(edges_.size());
    const auto f_count = static_cast<Index>(cycles.size());
    if (e_count != 3 * n - 6 || f_count != 2 * n - 4)
        throw ValidationError("Euler count mismatch: n=" + std::to_string(n) + ", |E|=" + std::to_string(e_count) +
                              " (expected " + std::to_string(3 * n - 6) + "), |F|=" + std::to_string(f_count) +
                              " (expected " + std::to_string(2 * n - 4) + ")");

    // Canonical face ids: rotate each cycle to start at its smallest vertex,
    // then order faces lexicographically.
    std::vector<std::array<Vertex, 3>> canon(cycles.size());
    for (std::size_t f = 0; f < cycles.size(); ++f) {
        auto c = cycles[f];
        std::ranges::rotate(c, std::ranges::min_element(c));
        canon[f] = {c[0], c[1], c[2]};
    }
    std::vector<std::size_t> order(cycles.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
    std::vector<FaceId> new_id(cycles.size());
    for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<FaceId>(k);

    faces_.resize(cycles.size());
    faces_at_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t f = 0; f < cycles.size(); ++f) {
        Face& face = faces_[static_cast<std::size_t>(new_id[f])];
        face.vertices = canon[f];
        for (int i = 0; i < 3; ++i) face.edges[i] = edge_between(face.vertices[i], face.vertices[(i + 1) % 3]);
    }
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (Vertex v : faces_[f].vertices) faces_at_[static_cast<std::size_t>(v)].push_back(static_cast<FaceId>(f));

    for (Edge& e : edges_) {
        const auto& nbu = rotation_[static_cast<std::size_t>(e.u)];
        const auto& nbv = rotation_[static_cast<std::size_t>(e.v)];
        const auto fwd = dart_face[dart_base[static_cast<std::size_t>(e.u)] + position_in(nbu, e.v)];
        const auto bwd = dart_face[dart_base[static_cast<std::size_t>(e.v)] + position_in(nbv, e.u)];
        e.faces = {new_id[static_cast<std::size_t>(fwd)], new_id[static_cast<std::size_t>(bwd)]};
        if (e.faces[0] == e.faces[1])
            throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " borders the same face on both sides");
    }
}

Triangulation Triangulation::from_oriented_faces(Index vertex_count,
                                                 const std::vector<std::array<Vertex, 3>>& faces) {
    // Face (a, b, c) fixes successors: succ_b(a) = c, succ_c(b) = a, succ_a(c) = b.
    std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(vertex_count));
    for (const auto& f : faces) {
        for (int i = 0; i < 3; ++i) {
            const Vertex a = f[i], b = f[(i + 1) % 3], c = f[(i + 2) % 3];
            if (b < 0 || b >= vertex_count || a < 0 || a >= vertex_count)
                throw ValidationError("face vertex out of range");
            auto [it, inserted] = succ[static_cast<std::size_t>(b)].emplace(a, c);
            if (!inserted) throw ValidationError("directed edge used twice in oriented face list");
        }
    }
    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(vertex_count));
    for (Vertex v = 0; v < vertex_count; ++v) {
        const auto& s = succ[static_cast<std::size_t>(v)];
        if (s.empty()) throw ValidationError("vertex " + std::to_string(v) + " lies on no face");
        auto& rot = rotation[static_cast<std::size_t>(v)];
        Vertex w = s.begin()->first;
        do {
            rot.push_back(w);
            auto it = s.find(w);
            if (it == s.end() || rot.size() > s.size())
                throw ValidationError("faces around vertex " + std::to_string(v) + " do not form a disk");
            w = it->second;
        } while (w != rot.front());
        if (rot.size() != s.size())
            throw ValidationError("faces around vertex " + std::to_string(v) + " do not form a single cycle");
    }
    return Triangulation(std::move(rotation));
}

EdgeId Triangulation::edge_between(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::ranges::lower_bound(edges_, std::pair{u, v}, std::less{},
                                       [](const Edge& e) { return std::pair{e.u, e.v}; });
    if (it == edges_.end() || it->u != u || it->v != v)
        throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return it->id;
}

std::pair<FaceId, FaceId> edge_face_incidence(const Triangulation& g, EdgeId e) {
    const auto& edge = g.edge(e);
    return {edge.faces[0], edge.faces[1]};
}

ContractedMultigraph contract(const Triangulation& g, const VertexSet& w) {
    const Index n = g.vertex_count();
    std::vector<char> in_w(static_cast<std::size_t>(n), 0);
    for (Vertex v : w) {
        if (v < 0 || v >= n) throw std::out_of_range("contract: vertex " + std::to_string(v) + " out of range");
        in_w[static_cast<std::size_t>(v)] = 1;
    }
    const auto w_size = static_cast<Index>(std::count(in_w.begin(), in_w.end(), 1));

    std::vector<Vertex> relabel(static_cast<std::size_t>(n));
    Index next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!in_w[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = next++;
    const Vertex merged = next;
    for (Vertex v = 0; v < n; ++v)
        if (in_w[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = merged;

    std::vector<ContractedMultigraph::Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        const Vertex a = relabel[static_cast<std::size_t>(e.u)];
        const Vertex b = relabel[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        edges.push_back({a, b, e.id});
    }
    return ContractedMultigraph(w_size == 0 ? n : n - w_size + 1, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

Index parse_index(std::string_view tok, std::size_t line_no) {
    Index value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

}  // namespace

Triangulation parse_rotation_system(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) lines.emplace_back(line_no, line);
    }
    if (lines.empty()) throw ParseError("empty input");

    const Index n = parse_index(lines[0].second, lines[0].first);
    if (n < 0) throw ParseError("line " + std::to_string(lines[0].first) + ": negative vertex count");
    if (static_cast<Index>(lines.size()) - 1 != n)
        throw ParseError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(lines.size() - 1));

    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto [ln, line] = lines[k];
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(ln) + ": missing ':' after vertex id");
        const Vertex v = parse_index(trim(line.substr(0, colon)), ln);
        if (v < 0 || v >= n) throw ParseError("line " + std::to_string(ln) + ": vertex id out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError("line " + std::to_string(ln) + ": vertex " + std::to_string(v) + " listed twice");
        seen[static_cast<std::size_t>(v)] = 1;
        auto& rot = rotation[static_cast<std::size_t>(v)];
        for (auto tok : split_ws(line.substr(colon + 1))) {
            const Vertex u = parse_index(tok, ln);
            if (u < 0 || u >= n)
                throw ParseError("line " + std::to_string(ln) + ": neighbor " + std::to_string(u) + " out of range");
            if (std::ranges::find(rot, u) != rot.end())
                throw ParseError("line " + std::to_string(ln) + ": duplicate neighbor " + std::to_string(u) +
                                 " of vertex " + std::to_string(v));
            rot.push_back(u);
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : rotation[static_cast<std::size_t>(u)])
            if (std::ranges::find(rotation[static_cast<std::size_t>(v)], u) == rotation[static_cast<std::size_t>(v)].end())
                throw ParseError("asymmetric adjacency: " + std::to_string(u) + " lists " + std::to_string(v) +
                                 " but not conversely");
    return Triangulation(std::move(rotation));
}

std::string serialize_rotation_system(const Triangulation& g) {
    std::ostringstream os;
    os << g.vertex_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << v << ':';
        for (Vertex u : g.rotation(v)) os << ' ' << u;
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Generators

Family parse_family(std::string_view name) {
    if (name == "triangle") return Family::triangle;
    if (name == "k4") return Family::k4;
    if (name == "bipyramid") return Family::bipyramid;
    if (name == "apollonian") return Family::apollonian;
    if (name == "octahedron") return Family::octahedron;
    if (name == "icosahedron") return Family::icosahedron;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::triangle: return "triangle";
        case Family::k4: return "k4";
        case Family::bipyramid: return "bipyramid";
        case Family::apollonian: return "apollonian";
        case Family::octahedron: return "octahedron";
        case Family::icosahedron: return "icosahedron";
    }
    return "?";
}

std::string describe(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::bipyramid:
        case Family::apollonian: return family_name(spec.family) + "(" + std::to_string(spec.parameter) + ")";
        default: return family_name(spec.family);
    }
}

namespace {

using FaceList = std::vector<std::array<Vertex, 3>>;

FaceList k4_faces() { return {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}; }

// Cycle 0..k-1 with apexes k (above) and k+1 (below).
FaceList bipyramid_faces(Index k) {
    FaceList faces;
    for (Index i = 0; i < k; ++i) {
        const Index j = (i + 1) % k;
        faces.push_back({i, j, k});
        faces.push_back({j, i, k + 1});
    }
    return faces;
}

// Apex 0, upper ring 1..5, lower ring 6..10, apex 11; lower vertex i sits
// between upper vertices i and i+1.
FaceList icosahedron_faces() {
    FaceList faces;
    auto up = [](Index i) { return 1 + (i % 5); };
    auto lo = [](Index i) { return 6 + (i % 5); };
    for (Index i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i + 1), up(i), lo(i)});
        faces.push_back({up(i + 1), lo(i), lo(i + 1)});
        faces.push_back({lo(i + 1), lo(i), 11});
    }
    return faces;
}

Index apollonian_vertex_count(int depth) {
    Index n = 4, f = 4;
    for (int d = 0; d < depth; ++d) {
        n += f;
        f *= 3;
        if (n > (Index{1} << 40)) break;
    }
    return n;
}

}  // namespace

Triangulation generate(const FamilySpec& spec, Index max_vertices) {
    auto check_n = [&](Index n) {
        if (n > max_vertices)
            throw std::out_of_range(describe(spec) + " has " + std::to_string(n) + " vertices, above the limit " +
                                    std::to_string(max_vertices));
    };
    switch (spec.family) {
        case Family::triangle:
            return Triangulation::from_oriented_faces(3, {{0, 1, 2}, {0, 2, 1}});
        case Family::k4:
            return Triangulation::from_oriented_faces(4, k4_faces());
        case Family::octahedron:
            return Triangulation::from_oriented_faces(6, bipyramid_faces(4));
        case Family::icosahedron:
            return Triangulation::from_oriented_faces(12, icosahedron_faces());
        case Family::bipyramid: {
            if (spec.parameter < 3) throw std::out_of_range("bipyramid cycle length must be at least 3");
            check_n(spec.parameter + 2);
            return Triangulation::from_oriented_faces(spec.parameter + 2, bipyramid_faces(spec.parameter));
        }
        case Family::apollonian: {
            if (spec.parameter < 0) throw std::out_of_range("apollonian depth must be non-negative");
            check_n(apollonian_vertex_count(spec.parameter));
            FaceList faces = k4_faces();
            Index n = 4;
            for (int d = 0; d < spec.parameter; ++d) {
                FaceList next;
                next.reserve(faces.size() * 3);
                for (const auto& [a, b, c] : faces) {
                    const Index v = n++;
                    next.push_back({a, b, v});
                    next.push_back({b, c, v});
                    next.push_back({c, a, v});
                }
                faces = std::move(next);
            }
            return Triangulation::from_oriented_faces(n, faces);
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace tait
