#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tait/gf3linalg.hpp"

namespace tait {

/// Malformed rotation-system text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that is not a maximal planar graph.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vertex = Index;
using EdgeId = Index;
using FaceId = Index;

/// Vertex set given as a sorted list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Multigraph obtained by merging a vertex set into one vertex.
///
/// Kept vertices are renumbered in increasing order; the merged vertex, if
/// any, is last. Edges carry the id of the edge they came from, so weights
/// indexed by original edge id still apply. Loops are dropped.
class ContractedMultigraph {
public:
    struct Edge {
        Vertex u;
        Vertex v;
        EdgeId id;
    };

    ContractedMultigraph(Index vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {}

    Index vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    Index vertex_count_;
    std::vector<Edge> edges_;
};

/// Maximal planar graph on the sphere, with its rotation system and faces.
///
/// Edges are numbered in lexicographic order of (u, v) with u < v. Faces
/// come from face tracing; each face's vertex cycle starts at its smallest
/// vertex, and faces are numbered in lexicographic order of those cycles.
/// Immutable after construction.
class Triangulation {
public:
    struct Edge {
        Vertex u;  // u < v
        Vertex v;
        EdgeId id;
        std::array<FaceId, 2> faces;  // faces[0] traces u->v, faces[1] traces v->u
    };

    struct Face {
        std::array<Vertex, 3> vertices;  // traced cyclic order, smallest first
        std::array<EdgeId, 3> edges;     // edges[i] joins vertices[i] and vertices[i+1]
    };

    /// Builds from per-vertex cyclic neighbor lists and validates.
    /// Throws ValidationError.
    explicit Triangulation(std::vector<std::vector<Vertex>> rotation);

    /// Builds from consistently oriented triangles (every directed edge
    /// occurs exactly once). Throws ValidationError.
    static Triangulation from_oriented_faces(Index vertex_count,
                                             const std::vector<std::array<Vertex, 3>>& faces);

    Index vertex_count() const { return static_cast<Index>(rotation_.size()); }
    Index edge_count() const { return static_cast<Index>(edges_.size()); }
    Index face_count() const { return static_cast<Index>(faces_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const Face& face(FaceId f) const { return faces_.at(static_cast<std::size_t>(f)); }

    /// Cyclic neighbor order around v.
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
    /// Faces incident to v.
    const std::vector<FaceId>& faces_at(Vertex v) const { return faces_at_.at(static_cast<std::size_t>(v)); }
    Index degree(Vertex v) const { return static_cast<Index>(rotation(v).size()); }

    /// Edge id joining u and v; throws std::out_of_range if not adjacent.
    EdgeId edge_between(Vertex u, Vertex v) const;

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<FaceId>> faces_at_;
};

/// The two faces bordering edge e.
std::pair<FaceId, FaceId> edge_face_incidence(const Triangulation& g, EdgeId e);

/// Merges all vertices of w into one vertex. Empty w returns g unchanged.
ContractedMultigraph contract(const Triangulation& g, const VertexSet& w);

/// Parses the rotation-system text format:
///
///     n
///     0: a b c ...
///     1: ...
///
/// Blank lines and text after '#' are ignored. Throws ParseError or
/// ValidationError.
Triangulation parse_rotation_system(std::string_view text);

/// Emits the format read by parse_rotation_system.
std::string serialize_rotation_system(const Triangulation& g);

// ---------------------------------------------------------------------------
// Generators

enum class Family { triangle, k4, bipyramid, apollonian, octahedron, icosahedron };

struct FamilySpec {
    Family family = Family::k4;
    int parameter = 0;  // cycle length for bipyramid, depth for apollonian
};

inline constexpr Index kMaxGeneratedVertices = 256;

/// Parses a family name ("triangle", "k4", "bipyramid", "apollonian",
/// "octahedron", "icosahedron"). Throws std::invalid_argument.
Family parse_family(std::string_view name);
std::string family_name(Family f);
/// Human-readable descriptor such as "bipyramid(5)".
std::string describe(const FamilySpec& spec);

/// Throws std::out_of_range when the parameter is out of range or the
/// result would exceed `max_vertices`.
Triangulation generate(const FamilySpec& spec, Index max_vertices = kMaxGeneratedVertices);

}  // namespace tait
