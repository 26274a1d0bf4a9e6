#ifndef HG_HYPERGRAPH_HPP
#define HG_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

// Vertices are 1..n. Edge indices are 1..m and stay stable under queries;
// duplicate edge sets are allowed, identity is the index.
using Vertex = int;
using EdgeIndex = int;

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

struct Flag {
    Vertex vertex;
    EdgeIndex edge;
    friend bool operator==(const Flag&, const Flag&) = default;
    friend auto operator<=>(const Flag&, const Flag&) = default;
};

class Hypergraph {
public:
    Hypergraph() = default;
    // Edge vertex lists are normalized to ascending order; empty edges and
    // out-of-range vertex ids are rejected.
    Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // 1-based edge access; vertices ascending.
    const std::vector<Vertex>& edge(EdgeIndex j) const;
    const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

    int degree(Vertex v) const;
    std::vector<Vertex> neighbourhood(Vertex v) const;
    const std::vector<EdgeIndex>& incident_edges(Vertex v) const;

    bool edge_contains(EdgeIndex j, Vertex v) const;

    std::vector<Flag> flags() const;
    int flag_count() const;

    std::string serialize() const;

    // Exact content equality: same n, same edges in the same order.
    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
    std::vector<std::vector<EdgeIndex>> incident_;  // per vertex, ascending
};

// Bipartite incidence graph: v-vertices 1..n and one e-vertex per edge,
// joined by the flags of H.
struct IncidenceGraph {
    int vertexCount = 0;  // v-vertices
    int edgeCount = 0;    // e-vertices
    std::vector<Flag> flags;
};

IncidenceGraph incidence_graph(const Hypergraph& h);

// A hypergraph derived from a parent, with maps back to parent labels.
// vertexToParent[i] is the parent id of vertex i+1; edgeToParent[j] is the
// parent index of edge j+1, or 0 for synthetic edges.
struct Subhypergraph {
    Hypergraph hg;
    std::vector<Vertex> vertexToParent;
    std::vector<EdgeIndex> edgeToParent;

    Vertex parent_vertex(Vertex v) const { return vertexToParent[v - 1]; }
    EdgeIndex parent_edge(EdgeIndex j) const { return edgeToParent[j - 1]; }
};

// Subhypergraph induced by `keep`: vertices renumbered in ascending parent
// order, edges are the non-empty intersections e ∩ keep in index order.
Subhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<Vertex>& keep);

// H minus the listed vertices (complement of induced_subhypergraph).
Subhypergraph remove_vertices(const Hypergraph& h, const std::vector<Vertex>& drop);

// Vertices unchanged, listed edge indices removed.
Subhypergraph remove_edges(const Hypergraph& h, const std::vector<EdgeIndex>& drop);

struct Components {
    std::vector<int> componentOfVertex;            // 1-based vertex -> 0-based class
    std::vector<std::vector<Vertex>> vertices;     // per class, ascending
    std::vector<std::vector<EdgeIndex>> edgeIndices;  // per class, ascending
    int count() const { return static_cast<int>(vertices.size()); }
};

// Connectivity via a single traversal of the incidence graph; isolated
// vertices form singleton classes.
Components connected_components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);

}  // namespace hg

#endif
