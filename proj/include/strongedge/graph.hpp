#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongedge {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown by the graph6 / edge-list readers; `offset` is the byte (graph6) or line (edge list) at fault.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at " + std::to_string(offset) + ")"), _offset(offset) {}
    std::size_t offset() const { return _offset; }

private:
    std::size_t _offset;
};

/// Finite simple undirected graph. Edges are indexed canonically: pairs (u,v) with u<v in
/// lexicographic order. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return _n; }
    int size() const { return static_cast<int>(_edges.size()); }

    int degree(Vertex v) const { return static_cast<int>(_adjacency.at(v).size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return _adjacency.at(v); }
    const std::vector<Edge>& edges() const { return _edges; }
    const Edge& edge(EdgeId e) const { return _edges.at(e); }

    /// Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident(Vertex v) const { return _incident.at(v); }

    bool adjacent(Vertex u, Vertex v) const;

    /// Returns -1 when u and v are not adjacent.
    EdgeId edge_id(Vertex u, Vertex v) const;

    int max_degree() const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a._n == b._n && a._edges == b._edges; }

private:
    int _n = 0;
    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<std::vector<EdgeId>> _incident;
    std::vector<Edge> _edges;
};

/// Conflict graph of g: edges at line-graph distance 1 or 2. Strong edge-coloring of the base
/// graph is proper vertex coloring of this graph.
class ConflictGraph {
public:
    explicit ConflictGraph(const Graph& g);

    const Graph& base() const { return _base; }
    int size() const { return static_cast<int>(_sees.size()); }
    const std::vector<EdgeId>& sees(EdgeId e) const { return _sees.at(e); }
    bool sees(EdgeId a, EdgeId b) const;

private:
    Graph _base;
    std::vector<std::vector<EdgeId>> _sees;
    std::vector<std::vector<bool>> _matrix;
};

/// True iff e != f and the two edges are incident or joined by a third edge.
bool edge_sees(const Graph& g, EdgeId e, EdgeId f);

inline ConflictGraph build_conflict_graph(const Graph& g) { return ConflictGraph(g); }

struct VertexDeletion {
    Graph graph;
    /// old vertex id -> new id, -1 for the deleted vertex.
    std::vector<Vertex> vertex_map;
    /// old edge id -> new edge id, -1 for deleted edges.
    std::vector<EdgeId> edge_map;
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);

/// Short-form graph6 only (n <= 62).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Lines of "u v"; optional leading "n=<count>"; blank lines and '#' comments ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// A few named graphs used throughout the tests and the CLI.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
} // namespace named

} // namespace strongedge
