#ifndef TRICYCLIC_GRAPH_HPP
#define TRICYCLIC_GRAPH_HPP

#include <bitset>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricyclic/matrix.hpp"

namespace tricyclic {

/// Largest order representable in single-byte or short-form graph6.
inline constexpr int kMaxVertices = 126;

using VertexSet = std::bitset<128>;
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex. Every operation that
/// "modifies" a graph returns a new one.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws ParameterError on loops, out-of-range endpoints or n outside
    /// [0, kMaxVertices]. Duplicate edges are merged.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }
    std::vector<int> neighbor_list(int v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;

    /// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
    Graph induced(std::span<const int> vertices) const;

    /// Vertex v of this graph becomes perm[v].
    Graph relabeled(std::span<const int> perm) const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
};

/// Incremental construction for generators.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) : n_(n) {}

    int add_vertex() { return n_++; }
    int vertex_count() const { return n_; }
    void add_edge(int u, int v) { edges_.emplace_back(u, v); }
    void add_clique(std::span<const int> vertices);

    /// Hangs a fresh path of `length` edges off `anchor`; returns the far end
    /// (or `anchor` itself when length is 0).
    int add_pendant_path(int anchor, int length);

    /// Joins u and v by a path of `length` >= 1 edges through fresh vertices.
    void add_path_between(int u, int v, int length);

    Graph build() const { return Graph(n_, edges_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/// Hop distances. The diagonal is zero and every entry is finite.
using DistanceMatrix = IntMatrix;

/// Distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Throws ConnectivityError naming two mutually unreachable vertices.
DistanceMatrix distance_matrix(const Graph& g);

/// Throws ConnectivityError naming a vertex unreachable from vertex 0.
void require_connected(const Graph& g);

/// m - n + 1; 3 means tricyclic. Throws ConnectivityError when disconnected.
int cyclomatic_number(const Graph& g);

/// graph6 decoding. Accepts an optional ">>graph6<<" header. Throws
/// ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Byte-exact graph6 under the current labeling.
std::string write_graph6(const Graph& g);

/// Graphviz DOT, vertex ids as labels.
std::string write_dot(const Graph& g, std::string_view name = "G");

} // namespace tricyclic

#endif // TRICYCLIC_GRAPH_HPP
