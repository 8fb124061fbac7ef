#ifndef TRICYCLIC_STRUCTURE_HPP
#define TRICYCLIC_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "tricyclic/graph.hpp"

namespace tricyclic {

/// Lex-BFS visit order; its reverse is a perfect elimination ordering
/// exactly when the graph is chordal.
std::vector<int> lex_bfs_order(const Graph& g);

bool is_chordal(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // each sorted; list sorted
    std::vector<int> cut_vertices;        // sorted
    std::vector<std::vector<int>> membership; // vertex -> block indices
};

/// Biconnected components by DFS lowpoints. A bridge is a two-vertex block;
/// K_1 yields the single block {0}.
BlockDecomposition block_decomposition(const Graph& g);

/// Vertices left after repeatedly deleting degree-1 vertices (ascending).
std::vector<int> core_vertices(const Graph& g);

/// core_vertices for a connected tricyclic graph. Throws DomainError when
/// the cyclomatic number is not 3.
std::vector<int> base_vertices(const Graph& g);
Graph base_of(const Graph& g);

/// One of the fifteen kernel shapes of a tricyclic base, with the lengths of
/// its paths and cycles. Cycle parameters count vertices on the cycle, path
/// parameters count edges.
struct BaseType {
    std::string label; // "G3_1" .. "G3_7", "G4_1" .. "G4_4", "G6_1" .. "G6_3", "G7_1"
    std::vector<std::pair<std::string, int>> params;
};

/// Labels in the order they are tried.
const std::vector<std::string>& base_labels();

/// Template `label` instantiated with params (in the order base_type reports
/// them). Throws ParameterError on bad values.
Graph instantiate_base(const std::string& label, const std::vector<int>& params);

/// First template, in base_labels() order, with an instantiation isomorphic
/// to g. Throws DomainError unless g is connected, tricyclic and of minimum
/// degree >= 2; throws ClassificationError if nothing matches.
BaseType base_type(const Graph& g);

/// Every template label with some instantiation isomorphic to g.
std::vector<std::string> matching_base_labels(const Graph& g);

bool is_block_graph(const Graph& g);
bool is_block_star(const Graph& g);
bool is_loose_block_graph(const Graph& g);

enum class BlockTarget { BG, BGA };

/// Induced embedding into BGA, or into BG(p,q,3,2,2) for some p, q >= 2.
/// The BG family is nested, so BG(n+1, n+1) covers every p, q <= n+1.
/// Throws DomainError for n < 2.
bool embeds_as_induced(const Graph& g, BlockTarget target);

/// Block star, or loose, or embeds in BG or BGA. Throws DomainError when g
/// is not a block graph or n < 2.
bool blockgraph_lambda2_below(const Graph& g);

} // namespace tricyclic

#endif // TRICYCLIC_STRUCTURE_HPP
