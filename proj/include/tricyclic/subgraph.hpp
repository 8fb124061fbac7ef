#ifndef TRICYCLIC_SUBGRAPH_HPP
#define TRICYCLIC_SUBGRAPH_HPP

#include <string>
#include <vector>

#include "tricyclic/graph.hpp"

namespace tricyclic {

/// label[v] is the canonical position of vertex v. Equitable refinement plus
/// individualization; leaves are compared on their graph6 bit strings and the
/// largest wins. Twins (N(u) - v == N(v) - u) are tried only once per cell.
std::vector<int> canonical_labeling(const Graph& g);

/// graph6 of the canonically relabeled graph. Equal iff isomorphic.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// One embedding of a pattern into a host. subset is sorted ascending;
/// mapping[a] is the host vertex receiving pattern vertex a.
struct Occurrence {
    std::vector<int> subset;
    std::vector<int> mapping;
};

/// Injective maps f with host(f(a), f(b)) == pattern(a, b) for every pair,
/// diagonal included. Adjacency matrices give induced subgraphs; distance
/// matrices give distance-preserving ones. Deduplicated by subset (first
/// mapping found is kept) and sorted in colex order of the subset.
std::vector<Occurrence> matrix_embeddings(const IntMatrix& host, const IntMatrix& pattern, bool first_only = false);

IntMatrix adjacency_matrix(const Graph& g);

/// Subsets S of V(host) with host[S] isomorphic to pattern and distances in
/// host[S] equal to those in host. Throws ConnectivityError when either graph
/// is disconnected.
std::vector<Occurrence> find_distance_preserving_induced(const Graph& host, const Graph& pattern);

bool has_distance_preserving_induced(const Graph& host, const Graph& pattern);
bool has_induced_subgraph(const Graph& host, const Graph& pattern);

struct ForbiddenHit {
    int index; // 1..13
    Occurrence witness;
};

/// Every forbidden graph F_1..F_13 occurring in g as a distance-preserving
/// induced subgraph, with its colex-first witness, sorted by index.
std::vector<ForbiddenHit> scan_forbidden(const Graph& g);

/// Smallest forbidden index present, or 0.
int first_forbidden(const Graph& g);

} // namespace tricyclic

#endif // TRICYCLIC_SUBGRAPH_HPP
