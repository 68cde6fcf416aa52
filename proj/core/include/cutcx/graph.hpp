#ifndef CUTCX_GRAPH_HPP
#define CUTCX_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

/**
 * Finite simple undirected graph on {0, ..., n-1}, n <= 64.
 *
 * Immutable once built. Graphs produced by induced_subgraph() carry the
 * original vertex name of every relabeled vertex so witnesses can be reported
 * in the parent's coordinates.
 */
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(int u, int v) const { return neighbors_[static_cast<std::size_t>(u)].contains(v); }
    VertexSet neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Edges {u, v} with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    /// Name of vertex v in the graph this one was induced from (identity otherwise).
    int original_label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& original_labels() const { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.neighbors_ == b.neighbors_;
    }

private:
    friend Graph induced_subgraph(const Graph& g, VertexSet u);

    int n_ = 0;
    std::vector<VertexSet> neighbors_;
    std::vector<int> labels_;
};

/// Circulant graph C_n(S): x ~ y iff (x - y mod n) lies in S or -S.
Graph circulant(int n, const std::vector<int>& connection_set);

/// W_n = C_n({1, 2}).
Graph squared_cycle(int n);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// G[U], relabeled 0..|U|-1 in ascending order of U.
Graph induced_subgraph(const Graph& g, VertexSet u);

/// True iff G has at most one connected component (the 0-vertex graph is connected).
bool is_connected(const Graph& g);

/// Connectivity of G[U] evaluated in place, without building the subgraph.
bool is_connected_within(const Graph& g, VertexSet u);

/// True iff U contains no edge of G.
bool is_independent(const Graph& g, VertexSet u);

/// True iff U induces a complete subgraph.
bool is_clique(const Graph& g, VertexSet u);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

}  // namespace cutcx

#endif  // CUTCX_GRAPH_HPP
