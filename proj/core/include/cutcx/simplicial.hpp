#ifndef CUTCX_SIMPLICIAL_HPP
#define CUTCX_SIMPLICIAL_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "cutcx/graph.hpp"
#include "cutcx/vertex_set.hpp"

namespace cutcx {

/// dim() of the void complex. Distinct from -1, the dimension of {∅}.
inline constexpr int kVoidDimension = std::numeric_limits<int>::min();

/**
 * Finite abstract simplicial complex on the ground set {0, ..., n-1}, stored
 * by its facets.
 *
 * Two degenerate values are kept apart:
 *   - the void complex has no faces at all (no facets);
 *   - the empty complex has exactly one face, ∅ (one facet, ∅).
 *
 * Facets are kept sorted by bit pattern, so equal complexes compare equal.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Keeps only the inclusion-maximal candidates; duplicates collapse.
    /// Throws std::invalid_argument on a vertex outside [0, n).
    static SimplicialComplex from_facets(int n, std::span<const VertexSet> candidate_faces);
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& candidate_faces);

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VertexSet{}}); }
    static SimplicialComplex simplex(int n, VertexSet vertices) { return SimplicialComplex(n, {vertices}); }

    int ground_size() const { return n_; }
    const std::vector<VertexSet>& facets() const& { return facets_; }
    std::vector<VertexSet> facets() && { return std::move(facets_); }
    std::size_t facet_count() const { return facets_.size(); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }

    /// Union of all facets.
    VertexSet vertex_set() const;

    bool contains_face(VertexSet s) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VertexSet> maximal_sorted) : n_(n), facets_(std::move(maximal_sorted)) {}

    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// Max facet size minus one; -1 for {∅}; kVoidDimension for the void complex.
int dim(const SimplicialComplex& c);

/// All facets have the same size. The void complex counts as pure.
bool is_pure(const SimplicialComplex& c);

/// All faces of dimension d, ascending by bit pattern, each exactly once.
std::vector<VertexSet> faces(const SimplicialComplex& c, int d);

/// faces_by_dimension(c)[d + 1] == faces(c, d), for -1 <= d <= dim(c).
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c);

/// f_0, f_1, ..., f_dim (the empty face is not counted).
std::vector<std::size_t> f_vector(const SimplicialComplex& c);

/// lk(τ) = {σ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}. Throws if τ is not a face.
SimplicialComplex link(const SimplicialComplex& c, VertexSet tau);

/// dl(τ) = {σ ∈ Δ : τ ⊄ σ}.
SimplicialComplex deletion(const SimplicialComplex& c, VertexSet tau);

/// Faces are the subsets of the ground set whose complements are non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// Inclusion-minimal non-faces within the ground set (Stanley–Reisner generators).
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c);

/// Faces are the cliques of g; facets are the maximal cliques.
SimplicialComplex clique_complex(const Graph& g);

/// Δ_k(G): facets are the (n-k)-subsets whose complement induces a disconnected graph.
SimplicialComplex cut_complex(const Graph& g, int k);

/// Δ_k^t(G): facets are the (n-k)-subsets whose complement is independent.
SimplicialComplex total_cut_complex(const Graph& g, int k);

/**
 * Vertex decomposability with memoized recursion on (link, deletion) pairs.
 * Non-pure complexes are never vertex decomposable; the void complex, {∅} and
 * a single simplex are.
 */
bool is_vertex_decomposable(const SimplicialComplex& c);

}  // namespace cutcx

#endif  // CUTCX_SIMPLICIAL_HPP
