#ifndef CUTCX_SHELLING_HPP
#define CUTCX_SHELLING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cutcx/simplicial.hpp"

namespace cutcx {

/// A failing pair (i, j), 1-based positions in the order F_1, ..., F_t:
/// i < j and L_j ⊆ F_i.
struct ShellingWitness {
    std::size_t earlier = 0;
    std::size_t later = 0;

    friend bool operator==(const ShellingWitness&, const ShellingWitness&) = default;
};

/**
 * Outcome of checking a facet order against the shelling condition.
 *
 * removable[j] is L_j, the vertices λ of F_j for which some earlier F_r meets
 * F_j in exactly F_j \ {λ}. The order is a shelling iff no earlier facet
 * contains L_j, for every j.
 */
struct ShellingReport {
    std::vector<VertexSet> order;
    std::vector<VertexSet> removable;
    bool valid = true;
    std::optional<ShellingWitness> witness;
    /// Number of failing (i, j) pairs.
    std::size_t failure_count = 0;
    std::vector<bool> spanning;

    std::size_t spanning_count() const;
};

/**
 * Verifies a facet order. Throws std::invalid_argument when the complex is not
 * pure or `order` is not a permutation of its facets. The witness is the
 * failing pair with the smallest later position, then the smallest earlier
 * one, independent of `jobs`.
 */
ShellingReport verify_shelling(const SimplicialComplex& c, const std::vector<VertexSet>& order, unsigned jobs = 1);

/// Facets with L_j = F_j, in order. Throws std::logic_error on an invalid report.
std::vector<VertexSet> spanning_facets(const ShellingReport& report);

enum class ShellingSearchStatus {
    found,
    not_shellable,   ///< search space exhausted
    budget_exceeded, ///< undecided
};

struct ShellingSearchResult {
    ShellingSearchStatus status = ShellingSearchStatus::budget_exceeded;
    std::optional<std::vector<VertexSet>> order;
    std::size_t nodes = 0;
};

/**
 * Depth-first search for a shelling order with memoization of dead facet
 * subsets (whether a facet can be appended depends only on the set already
 * placed). Candidates with the largest current L are tried first. Throws
 * std::invalid_argument for a non-pure complex.
 */
ShellingSearchResult find_shelling(const SimplicialComplex& c, std::size_t node_budget = 1'000'000);

}  // namespace cutcx

#endif  // CUTCX_SHELLING_HPP
