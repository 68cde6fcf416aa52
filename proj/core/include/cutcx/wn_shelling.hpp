#ifndef CUTCX_WN_SHELLING_HPP
#define CUTCX_WN_SHELLING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cutcx/homology.hpp"
#include "cutcx/shelling.hpp"
#include "cutcx/simplicial.hpp"

// Explicit shelling of the 3-cut complex Δ_3(W_n), n >= 9.
//
// Facets are (n-3)-subsets F whose complement F^c = V \ F induces a
// disconnected subgraph of W_n. Everything below is phrased in terms of F^c,
// a 3-subset, because the order and the spanning classes are defined on it.
namespace cutcx::wn {

/**
 * Center-out order on the vertices of W_n: m, m-1, m+1, m-2, m+2, ..., 0,
 * where m = (n+1)/2 for odd n and n/2 for even n. The t-th entry (1-based) is
 * m + (-1)^(t-1) * floor(t/2), reduced mod n.
 */
class VertexOrder {
public:
    /// Throws std::invalid_argument for n < 9 or n > 64.
    explicit VertexOrder(int n);

    int n() const { return n_; }
    int m() const { return m_; }

    /// α_1, ..., α_n.
    const std::vector<int>& sequence() const { return sequence_; }
    /// α_t for 1 <= t <= n.
    int alpha(int t) const { return sequence_[static_cast<std::size_t>(t - 1)]; }
    /// The t with α_t = v (1-based).
    int position(int v) const { return position_[static_cast<std::size_t>(v)]; }

    /// Earliest element of s in this order; s must be non-empty.
    int least(VertexSet s) const;

private:
    int n_;
    int m_;
    std::vector<int> sequence_;
    std::vector<int> position_;
};

/// x <_O y compares positions in the order.
std::strong_ordering cmp_order(const VertexOrder& order, int x, int y);

/// Decomposition F^c = {α_s} ⊔ {s1, s2}: α_s is the <_O-least element of the
/// complement, s1 < s2 numerically. F lies in the block T_s.
struct FacetSignature {
    int s = 0;
    int alpha = 0;
    int s1 = 0;
    int s2 = 0;

    friend bool operator==(const FacetSignature&, const FacetSignature&) = default;
};

/// Throws std::invalid_argument unless |complement| = 3.
FacetSignature facet_signature(const VertexOrder& order, VertexSet complement);

/// The four displaced facet classes, moved to the end of their T_s block.
enum class DClass { d1, d2, d3, d4 };

/// The spanning classes; all have s2 = n - 1.
enum class SClass { s1, s2, s3 };

std::string_view name(DClass c);
std::string_view name(SClass c);

/// True iff the complement induces a disconnected subgraph of W_n.
bool is_facet_complement(int n, VertexSet complement);

/// Throws std::invalid_argument unless `complement` is the complement of a facet of Δ_3(W_n).
std::optional<DClass> in_d(const VertexOrder& order, VertexSet complement);

/// Throws std::invalid_argument unless `complement` is the complement of a facet of Δ_3(W_n).
std::optional<SClass> in_s(const VertexOrder& order, VertexSet complement);

/**
 * The shelling order ≺ on facets, transcribed as its four defining cases:
 *   (i)   F, F' ∉ D and F ≪ F'
 *   (ii)  F ∈ D, F' ∉ D, s < t
 *   (iii) F ∉ D, F' ∈ D, s <= t
 *   (iv)  F, F' ∈ D and F ≪ F'
 * and F' ≺ F when none holds. ≪ compares s, then (s1, s2) lexicographically.
 * Arguments are facets (not complements). Throws on a non-facet.
 */
std::strong_ordering cmp_prec(const VertexOrder& order, VertexSet facet, VertexSet other);

/// Facets of Δ_3(W_n) sorted by ≺.
std::vector<VertexSet> shelling_order(int n);

/// Spanning-facet census from the closed-form class counts.
struct SpanningBreakdown {
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t s3 = 0;
    std::int64_t total = 0;

    friend bool operator==(const SpanningBreakdown&, const SpanningBreakdown&) = default;
};

/**
 * s1 = n - 2m + 2, s2 = mn - m² + 3m - 5n + 10,
 * s3 = 3(n - 9) + mn - m² - 4n + 16, total = C(n-4, 2) - 9.
 * Throws std::logic_error if the parts do not sum to the total.
 */
SpanningBreakdown spanning_count_formula(int n);

/// Counts facets by in_s() tag.
SpanningBreakdown spanning_census(int n);

struct ConjectureOptions {
    Field field = Field::prime(2);
    bool with_homology = true;
    /// Homology is skipped (and reported as such) above this n.
    int homology_max_n = 14;
    unsigned jobs = 1;
};

/// Every quantity is computed independently; none is assumed from another.
struct ConjectureReport {
    int n = 0;
    int m = 0;
    std::size_t facet_count = 0;
    int dimension = 0;
    bool pure = false;
    bool shelling_valid = false;
    std::optional<ShellingWitness> witness;
    std::int64_t spanning_from_order = 0;
    std::int64_t spanning_from_s = 0;
    std::int64_t spanning_from_formula = 0;
    /// The facets flagged spanning by the verifier are exactly the S-members.
    bool spanning_sets_agree = false;
    SpanningBreakdown breakdown;          // closed form
    SpanningBreakdown breakdown_from_s;   // enumeration
    bool homology_skipped = false;
    std::optional<BettiVector> betti;
    /// β̃_{n-4} = total, all other β̃_i = 0.
    std::optional<bool> betti_matches;
    bool all_pass = false;
};

ConjectureReport verify_conjecture(int n, const ConjectureOptions& options = {});

/// Same checks on a caller-supplied order (e.g. a corrupted one).
ConjectureReport verify_conjecture_with_order(int n, const std::vector<VertexSet>& order,
                                              const ConjectureOptions& options = {});

}  // namespace cutcx::wn

#endif  // CUTCX_WN_SHELLING_HPP
