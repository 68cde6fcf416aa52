#ifndef CUTCX_HOMOLOGY_HPP
#define CUTCX_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cutcx/linalg.hpp"
#include "cutcx/simplicial.hpp"

namespace cutcx {

/**
 * ∂_d : C_d -> C_{d-1} of the augmented chain complex.
 *
 * Rows are the (d-1)-faces and columns the d-faces, each in the order of
 * faces(c, d). A face's boundary drops one vertex at a time from its ascending
 * vertex list, with sign (-1)^position. ∂_0 is the augmentation row of ones.
 * Dimensions outside [-1, dim + 1] give empty matrices.
 */
SparseMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Reduced Betti numbers β̃_{-1}, β̃_0, ..., β̃_dim over one field.
struct BettiVector {
    Field field = Field::prime(2);
    std::vector<std::int64_t> values;

    /// β̃_i, zero outside the stored range.
    std::int64_t at(int i) const;
    /// Largest stored degree (dim of the complex).
    int top_degree() const { return static_cast<int>(values.size()) - 2; }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// "gf2: [0, 0, 1]" with the list indexed from -1.
std::string to_string(const BettiVector& b);

/// Exact reduced Betti numbers. Throws std::invalid_argument on the void complex.
/// Per-dimension ranks run on up to `jobs` threads.
BettiVector betti(const SimplicialComplex& c, Field field, unsigned jobs = 1);

/// H̃_i vanishes for all i <= p.
bool is_p_acyclic(const SimplicialComplex& c, int p, Field field);

/// Every face (∅ included) has a link that is (dim link - 1)-acyclic.
/// Throws std::invalid_argument on non-pure or void input.
bool is_cohen_macaulay(const SimplicialComplex& c, Field field);

/// Σ_{i>=0} (-1)^i f_i - 1 - Σ_{i>=-1} (-1)^i β̃_i; zero whenever the Betti numbers are right.
std::int64_t euler_defect(const SimplicialComplex& c, const BettiVector& b);

}  // namespace cutcx

#endif  // CUTCX_HOMOLOGY_HPP
