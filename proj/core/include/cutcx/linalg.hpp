#ifndef CUTCX_LINALG_HPP
#define CUTCX_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cutcx {

/// Coefficient field for exact rank computations: GF(p) for a prime p < 2^16,
/// or the rationals.
class Field {
public:
    static Field prime(unsigned p);
    static Field rationals() { return Field(0); }

    /// "gf2", "gf3", "gf5", "gf<p>", "rational".
    static Field parse(std::string_view name);

    bool is_rational() const { return characteristic_ == 0; }
    /// 0 for the rationals.
    unsigned characteristic() const { return characteristic_; }
    std::string name() const;

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(unsigned characteristic) : characteristic_(characteristic) {}
    unsigned characteristic_ = 2;
};

struct SparseEntry {
    std::uint32_t row;
    std::int64_t value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Integer matrix stored column by column; entries in each column sorted by row, no zeros.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<SparseEntry>> columns;

    std::size_t cols() const { return columns.size(); }
    bool is_zero() const;
};

/// Row-major dense integer matrix.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

SparseMatrix to_sparse(const DenseMatrix& m);

/// Integer product a * b. Throws std::invalid_argument on a shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/**
 * Exact rank over the given field.
 *
 * GF(2) uses bit-packed elimination, GF(p) modular elimination, and the
 * rationals fraction-free integer elimination on sparse vectors with content
 * (gcd) normalization.
 */
std::size_t rank(const SparseMatrix& m, Field field);

/// Rank over the rationals by dense Bareiss elimination.
std::size_t rank_bareiss(const DenseMatrix& m);

}  // namespace cutcx

#endif  // CUTCX_LINALG_HPP
