#include "cutcx/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cutcx {

namespace {

bool is_prime(unsigned p)
{
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1u)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::size_t rank_gf2(const SparseMatrix& m)
{
    const std::size_t words = (m.rows + 63) / 64;
    // basis[p] holds a reduced vector whose lowest set bit is p.
    std::vector<std::vector<std::uint64_t>> basis(m.rows);
    std::vector<std::uint64_t> v(words);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        std::fill(v.begin(), v.end(), 0);
        for (const SparseEntry& e : column)
            if (e.value % 2 != 0)
                v[e.row / 64] ^= std::uint64_t{1} << (e.row % 64);
        std::size_t w = 0;
        while (true) {
            while (w < words && v[w] == 0)
                ++w;
            if (w == words)
                break;
            const std::size_t pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            auto& b = basis[pivot];
            if (b.empty()) {
                b = v;
                ++rank;
                break;
            }
            for (std::size_t k = w; k < words; ++k)
                v[k] ^= b[k];
        }
        if (rank == m.rows)
            break;
    }
    return rank;
}

std::size_t rank_gfp(const SparseMatrix& m, std::uint32_t p)
{
    std::vector<std::vector<std::uint32_t>> basis(m.rows);
    std::vector<std::uint32_t> v(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        std::fill(v.begin(), v.end(), 0);
        for (const SparseEntry& e : column) {
            const std::int64_t r = e.value % static_cast<std::int64_t>(p);
            v[e.row] = static_cast<std::uint32_t>(r < 0 ? r + p : r);
        }
        std::size_t i = 0;
        while (true) {
            while (i < m.rows && v[i] == 0)
                ++i;
            if (i == m.rows)
                break;
            auto& b = basis[i];
            if (b.empty()) {
                const std::uint64_t inverse = modpow(v[i], p - 2, p);
                for (std::size_t k = i; k < m.rows; ++k)
                    v[k] = static_cast<std::uint32_t>(v[k] * inverse % p);
                b = v;
                ++rank;
                break;
            }
            const std::uint64_t factor = p - v[i];
            for (std::size_t k = i; k < m.rows; ++k)
                if (b[k] != 0)
                    v[k] = static_cast<std::uint32_t>((v[k] + factor * b[k]) % p);
        }
        if (rank == m.rows)
            break;
    }
    return rank;
}

using BigVector = std::vector<std::pair<std::uint32_t, mpz_class>>;

void normalize_content(BigVector& v)
{
    mpz_class g = 0;
    for (const auto& [row, value] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& entry : v)
            mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
}

/// a * v - c * b, dropping zeros; both inputs sorted by row.
BigVector combine(const BigVector& v, const mpz_class& a, const BigVector& b, const mpz_class& c)
{
    BigVector out;
    out.reserve(v.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    mpz_class value;
    while (i < v.size() || j < b.size()) {
        if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
            value = a * v[i].second;
            out.emplace_back(v[i].first, value);
            ++i;
        } else if (i == v.size() || b[j].first < v[i].first) {
            value = -c * b[j].second;
            out.emplace_back(b[j].first, value);
            ++j;
        } else {
            value = a * v[i].second - c * b[j].second;
            if (value != 0)
                out.emplace_back(v[i].first, value);
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t rank_rational(const SparseMatrix& m)
{
    std::vector<std::optional<BigVector>> basis(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        BigVector v;
        v.reserve(column.size());
        for (const SparseEntry& e : column)
            v.emplace_back(e.row, mpz_class(static_cast<long>(e.value)));
        normalize_content(v);
        while (!v.empty()) {
            const std::uint32_t pivot = v.front().first;
            auto& b = basis[pivot];
            if (!b) {
                b = std::move(v);
                ++rank;
                break;
            }
            const mpz_class g = gcd(b->front().second, v.front().second);
            const mpz_class a = b->front().second / g;
            const mpz_class c = v.front().second / g;
            v = combine(v, a, *b, c);
            normalize_content(v);
        }
        if (rank == m.rows)
            break;
    }
    return rank;
}

}  // namespace

Field Field::prime(unsigned p)
{
    if (!is_prime(p) || p >= (1u << 16))
        throw std::invalid_argument("GF(p) needs a prime p < 65536, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view name)
{
    if (name == "rational" || name == "rationals" || name == "q")
        return rationals();
    if (name.size() > 2 && name.substr(0, 2) == "gf") {
        unsigned p = 0;
        const auto digits = name.substr(2);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size())
            return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected gf<p> or rational)");
}

std::string Field::name() const { return is_rational() ? "rational" : "gf" + std::to_string(characteristic_); }

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

SparseMatrix to_sparse(const DenseMatrix& m)
{
    SparseMatrix out;
    out.rows = m.rows;
    out.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t r = 0; r < m.rows; ++r)
            if (m.at(r, c) != 0)
                out.columns[c].push_back({static_cast<std::uint32_t>(r), m.at(r, c)});
    return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows)
        throw std::invalid_argument("multiply: inner dimensions differ");
    SparseMatrix out;
    out.rows = a.rows;
    out.columns.resize(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (const SparseEntry& be : b.columns[c])
            for (const SparseEntry& ae : a.columns[be.row])
                acc[ae.row] += ae.value * be.value;
        for (auto [row, value] : acc)
            if (value != 0)
                out.columns[c].push_back({row, value});
    }
    return out;
}

std::size_t rank(const SparseMatrix& m, Field field)
{
    if (field.is_rational())
        return rank_rational(m);
    if (field.characteristic() == 2)
        return rank_gf2(m);
    return rank_gfp(m, field.characteristic());
}

std::size_t rank_bareiss(const DenseMatrix& m)
{
    std::vector<mpz_class> a(m.data.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<long>(m.data[i]);
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * m.cols + c]; };

    mpz_class previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols; ++c)
                std::swap(at(pivot, c), at(rank, c));
        const mpz_class p = at(rank, col);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            const mpz_class lead = at(r, col);
            for (std::size_t c = col + 1; c < m.cols; ++c) {
                mpz_class value = p * at(r, c) - lead * at(rank, c);
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
                at(r, c) = std::move(value);
            }
            at(r, col) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

}  // namespace cutcx
