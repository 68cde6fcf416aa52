#include "cutcx/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cutcx/parallel.hpp"

namespace cutcx {

namespace {

SparseMatrix boundary_from_levels(const std::vector<std::vector<VertexSet>>& levels, int d)
{
    SparseMatrix m;
    const int top = static_cast<int>(levels.size()) - 2;
    if (d < -1 || d > top + 1)
        return m;
    const auto level = [&](int dimension) -> const std::vector<VertexSet>* {
        if (dimension < -1 || dimension > top)
            return nullptr;
        return &levels[static_cast<std::size_t>(dimension + 1)];
    };
    const auto* rows = level(d - 1);
    const auto* cols = level(d);
    m.rows = rows ? rows->size() : 0;
    if (!cols)
        return m;
    m.columns.resize(cols->size());
    if (!rows)
        return m;

    for (std::size_t c = 0; c < cols->size(); ++c) {
        const VertexSet face = (*cols)[c];
        auto& column = m.columns[c];
        int position = 0;
        face.for_each([&](int v) {
            const VertexSet facet_of_face = face.without(v);
            const auto it = std::lower_bound(rows->begin(), rows->end(), facet_of_face);
            column.push_back({static_cast<std::uint32_t>(it - rows->begin()), position % 2 == 0 ? 1 : -1});
            ++position;
        });
        std::sort(column.begin(), column.end(),
                  [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    }
    return m;
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& c, int d)
{
    return boundary_from_levels(faces_by_dimension(c), d);
}

std::int64_t BettiVector::at(int i) const
{
    const int index = i + 1;
    if (index < 0 || index >= static_cast<int>(values.size()))
        return 0;
    return values[static_cast<std::size_t>(index)];
}

std::string to_string(const BettiVector& b)
{
    std::ostringstream os;
    os << b.field.name() << ": [";
    for (std::size_t i = 0; i < b.values.size(); ++i)
        os << (i ? ", " : "") << b.values[i];
    os << ']';
    return os.str();
}

BettiVector betti(const SimplicialComplex& c, Field field, unsigned jobs)
{
    if (c.is_void())
        throw std::invalid_argument("betti: the void complex has no reduced chain complex");
    const auto levels = faces_by_dimension(c);
    const int top = static_cast<int>(levels.size()) - 2;

    // ranks[d] = rank ∂_d for d = 0..top; ∂_{-1} and ∂_{top+1} vanish.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
    parallel_for(ranks.size(), jobs, [&](std::size_t d) {
        ranks[d] = rank(boundary_from_levels(levels, static_cast<int>(d)), field);
    });
    const auto rank_of = [&](int d) -> std::int64_t {
        if (d < 0 || d > top)
            return 0;
        return static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d)]);
    };

    BettiVector out;
    out.field = field;
    for (int d = -1; d <= top; ++d) {
        const auto count = static_cast<std::int64_t>(levels[static_cast<std::size_t>(d + 1)].size());
        out.values.push_back(count - rank_of(d) - rank_of(d + 1));
    }
    return out;
}

bool is_p_acyclic(const SimplicialComplex& c, int p, Field field)
{
    const BettiVector b = betti(c, field);
    for (int i = -1; i <= p && i <= b.top_degree(); ++i)
        if (b.at(i) != 0)
            return false;
    return true;
}

bool is_cohen_macaulay(const SimplicialComplex& c, Field field)
{
    if (c.is_void())
        throw std::invalid_argument("is_cohen_macaulay: void complex");
    if (!is_pure(c))
        throw std::invalid_argument("is_cohen_macaulay: complex is not pure");
    for (const auto& level : faces_by_dimension(c))
        for (VertexSet sigma : level) {
            const SimplicialComplex lk = link(c, sigma);
            if (!is_p_acyclic(lk, dim(lk) - 1, field))
                return false;
        }
    return true;
}

std::int64_t euler_defect(const SimplicialComplex& c, const BettiVector& b)
{
    std::int64_t lhs = 0;
    const auto f = f_vector(c);
    for (std::size_t i = 0; i < f.size(); ++i)
        lhs += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
    std::int64_t rhs = 1;
    for (int i = -1; i <= b.top_degree(); ++i)
        rhs += ((i + 2) % 2 == 0 ? 1 : -1) * b.at(i);
    return lhs - rhs;
}

}  // namespace cutcx
