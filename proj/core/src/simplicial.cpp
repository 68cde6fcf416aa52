#include "cutcx/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cutcx {

namespace {

std::vector<VertexSet> maximal_sorted(std::vector<VertexSet> candidates)
{
    std::sort(candidates.begin(), candidates.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<VertexSet> kept;
    for (VertexSet c : candidates) {
        const bool absorbed =
            std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return c.is_subset_of(k); });
        if (!absorbed)
            kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void check_ground(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [0, 64]");
}

std::unordered_set<VertexSet> all_faces(const SimplicialComplex& c)
{
    std::unordered_set<VertexSet> out;
    for (VertexSet f : c.facets())
        for_each_subset(f, [&](VertexSet s) { out.insert(s); });
    return out;
}

struct FacetListHash {
    std::size_t operator()(const std::vector<VertexSet>& v) const noexcept
    {
        std::size_t h = v.size();
        for (VertexSet s : v)
            h ^= std::hash<VertexSet>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

using DecomposabilityMemo = std::unordered_map<std::vector<VertexSet>, bool, FacetListHash>;

bool vertex_decomposable(const SimplicialComplex& c, DecomposabilityMemo& memo)
{
    if (c.facet_count() <= 1)
        return true;  // void, {∅}, or a simplex
    if (!is_pure(c))
        return false;
    if (auto it = memo.find(c.facets()); it != memo.end())
        return it->second;

    bool result = false;
    const VertexSet vertices = c.vertex_set();
    for (int v = 0; v < c.ground_size() && !result; ++v) {
        if (!vertices.contains(v))
            continue;
        const VertexSet single = VertexSet{}.with(v);
        const SimplicialComplex dl = deletion(c, single);
        if (!is_pure(dl))
            continue;
        result = vertex_decomposable(link(c, single), memo) && vertex_decomposable(dl, memo);
    }
    memo.emplace(c.facets(), result);
    return result;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const VertexSet> candidate_faces)
{
    check_ground(n);
    const VertexSet ground = VertexSet::range(n);
    for (VertexSet f : candidate_faces)
        if (!f.is_subset_of(ground))
            throw std::invalid_argument("face " + to_string(f) + " has a vertex outside [0, " +
                                        std::to_string(n) + ")");
    return SimplicialComplex(n, maximal_sorted({candidate_faces.begin(), candidate_faces.end()}));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& candidate_faces)
{
    check_ground(n);
    std::vector<VertexSet> sets;
    sets.reserve(candidate_faces.size());
    for (const auto& face : candidate_faces) {
        VertexSet s;
        for (int v : face) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
            s.insert(v);
        }
        sets.push_back(s);
    }
    return from_facets(n, sets);
}

VertexSet SimplicialComplex::vertex_set() const
{
    VertexSet out;
    for (VertexSet f : facets_)
        out = out | f;
    return out;
}

bool SimplicialComplex::contains_face(VertexSet s) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.is_subset_of(f); });
}

int dim(const SimplicialComplex& c)
{
    if (c.is_void())
        return kVoidDimension;
    int largest = 0;
    for (VertexSet f : c.facets())
        largest = std::max(largest, f.size());
    return largest - 1;
}

bool is_pure(const SimplicialComplex& c)
{
    const auto& fs = c.facets();
    return std::all_of(fs.begin(), fs.end(), [&](VertexSet f) { return f.size() == fs.front().size(); });
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c)
{
    if (c.is_void())
        return {};
    std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(dim(c) + 2));
    for (VertexSet s : all_faces(c))
        out[static_cast<std::size_t>(s.size())].push_back(s);
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

std::vector<VertexSet> faces(const SimplicialComplex& c, int d)
{
    if (c.is_void() || d < -1 || d > dim(c))
        return {};
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : c.facets())
        if (f.size() >= d + 1)
            for_each_subset(f, [&](VertexSet s) {
                if (s.size() == d + 1)
                    seen.insert(s);
            });
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c)
{
    std::vector<std::size_t> out;
    const auto levels = faces_by_dimension(c);
    for (std::size_t i = 1; i < levels.size(); ++i)
        out.push_back(levels[i].size());
    return out;
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet tau)
{
    if (!c.contains_face(tau))
        throw std::invalid_argument("link: " + to_string(tau) + " is not a face");
    std::vector<VertexSet> parts;
    for (VertexSet f : c.facets())
        if (tau.is_subset_of(f))
            parts.push_back(f - tau);
    return SimplicialComplex::from_facets(c.ground_size(), parts);
}

SimplicialComplex deletion(const SimplicialComplex& c, VertexSet tau)
{
    std::vector<VertexSet> parts;
    for (VertexSet f : c.facets()) {
        if (!tau.is_subset_of(f)) {
            parts.push_back(f);
            continue;
        }
        // The maximal faces of ⟨F⟩ avoiding τ drop exactly one vertex of τ.
        tau.for_each([&](int v) { parts.push_back(f.without(v)); });
    }
    return SimplicialComplex::from_facets(c.ground_size(), parts);
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c)
{
    if (c.is_void())
        return {VertexSet{}};
    const auto face_set = all_faces(c);
    const int n = c.ground_size();
    std::unordered_set<VertexSet> found;
    for (VertexSet sigma : face_set)
        for (int v = 0; v < n; ++v) {
            if (sigma.contains(v))
                continue;
            const VertexSet candidate = sigma.with(v);
            if (face_set.contains(candidate) || found.contains(candidate))
                continue;
            bool minimal = true;
            candidate.for_each([&](int u) {
                if (!face_set.contains(candidate.without(u)))
                    minimal = false;
            });
            if (minimal)
                found.insert(candidate);
        }
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c)
{
    const int n = c.ground_size();
    std::vector<VertexSet> parts;
    for (VertexSet nonface : minimal_nonfaces(c))
        parts.push_back(nonface.complement(n));
    return SimplicialComplex::from_facets(n, parts);
}

SimplicialComplex clique_complex(const Graph& g)
{
    std::vector<VertexSet> maximal;
    // Bron–Kerbosch with pivoting.
    auto expand = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (p.empty() && x.empty()) {
            maximal.push_back(r);
            return;
        }
        const int pivot = (p | x).front();
        (p - g.neighbors(pivot)).for_each([&](int v) {
            self(self, r.with(v), p & g.neighbors(v), x & g.neighbors(v));
            p.erase(v);
            x.insert(v);
        });
    };
    expand(expand, VertexSet{}, g.vertices(), VertexSet{});
    return SimplicialComplex::from_facets(g.vertex_count(), maximal);
}

namespace {

template <typename Predicate>
SimplicialComplex complement_complex(const Graph& g, int k, Predicate keep_complement, const char* what)
{
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) + " outside [1, " +
                                    std::to_string(n) + "]");
    std::vector<VertexSet> facets;
    for_each_k_subset(n, k, [&](VertexSet removed) {
        if (keep_complement(removed))
            facets.push_back(removed.complement(n));
    });
    return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

SimplicialComplex cut_complex(const Graph& g, int k)
{
    return complement_complex(
        g, k, [&](VertexSet removed) { return !is_connected_within(g, removed); }, "cut_complex");
}

SimplicialComplex total_cut_complex(const Graph& g, int k)
{
    return complement_complex(
        g, k, [&](VertexSet removed) { return is_independent(g, removed); }, "total_cut_complex");
}

bool is_vertex_decomposable(const SimplicialComplex& c)
{
    DecomposabilityMemo memo;
    return vertex_decomposable(c, memo);
}

}  // namespace cutcx
