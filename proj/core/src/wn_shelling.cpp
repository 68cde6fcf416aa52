#include "cutcx/wn_shelling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cutcx/graph.hpp"

namespace cutcx::wn {

VertexOrder::VertexOrder(int n) : n_(n), m_(n % 2 == 1 ? (n + 1) / 2 : n / 2)
{
    if (n < 9 || n > kMaxVertices)
        throw std::invalid_argument("vertex order needs 9 <= n <= 64, got " + std::to_string(n));
    sequence_.reserve(static_cast<std::size_t>(n));
    position_.assign(static_cast<std::size_t>(n), 0);
    for (int t = 1; t <= n; ++t) {
        const int offset = (t % 2 == 1 ? 1 : -1) * (t / 2);
        const int v = ((m_ + offset) % n + n) % n;
        sequence_.push_back(v);
        position_[static_cast<std::size_t>(v)] = t;
    }
}

int VertexOrder::least(VertexSet s) const
{
    int best = -1;
    s.for_each([&](int v) {
        if (best < 0 || position(v) < position(best))
            best = v;
    });
    return best;
}

std::strong_ordering cmp_order(const VertexOrder& order, int x, int y)
{
    return order.position(x) <=> order.position(y);
}

FacetSignature facet_signature(const VertexOrder& order, VertexSet complement)
{
    if (complement.size() != 3 || !complement.is_subset_of(VertexSet::range(order.n())))
        throw std::invalid_argument("facet_signature: " + to_string(complement) +
                                    " is not a 3-subset of the vertex set");
    FacetSignature sig;
    sig.alpha = order.least(complement);
    sig.s = order.position(sig.alpha);
    const VertexSet rest = complement.without(sig.alpha);
    sig.s1 = rest.front();
    sig.s2 = rest.back();
    return sig;
}

std::string_view name(DClass c)
{
    switch (c) {
    case DClass::d1: return "D1";
    case DClass::d2: return "D2";
    case DClass::d3: return "D3";
    case DClass::d4: return "D4";
    }
    return "?";
}

std::string_view name(SClass c)
{
    switch (c) {
    case SClass::s1: return "S1";
    case SClass::s2: return "S2";
    case SClass::s3: return "S3";
    }
    return "?";
}

bool is_facet_complement(int n, VertexSet complement)
{
    // W_n's adjacency depends only on the cyclic difference.
    if (complement.size() != 3 || !complement.is_subset_of(VertexSet::range(n)))
        return false;
    const auto v = complement.to_vector();
    const auto adjacent = [n](int a, int b) {
        const int d = ((a - b) % n + n) % n;
        return d == 1 || d == 2 || d == n - 1 || d == n - 2;
    };
    const int edges = adjacent(v[0], v[1]) + adjacent(v[0], v[2]) + adjacent(v[1], v[2]);
    return edges < 2;
}

namespace {

void require_facet_complement(int n, VertexSet complement, const char* what)
{
    if (!is_facet_complement(n, complement))
        throw std::invalid_argument(std::string(what) + ": " + to_string(complement) +
                                    " is not the complement of a facet of Delta_3(W_" + std::to_string(n) + ")");
}

/// Vertex named by plain integer arithmetic; it must already be a vertex.
int vertex(int n, int value)
{
    if (value < 0 || value >= n)
        throw std::logic_error("vertex arithmetic left [0, " + std::to_string(n) + "): " + std::to_string(value));
    return value;
}

bool pair_is(const FacetSignature& sig, int a, int b)
{
    return (sig.s1 == a && sig.s2 == b) || (sig.s1 == b && sig.s2 == a);
}

std::optional<DClass> classify_d(const VertexOrder& order, const FacetSignature& sig)
{
    const int n = order.n();
    const int m = order.m();
    const int a = sig.alpha;
    if (a == m + 1 && pair_is(sig, vertex(n, a - 3), vertex(n, a + 1)))
        return DClass::d1;
    if (a == m - 1 && pair_is(sig, vertex(n, a - 1), vertex(n, a + 3)))
        return DClass::d2;
    if (a == m + 1 && pair_is(sig, vertex(n, a - 4), vertex(n, a - 3)))
        return DClass::d3;
    // An empty range {m-1, ..., n-6} (n = 9) contributes nothing.
    if (a >= m - 1 && a <= n - 6 && pair_is(sig, vertex(n, a + 3), vertex(n, a + 4)))
        return DClass::d4;
    return std::nullopt;
}

std::optional<SClass> classify_s(const VertexOrder& order, const FacetSignature& sig)
{
    const int n = order.n();
    const int m = order.m();
    const int a = sig.alpha;
    const int s1 = sig.s1;
    if (sig.s2 != n - 1 || s1 == n - 1)
        return std::nullopt;

    if (a == 3) {
        const bool excluded = s1 >= 0 && s1 <= 2 * m - 4;
        return excluded ? std::nullopt : std::optional(SClass::s1);
    }
    if (a >= 4 && a <= m - 2) {
        const bool excluded = (s1 >= a - 4 && s1 <= a - 2) || (s1 >= a && s1 <= 2 * m - a - 1);
        return excluded ? std::nullopt : std::optional(SClass::s2);
    }
    if (a >= m - 1 && a <= n - 3) {
        const int omega = std::min(2 * m - a, a - 4);
        if (omega < 0)
            throw std::logic_error("S3 run start below zero: " + std::to_string(omega));
        // The run ω, ω+1, ..., α+3 is taken element-wise mod n; only its top can pass n-1.
        bool excluded = false;
        for (int v = omega; v <= a + 3; ++v)
            if (v % n == s1)
                excluded = true;
        const int y = a < n - 4 ? n - 1 : (a == n - 4 ? 0 : 1);
        if (s1 == y)
            excluded = true;
        return excluded ? std::nullopt : std::optional(SClass::s3);
    }
    return std::nullopt;
}

}  // namespace

std::optional<DClass> in_d(const VertexOrder& order, VertexSet complement)
{
    require_facet_complement(order.n(), complement, "in_d");
    return classify_d(order, facet_signature(order, complement));
}

std::optional<SClass> in_s(const VertexOrder& order, VertexSet complement)
{
    require_facet_complement(order.n(), complement, "in_s");
    return classify_s(order, facet_signature(order, complement));
}

std::strong_ordering cmp_prec(const VertexOrder& order, VertexSet facet, VertexSet other)
{
    const int n = order.n();
    const VertexSet fc = facet.complement(n);
    const VertexSet oc = other.complement(n);
    require_facet_complement(n, fc, "cmp_prec");
    require_facet_complement(n, oc, "cmp_prec");
    if (facet == other)
        return std::strong_ordering::equal;

    const FacetSignature f = facet_signature(order, fc);
    const FacetSignature g = facet_signature(order, oc);
    const bool f_in_d = classify_d(order, f).has_value();
    const bool g_in_d = classify_d(order, g).has_value();
    const bool f_ll_g = std::tie(f.s, f.s1, f.s2) < std::tie(g.s, g.s1, g.s2);

    const bool precedes = (!f_in_d && !g_in_d && f_ll_g)          // (i)
                          || (f_in_d && !g_in_d && f.s < g.s)     // (ii)
                          || (!f_in_d && g_in_d && f.s <= g.s)    // (iii)
                          || (f_in_d && g_in_d && f_ll_g);        // (iv)
    return precedes ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<VertexSet> shelling_order(int n)
{
    const VertexOrder order(n);
    std::vector<VertexSet> facets = cut_complex(squared_cycle(n), 3).facets();
    std::sort(facets.begin(), facets.end(),
              [&](VertexSet a, VertexSet b) { return cmp_prec(order, a, b) < 0; });
    return facets;
}

SpanningBreakdown spanning_count_formula(int n)
{
    if (n < 9)
        throw std::invalid_argument("spanning_count_formula needs n >= 9");
    const std::int64_t nn = n;
    const std::int64_t m = n % 2 == 1 ? (nn + 1) / 2 : nn / 2;
    SpanningBreakdown b;
    b.s1 = nn - 2 * m + 2;
    b.s2 = m * nn - m * m + 3 * m - 5 * nn + 10;
    b.s3 = 3 * (nn - 9) + m * nn - m * m - 4 * nn + 16;
    b.total = (nn - 4) * (nn - 5) / 2 - 9;
    if (b.s1 + b.s2 + b.s3 != b.total)
        throw std::logic_error("spanning class counts do not sum to C(n-4,2) - 9 at n = " + std::to_string(n));
    return b;
}

SpanningBreakdown spanning_census(int n)
{
    const VertexOrder order(n);
    SpanningBreakdown b;
    for (VertexSet facet : cut_complex(squared_cycle(n), 3).facets()) {
        const auto tag = in_s(order, facet.complement(n));
        if (!tag)
            continue;
        switch (*tag) {
        case SClass::s1: ++b.s1; break;
        case SClass::s2: ++b.s2; break;
        case SClass::s3: ++b.s3; break;
        }
    }
    b.total = b.s1 + b.s2 + b.s3;
    return b;
}

ConjectureReport verify_conjecture_with_order(int n, const std::vector<VertexSet>& order,
                                              const ConjectureOptions& options)
{
    const VertexOrder vertex_order(n);
    const SimplicialComplex complex = cut_complex(squared_cycle(n), 3);

    ConjectureReport r;
    r.n = n;
    r.m = vertex_order.m();
    r.facet_count = complex.facet_count();
    r.dimension = dim(complex);
    r.pure = is_pure(complex);

    const ShellingReport shelling = verify_shelling(complex, order, options.jobs);
    r.shelling_valid = shelling.valid;
    r.witness = shelling.witness;
    r.spanning_from_order = static_cast<std::int64_t>(shelling.spanning_count());

    std::set<VertexSet> flagged;
    for (std::size_t j = 0; j < order.size(); ++j)
        if (shelling.spanning[j])
            flagged.insert(order[j]);
    std::set<VertexSet> tagged;
    for (VertexSet facet : complex.facets())
        if (in_s(vertex_order, facet.complement(n)))
            tagged.insert(facet);
    r.spanning_sets_agree = flagged == tagged;

    r.breakdown_from_s = spanning_census(n);
    r.spanning_from_s = r.breakdown_from_s.total;
    r.breakdown = spanning_count_formula(n);
    r.spanning_from_formula = r.breakdown.total;

    if (options.with_homology) {
        if (n > options.homology_max_n) {
            r.homology_skipped = true;
        } else {
            r.betti = betti(complex, options.field, options.jobs);
            bool matches = r.betti->top_degree() == n - 4;
            for (int i = -1; i <= r.betti->top_degree(); ++i)
                matches = matches && r.betti->at(i) == (i == n - 4 ? r.breakdown.total : 0);
            r.betti_matches = matches;
        }
    }

    r.all_pass = r.pure && r.dimension == n - 4 && r.shelling_valid &&
                 r.spanning_from_order == r.spanning_from_s && r.spanning_from_s == r.spanning_from_formula &&
                 r.spanning_sets_agree && r.breakdown == r.breakdown_from_s && r.betti_matches.value_or(true);
    return r;
}

ConjectureReport verify_conjecture(int n, const ConjectureOptions& options)
{
    return verify_conjecture_with_order(n, shelling_order(n), options);
}

}  // namespace cutcx::wn
