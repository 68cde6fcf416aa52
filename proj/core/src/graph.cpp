#include "cutcx/graph.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace cutcx {

std::string to_string(VertexSet s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first)
            os << ", ";
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

namespace {

void check_vertex_count(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph vertex count " + std::to_string(n) + " outside [0, 64]");
}

}  // namespace

Graph::Graph(int n)
{
    check_vertex_count(n);
    n_ = n;
    neighbors_.assign(static_cast<std::size_t>(n), VertexSet{});
    labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        labels_[static_cast<std::size_t>(v)] = v;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                        "} has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        neighbors_[static_cast<std::size_t>(u)].insert(v);
        neighbors_[static_cast<std::size_t>(v)].insert(u);
    }
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (VertexSet nb : neighbors_)
        twice += static_cast<std::size_t>(nb.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph circulant(int n, const std::vector<int>& connection_set)
{
    if (n < 2)
        throw std::invalid_argument("circulant graph needs n >= 2, got " + std::to_string(n));
    check_vertex_count(n);
    for (int a : connection_set)
        if (a < 1 || a > n - 1)
            throw std::invalid_argument("connection element " + std::to_string(a) + " outside [1, " +
                                        std::to_string(n - 1) + "]");
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int a : connection_set) {
            // a and n - a generate the same edge set, so one direction suffices.
            const int y = (x + a) % n;
            edges.emplace_back(x, y);
        }
    return Graph(n, edges);
}

Graph squared_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("squared cycle needs n >= 3, got " + std::to_string(n));
    return circulant(n, {1, 2});
}

Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet u)
{
    if (!u.is_subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: vertex set " + to_string(u) + " not within [0, " +
                                    std::to_string(g.vertex_count()) + ")");
    const std::vector<int> kept = u.to_vector();
    Graph h(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        h.labels_[i] = g.original_label(kept[i]);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j]))
                h.neighbors_[i].insert(static_cast<int>(j));
    }
    return h;
}

bool is_connected_within(const Graph& g, VertexSet u)
{
    if (u.size() <= 1)
        return true;
    VertexSet reached = VertexSet{}.with(u.front());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | g.neighbors(v); });
        next = (next & u) - reached;
        reached = reached | next;
        frontier = next;
    }
    return reached == u;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

bool is_independent(const Graph& g, VertexSet u)
{
    bool independent = true;
    u.for_each([&](int v) {
        if (!(g.neighbors(v) & u).empty())
            independent = false;
    });
    return independent;
}

bool is_clique(const Graph& g, VertexSet u)
{
    bool clique = true;
    u.for_each([&](int v) {
        if (!u.without(v).is_subset_of(g.neighbors(v)))
            clique = false;
    });
    return clique;
}

bool is_chordal(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    VertexSet visited;

    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited.contains(v) && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        visited.insert(best);
        position[static_cast<std::size_t>(best)] = step;
        visit_order.push_back(best);
        (g.neighbors(best) - visited).for_each([&](int w) { ++weight[static_cast<std::size_t>(w)]; });
    }

    // The reverse of an MCS visit order is a perfect elimination ordering iff g is chordal.
    for (int v : visit_order) {
        VertexSet earlier;
        g.neighbors(v).for_each([&](int w) {
            if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)])
                earlier.insert(w);
        });
        if (earlier.size() <= 1)
            continue;
        int parent = -1;
        earlier.for_each([&](int w) {
            if (parent < 0 || position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(parent)])
                parent = w;
        });
        if (!earlier.without(parent).is_subset_of(g.neighbors(parent)))
            return false;
    }
    return true;
}

}  // namespace cutcx
