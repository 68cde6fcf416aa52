#include "cutcx/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace cutcx {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Next line with tokens left after stripping '#' comments.
bool next_line(std::istream& in, std::size_t& counter, Line& out)
{
    std::string raw;
    while (std::getline(in, raw)) {
        ++counter;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream tokens(raw);
        std::vector<std::string> parts;
        for (std::string tok; tokens >> tok;)
            parts.push_back(tok);
        if (parts.empty())
            continue;
        out = Line{counter, std::move(parts)};
        return true;
    }
    return false;
}

int parse_int(const std::string& token, std::size_t line, const char* what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" + token + "'");
    return value;
}

int parse_ground_size(const std::string& token, std::size_t line)
{
    const int n = parse_int(token, line, "vertex count");
    if (n < 0 || n > kMaxVertices)
        throw ParseError(line, "vertex count " + std::to_string(n) + " outside [0, 64]");
    return n;
}

}  // namespace

Graph read_edge_list(std::istream& in)
{
    std::size_t counter = 0;
    Line line;
    if (!next_line(in, counter, line))
        throw ParseError(0, "edge list is empty (missing vertex count)");
    if (line.tokens.size() != 1)
        throw ParseError(line.number, "first line must hold only the vertex count");
    const int n = parse_ground_size(line.tokens[0], line.number);

    std::vector<std::pair<int, int>> edges;
    while (next_line(in, counter, line)) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected 'u v', got " + std::to_string(line.tokens.size()) + " fields");
        const int u = parse_int(line.tokens[0], line.number, "endpoint");
        const int v = parse_int(line.tokens[1], line.number, "endpoint");
        if (!(0 <= u && u < v && v < n))
            throw ParseError(line.number, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                              " violates 0 <= u < v < " + std::to_string(n));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

std::vector<VertexSet> read_facet_list(std::istream& in, int& n)
{
    std::size_t counter = 0;
    Line line;
    if (!next_line(in, counter, line))
        throw ParseError(0, "facet file is empty (missing 'n t' header)");
    if (line.tokens.size() != 2)
        throw ParseError(line.number, "header must be 'n t'");
    n = parse_ground_size(line.tokens[0], line.number);
    const int t = parse_int(line.tokens[1], line.number, "facet count");
    if (t < 0)
        throw ParseError(line.number, "negative facet count");

    std::vector<VertexSet> facets;
    facets.reserve(static_cast<std::size_t>(t));
    while (next_line(in, counter, line)) {
        if (facets.size() == static_cast<std::size_t>(t))
            throw ParseError(line.number, "more facet lines than the declared " + std::to_string(t));
        VertexSet facet;
        if (!(line.tokens.size() == 1 && line.tokens[0] == "-")) {
            int previous = -1;
            for (const auto& tok : line.tokens) {
                const int v = parse_int(tok, line.number, "vertex");
                if (v < 0 || v >= n)
                    throw ParseError(line.number, "vertex " + std::to_string(v) + " outside [0, " +
                                                      std::to_string(n) + ")");
                if (v <= previous)
                    throw ParseError(line.number, "vertices must be strictly ascending");
                previous = v;
                facet.insert(v);
            }
        }
        facets.push_back(facet);
    }
    if (facets.size() != static_cast<std::size_t>(t))
        throw ParseError(counter, "expected " + std::to_string(t) + " facet lines, found " +
                                      std::to_string(facets.size()));
    return facets;
}

SimplicialComplex read_facet_file(std::istream& in)
{
    int n = 0;
    const auto facets = read_facet_list(in, n);
    return SimplicialComplex::from_facets(n, facets);
}

void write_facet_list(std::ostream& out, int n, const std::vector<VertexSet>& facets)
{
    out << n << ' ' << facets.size() << '\n';
    for (VertexSet f : facets) {
        if (f.empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        f.for_each([&](int v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
}

void write_facet_file(std::ostream& out, const SimplicialComplex& c)
{
    write_facet_list(out, c.ground_size(), c.facets());
}

}  // namespace cutcx
