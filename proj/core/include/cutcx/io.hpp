#ifndef CUTCX_IO_HPP
#define CUTCX_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcx/graph.hpp"
#include "cutcx/simplicial.hpp"

namespace cutcx {

/// Malformed input; line() is 1-based (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + reason : reason), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge list:
//   n
//   u v        (0 <= u < v < n, one edge per line)
// Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Facet file:
//   n t
//   v0 v1 ...  (t lines, ascending vertices; "-" alone is the empty facet)
// Blank lines and '#' comments are skipped. The candidates go through
// SimplicialComplex::from_facets, so non-maximal lines are absorbed.
SimplicialComplex read_facet_file(std::istream& in);
void write_facet_file(std::ostream& out, const SimplicialComplex& c);

/// Writes facets in the given order (e.g. a shelling order) instead of canonical order.
void write_facet_list(std::ostream& out, int n, const std::vector<VertexSet>& facets);

/// Reads a facet file verbatim, preserving line order and without absorbing
/// anything; returns the ground-set size through `n`.
std::vector<VertexSet> read_facet_list(std::istream& in, int& n);

}  // namespace cutcx

#endif  // CUTCX_IO_HPP
