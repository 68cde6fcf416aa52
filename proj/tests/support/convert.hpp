#ifndef CUTCX_TESTS_CONVERT_HPP
#define CUTCX_TESTS_CONVERT_HPP

#include <set>
#include <vector>

#include "cutcx/graph.hpp"
#include "cutcx/simplicial.hpp"
#include "oracles.hpp"

namespace testing {

inline cutcx::Graph to_graph(const oracle::Matrix& a)
{
    return cutcx::Graph(static_cast<int>(a.size()), oracle::edges(a));
}

inline oracle::Set to_set(cutcx::VertexSet s) { return s.to_vector(); }

inline std::set<oracle::Set> facet_sets(const cutcx::SimplicialComplex& c)
{
    std::set<oracle::Set> out;
    for (cutcx::VertexSet f : c.facets())
        out.insert(f.to_vector());
    return out;
}

inline std::vector<oracle::Set> to_sets(const std::vector<cutcx::VertexSet>& v)
{
    std::vector<oracle::Set> out;
    for (cutcx::VertexSet s : v)
        out.push_back(s.to_vector());
    return out;
}

}  // namespace testing

#endif  // CUTCX_TESTS_CONVERT_HPP
