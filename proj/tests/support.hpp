#pragma once

#include "iasi/graph.hpp"
#include "oracle.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace support {

inline iasi::IntegerSet to_iasi(const oracle::Set& s)
{
    return iasi::IntegerSet(std::vector<iasi::Value>(s.begin(), s.end()));
}

inline oracle::Set to_oracle(const iasi::IntegerSet& s)
{
    return {s.begin(), s.end()};
}

/// Labeled graph from an edge list and one label per vertex.
inline iasi::LabeledGraph labeled(const std::vector<iasi::RawEdge>& edges, const iasi::VertexLabeling& f)
{
    return iasi::induce_edge_labels(iasi::graph_from_edges(edges), f);
}

inline iasi::IntegerSet ap(iasi::Value first, iasi::Value diff, std::size_t len)
{
    return to_iasi(oracle::progression(first, diff, len));
}

} // namespace support
