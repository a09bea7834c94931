#pragma once

#include "iasi/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

enum class MultiplierPolicy {
    fixed,   ///< always the configured k (default 1)
    random,  ///< uniform in [1, bound]
    maximal, ///< the bound itself
};

std::string_view to_string(MultiplierPolicy p);
/// Throws InvalidArgument on unknown names.
MultiplierPolicy parse_multiplier_policy(std::string_view name);

enum class OffsetPolicy {
    /// First terms stride * s_i with s_i a Sidon sequence: pairwise sums of
    /// first terms differ, so edge labels have distinct minima.
    sidon,
    /// First terms stride * 4^i: any two sums of first terms with coefficients
    /// at most 2 differ, which covers the labels of line, total, contracted and
    /// subdivided graphs. Overflows past a few dozen vertices.
    geometric,
    /// Caller-supplied first terms, in traversal order.
    explicit_list,
};

std::string_view to_string(OffsetPolicy p);
OffsetPolicy parse_offset_policy(std::string_view name);

struct ConstructionParams {
    Value base_difference = 1;
    std::size_t min_label_size = 3;
    std::size_t max_label_size = 3;
    MultiplierPolicy multiplier_policy = MultiplierPolicy::fixed;
    /// Multiplier used by the fixed policy.
    std::size_t fixed_k = 1;
    std::uint64_t seed = 0;
    OffsetPolicy offset_policy = OffsetPolicy::sidon;
    /// Stride between first terms; 0 picks one larger than twice the widest label span.
    Value offset_stride = 0;
    std::vector<Value> explicit_offsets;
};

/// Throws InvalidArgument when sizes < 3, min > max, difference or fixed_k is 0.
void validate(const ConstructionParams& p);

struct Construction {
    LabeledGraph labeling;
    /// Vertices in the order they received labels.
    std::vector<std::string> order;
    /// True when the greedy choice failed somewhere and every vertex got the base difference.
    bool fell_back = false;
    std::vector<std::string> diagnostics;
};

/// Arithmetic IASI for any graph: breadth-first from the smallest vertex of
/// each component, each vertex taking a multiple of its visited neighbors'
/// common differences within the cardinality bounds. Result is verified;
/// CollisionError only arises from explicit offsets.
Construction construct_arbitrary(const Graph& g, const ConstructionParams& p);

/// Arithmetic IASI of K_n: the first r vertices get difference d, the
/// remaining l get k*d. `sizes` holds one size for all vertices or one per vertex.
/// Vertices are named "0".."n-1", zero-padded to equal width.
LabeledGraph construct_complete(std::size_t n, std::size_t r, std::size_t l, Value d, std::size_t k,
                                const std::vector<std::size_t>& sizes);

/// f restricted to a subgraph h. Throws InvalidArgument naming any vertex or
/// edge of h absent from lg.
LabeledGraph restrict_labeling(const LabeledGraph& lg, const Graph& h);

/// Names "0".."n-1", zero-padded so lexicographic order is numeric order.
std::vector<std::string> numbered_vertices(std::size_t n);

/// Greedy Sidon sequence 0, 1, 3, 7, 12, 20, ... of the given length.
std::vector<Value> sidon_sequence(std::size_t count);

} // namespace iasi
