#pragma once

#include "iasi/errors.hpp"
#include "iasi/sumset.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace iasi {

/// Undirected edge; endpoints held in lexicographic order (u < v).
struct Edge {
    std::string u;
    std::string v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonicalizes endpoint order.
Edge make_edge(std::string a, std::string b);
std::string to_string(const Edge& e);

/// A vertex name or an edge: anything that can carry a set-label.
using Element = std::variant<std::string, Edge>;
std::string to_string(const Element& e);

enum class ViolationKind {
    empty_graph,
    duplicate_vertex,
    self_loop,
    duplicate_edge,
    dangling_endpoint,
    isolated_vertex,
};

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string element;

    [[nodiscard]] std::string message() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

class GraphError : public Error {
public:
    explicit GraphError(std::vector<Violation> violations);
    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

using RawEdge = std::pair<std::string, std::string>;

/// Simple finite graph without isolated vertices. Vertices are kept in
/// lexicographic order and edges in lexicographic order of their canonical pairs.
class Graph {
public:
    [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

    [[nodiscard]] std::optional<std::size_t> vertex_index(std::string_view name) const;
    [[nodiscard]] std::optional<std::size_t> edge_index(const Edge& e) const;
    [[nodiscard]] bool has_vertex(std::string_view name) const { return vertex_index(name).has_value(); }
    [[nodiscard]] bool has_edge(const std::string& a, const std::string& b) const;

    /// Neighbors in lexicographic order. Throws InvalidArgument on unknown names.
    [[nodiscard]] std::vector<std::string> neighbors(std::string_view name) const;
    [[nodiscard]] std::size_t degree(std::string_view name) const;
    /// Indices into edges() of the edges incident to vertex `i`.
    [[nodiscard]] const std::vector<std::size_t>& incident_edges(std::size_t i) const { return incident_[i]; }
    [[nodiscard]] const std::vector<std::size_t>& adjacent_vertices(std::size_t i) const { return adjacency_[i]; }

    [[nodiscard]] bool is_connected() const;
    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    [[nodiscard]] std::vector<std::vector<std::string>> components() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    friend Graph validate_graph(const std::vector<std::string>& raw_vertices, const std::vector<RawEdge>& raw_edges);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Every structural problem with the raw input, in input order.
std::vector<Violation> check_graph(const std::vector<std::string>& raw_vertices, const std::vector<RawEdge>& raw_edges);

/// Canonical graph, or GraphError listing every violation.
Graph validate_graph(const std::vector<std::string>& raw_vertices, const std::vector<RawEdge>& raw_edges);

/// Convenience for building from a canonical edge list; the vertex set is the set of endpoints.
Graph graph_from_edges(const std::vector<RawEdge>& raw_edges);

using VertexLabeling = std::map<std::string, IntegerSet, std::less<>>;

/// A graph with vertex set-labels f and the induced edge labels f+(uv) = f(u) + f(v).
///
/// Injectivity is not enforced here; see verify_iasi.
class LabeledGraph {
public:
    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    /// Aligned with graph().vertices().
    [[nodiscard]] const std::vector<IntegerSet>& vertex_labels() const noexcept { return vertex_labels_; }
    /// Aligned with graph().edges().
    [[nodiscard]] const std::vector<IntegerSet>& edge_labels() const noexcept { return edge_labels_; }

    [[nodiscard]] const IntegerSet& vertex_label(std::string_view name) const;
    [[nodiscard]] const IntegerSet& edge_label(const Edge& e) const;
    [[nodiscard]] const IntegerSet& label(const Element& e) const;
    [[nodiscard]] VertexLabeling labeling() const;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

    friend LabeledGraph induce_edge_labels(Graph g, const VertexLabeling& f);

private:
    Graph graph_;
    std::vector<IntegerSet> vertex_labels_;
    std::vector<IntegerSet> edge_labels_;
};

/// Throws InvalidLabeling naming the vertex when a label is missing, empty, or
/// given for a vertex outside the graph; OverflowError when an edge sum overflows.
LabeledGraph induce_edge_labels(Graph g, const VertexLabeling& f);

struct IndexSummary {
    std::map<std::string, std::size_t> vertex_indexing_numbers;
    std::map<Edge, std::size_t> edge_indexing_numbers;
    std::map<std::string, DeterministicIndex> vertex_deterministic_indices;
    std::map<Edge, DeterministicIndex> edge_deterministic_indices;
};

/// Deterministic index of a label: defined iff the label is an AP of length >= 2.
DeterministicIndex deterministic_index(const IntegerSet& label);

IndexSummary summarize_indices(const LabeledGraph& lg);

} // namespace iasi
