#pragma once

#include "iasi/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace iasi {

/// Two distinct elements of the same kind carrying the same set-label.
struct Collision {
    Element first;
    Element second;
    IntegerSet label;
};

std::string to_string(const Collision& c);

/// Raised when a labeling that should be an IASI is not injective.
class CollisionError : public Error {
public:
    explicit CollisionError(Collision c);
    [[nodiscard]] const Collision& collision() const noexcept { return collision_; }

private:
    Collision collision_;
};

struct IasiCheck {
    bool is_iasi = false;
    std::optional<Collision> collision;
};

/// Injectivity of the vertex labels and, separately, of the induced edge labels.
/// The witness is the first colliding pair in canonical order, vertices before edges.
IasiCheck verify_iasi(const LabeledGraph& lg);

struct EdgeClass {
    Edge edge;
    std::size_t indexing_number = 0;
    bool weak = false;
    bool strong = false;
};

std::vector<EdgeClass> classify_edges(const LabeledGraph& lg);

struct Uniformity {
    /// Common edge set-indexing number, when every edge shares one.
    std::optional<std::size_t> k;
    /// Common vertex set-indexing number, when every vertex shares one.
    std::optional<std::size_t> l;
};

Uniformity check_uniformity(const LabeledGraph& lg);

/// How "edge labels are not AP-sets" is read for semi-arithmetic labelings.
enum class SemiMode {
    some_edge, ///< at least one edge label is not an AP
    all_edges, ///< no edge label is an AP
};

struct ClassificationReport {
    IasiCheck iasi;
    std::vector<EdgeClass> per_edge;
    std::optional<std::size_t> uniform_k;
    std::optional<std::size_t> vertex_uniform_l;
    bool vertex_arithmetic = false;
    bool edge_arithmetic = false;
    bool arithmetic = false;
    bool semi_arithmetic = false;
    /// Vertices whose label is a 2-term progression: an AP, but below the
    /// three-element minimum for arithmetic labels.
    std::vector<std::string> sub_minimal_vertices;
    /// Vertices whose label is not an AP at all (singletons included).
    std::vector<std::string> non_ap_vertices;
    std::vector<Edge> non_ap_edges;
    /// Set when every edge label is an AP but some vertex label is not.
    bool edge_without_vertex_arithmetic = false;
};

ClassificationReport classify_arithmetic(const LabeledGraph& lg, SemiMode mode = SemiMode::some_edge);

/// The arithmetic flag of classify_arithmetic alone, without the rest of the report.
bool is_arithmetic(const LabeledGraph& lg);

struct MultiplierViolation {
    Edge edge;
    Value smaller_index = 0;
    Value larger_index = 0;
    /// Ratio larger/smaller when it is an integer.
    std::optional<Value> multiplier;
    /// Cardinality of the label with the smaller index, the multiplier's upper bound.
    std::size_t bound = 0;
};

struct MultiplierReport {
    bool holds = true;
    std::vector<MultiplierViolation> violations;
    std::vector<std::string> sub_minimal_vertices;
};

/// Every edge uv with d_u <= d_v must satisfy d_v = k * d_u with 1 <= k <= |f(u)|.
/// Needs an AP label of length >= 2 on every vertex, else NotVertexArithmetic.
MultiplierReport check_multiplier_condition(const LabeledGraph& lg);

/// Edge-local form of the multiplier rule.
std::optional<MultiplierViolation> multiplier_violation(
    const Edge& e, Value d_u, std::size_t size_u, Value d_v, std::size_t size_v);

struct GcdReport {
    bool holds = false;
    Value gcd_vertices = 0;
    Value gcd_edges = 0;
    Value min_vertex_index = 0;
};

/// gcd of vertex indices, gcd of edge indices, and smallest vertex index agree.
/// Requires an arithmetic labeling (PreconditionError) of a connected graph (DisconnectedGraph).
GcdReport check_gcd_invariant(const LabeledGraph& lg);

struct ComponentGcd {
    std::vector<std::string> vertices;
    GcdReport report;
};

/// The same check applied to each connected component on its own.
std::vector<ComponentGcd> check_gcd_invariant_per_component(const LabeledGraph& lg);

/// Every weak edge has an endpoint with a singleton label.
bool check_singleton_endpoint_rule(const LabeledGraph& lg);

} // namespace iasi
