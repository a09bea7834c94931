#pragma once

#include "iasi/graph.hpp"
#include "iasi/verifier.hpp"

#include <set>
#include <string>
#include <string_view>

namespace iasi {

/// A transfer produced an injective labeling that is not arithmetic.
class NonArithmeticResult : public Error {
public:
    NonArithmeticResult(const std::string& what, LabeledGraph result, ClassificationReport report);
    [[nodiscard]] const LabeledGraph& result() const noexcept { return result_; }
    [[nodiscard]] const ClassificationReport& report() const noexcept { return report_; }

private:
    LabeledGraph result_;
    ClassificationReport report_;
};

// Every transform below requires an arithmetic input (PreconditionError
// otherwise) and re-verifies its output: a non-injective transfer raises
// CollisionError, a non-arithmetic one NonArithmeticResult. Structural
// failures of the resulting graph surface as GraphError.

/// Merges the endpoints of `e` into one vertex labeled f+(e). Parallel edges collapse.
LabeledGraph contract_edge(const LabeledGraph& lg, const Edge& e);

/// Removes a degree-2 vertex whose neighbors are non-adjacent and joins them.
LabeledGraph reduce_topologically(const LabeledGraph& lg, std::string_view v);

/// Inserts a vertex on `e` labeled f+(e).
LabeledGraph subdivide(const LabeledGraph& lg, const Edge& e);

/// L(G) with the edge labels of G as vertex labels. Needs at least two edges.
LabeledGraph to_line_graph(const LabeledGraph& lg);

/// T(G): vertices keep their names and labels, edge points are named after
/// their endpoints and labeled f+(e).
LabeledGraph to_total_graph(const LabeledGraph& lg);

/// Name for a point standing for edge {u,v}, e.g. "u~v"; primes appended
/// until it avoids `taken`.
std::string pair_name(const Edge& e, const std::set<std::string, std::less<>>& taken);

} // namespace iasi
