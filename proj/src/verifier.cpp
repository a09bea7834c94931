#include "iasi/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace iasi {

std::string to_string(const Collision& c)
{
    return to_string(c.first) + " and " + to_string(c.second) + " share label " + to_string(c.label);
}

CollisionError::CollisionError(Collision c)
    : Error("label collision: " + to_string(c)), collision_(std::move(c))
{
}

namespace {

template <typename Key>
std::optional<Collision> first_collision(const std::vector<Key>& keys, const std::vector<IntegerSet>& labels)
{
    std::vector<std::size_t> idx(labels.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    // Report the pair whose later member comes first in canonical order.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (labels[idx[i]] != labels[idx[i - 1]])
            continue;
        if (i >= 2 && labels[idx[i - 2]] == labels[idx[i]])
            continue;
        if (!best || idx[i] < best->second)
            best = std::pair{idx[i - 1], idx[i]};
    }
    if (!best)
        return std::nullopt;
    return Collision{Element{keys[best->first]}, Element{keys[best->second]}, labels[best->first]};
}

} // namespace

IasiCheck verify_iasi(const LabeledGraph& lg)
{
    const auto& g = lg.graph();
    if (auto c = first_collision(g.vertices(), lg.vertex_labels()))
        return {false, std::move(c)};
    if (auto c = first_collision(g.edges(), lg.edge_labels()))
        return {false, std::move(c)};
    return {true, std::nullopt};
}

std::vector<EdgeClass> classify_edges(const LabeledGraph& lg)
{
    const auto& g = lg.graph();
    std::vector<EdgeClass> out;
    out.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        auto m = lg.vertex_label(e.u).size();
        auto n = lg.vertex_label(e.v).size();
        auto card = lg.edge_labels()[i].size();
        out.push_back({e, card, card == std::max(m, n), card == m * n});
    }
    return out;
}

namespace {

std::optional<std::size_t> common_size(const std::vector<IntegerSet>& labels)
{
    if (labels.empty())
        return std::nullopt;
    auto first = labels.front().size();
    for (const auto& l : labels)
        if (l.size() != first)
            return std::nullopt;
    return first;
}

} // namespace

Uniformity check_uniformity(const LabeledGraph& lg)
{
    return {common_size(lg.edge_labels()), common_size(lg.vertex_labels())};
}

ClassificationReport classify_arithmetic(const LabeledGraph& lg, SemiMode mode)
{
    const auto& g = lg.graph();
    ClassificationReport r;
    r.iasi = verify_iasi(lg);
    r.per_edge = classify_edges(lg);
    auto u = check_uniformity(lg);
    r.uniform_k = u.k;
    r.vertex_uniform_l = u.l;

    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto ap = detect_ap(lg.vertex_labels()[i]);
        if (!ap || ap->length() < 2)
            r.non_ap_vertices.push_back(g.vertices()[i]);
        else if (ap->sub_minimal())
            r.sub_minimal_vertices.push_back(g.vertices()[i]);
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!detect_ap(lg.edge_labels()[i]))
            r.non_ap_edges.push_back(g.edges()[i]);

    r.vertex_arithmetic = r.non_ap_vertices.empty() && r.sub_minimal_vertices.empty();
    r.edge_arithmetic = r.non_ap_edges.empty();
    r.arithmetic = r.vertex_arithmetic && r.edge_arithmetic;
    bool edges_not_ap = mode == SemiMode::some_edge
        ? !r.non_ap_edges.empty()
        : r.non_ap_edges.size() == g.edge_count() && g.edge_count() > 0;
    r.semi_arithmetic = r.vertex_arithmetic && edges_not_ap;
    r.edge_without_vertex_arithmetic = r.edge_arithmetic && !r.vertex_arithmetic;
    return r;
}

bool is_arithmetic(const LabeledGraph& lg)
{
    for (const auto& l : lg.vertex_labels()) {
        auto ap = detect_ap(l);
        if (!ap || ap->length() < 3)
            return false;
    }
    for (const auto& l : lg.edge_labels())
        if (!detect_ap(l))
            return false;
    return true;
}

std::optional<MultiplierViolation> multiplier_violation(
    const Edge& e, Value d_u, std::size_t size_u, Value d_v, std::size_t size_v)
{
    Value small = d_u, large = d_v;
    std::size_t bound = size_u;
    if (d_v < d_u) {
        std::swap(small, large);
        bound = size_v;
    }
    if (large % small != 0)
        return MultiplierViolation{e, small, large, std::nullopt, bound};
    Value k = large / small;
    if (k > bound)
        return MultiplierViolation{e, small, large, k, bound};
    return std::nullopt;
}

MultiplierReport check_multiplier_condition(const LabeledGraph& lg)
{
    const auto& g = lg.graph();
    MultiplierReport r;
    std::vector<Value> index(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto ap = detect_ap(lg.vertex_labels()[i]);
        if (!ap || ap->length() < 2)
            throw NotVertexArithmetic("vertex '" + g.vertices()[i] + "' label "
                                      + to_string(lg.vertex_labels()[i]) + " has no deterministic index");
        if (ap->sub_minimal())
            r.sub_minimal_vertices.push_back(g.vertices()[i]);
        index[i] = ap->difference().value();
    }
    for (const auto& e : g.edges()) {
        auto iu = *g.vertex_index(e.u);
        auto iv = *g.vertex_index(e.v);
        if (auto v = multiplier_violation(e, index[iu], lg.vertex_labels()[iu].size(),
                                          index[iv], lg.vertex_labels()[iv].size()))
            r.violations.push_back(*v);
    }
    r.holds = r.violations.empty();
    return r;
}

namespace {

GcdReport gcd_over(const LabeledGraph& lg, const std::vector<std::string>& members)
{
    const auto& g = lg.graph();
    GcdReport r;
    r.min_vertex_index = 0;
    std::vector<bool> inside(g.vertex_count(), false);
    for (const auto& v : members) {
        auto i = *g.vertex_index(v);
        inside[i] = true;
        Value d = deterministic_index(lg.vertex_labels()[i]).value();
        r.gcd_vertices = std::gcd(r.gcd_vertices, d);
        r.min_vertex_index = r.min_vertex_index == 0 ? d : std::min(r.min_vertex_index, d);
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!inside[*g.vertex_index(g.edges()[i].u)])
            continue;
        r.gcd_edges = std::gcd(r.gcd_edges, deterministic_index(lg.edge_labels()[i]).value());
    }
    r.holds = r.gcd_vertices == r.gcd_edges && r.gcd_edges == r.min_vertex_index;
    return r;
}

void require_arithmetic(const LabeledGraph& lg)
{
    if (!is_arithmetic(lg))
        throw PreconditionError("gcd invariant needs an arithmetic labeling");
}

} // namespace

GcdReport check_gcd_invariant(const LabeledGraph& lg)
{
    require_arithmetic(lg);
    auto comps = lg.graph().components();
    if (comps.size() != 1)
        throw DisconnectedGraph("gcd invariant needs a connected graph; found "
                                + std::to_string(comps.size()) + " components");
    return gcd_over(lg, comps.front());
}

std::vector<ComponentGcd> check_gcd_invariant_per_component(const LabeledGraph& lg)
{
    require_arithmetic(lg);
    std::vector<ComponentGcd> out;
    for (auto& comp : lg.graph().components()) {
        auto report = gcd_over(lg, comp);
        out.push_back({std::move(comp), report});
    }
    return out;
}

bool check_singleton_endpoint_rule(const LabeledGraph& lg)
{
    for (const auto& ec : classify_edges(lg)) {
        if (!ec.weak)
            continue;
        if (lg.vertex_label(ec.edge.u).size() != 1 && lg.vertex_label(ec.edge.v).size() != 1)
            return false;
    }
    return true;
}

} // namespace iasi
