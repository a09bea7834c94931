#include "iasi/transforms.hpp"

#include <algorithm>

namespace iasi {

NonArithmeticResult::NonArithmeticResult(const std::string& what, LabeledGraph result, ClassificationReport report)
    : Error(what), result_(std::move(result)), report_(std::move(report))
{
}

std::string pair_name(const Edge& e, const std::set<std::string, std::less<>>& taken)
{
    std::string name = e.u + "~" + e.v;
    while (taken.contains(name))
        name += '\'';
    return name;
}

namespace {

void require_arithmetic(const LabeledGraph& lg, std::string_view op)
{
    if (!is_arithmetic(lg))
        throw PreconditionError(std::string(op) + ": input labeling is not arithmetic");
}

LabeledGraph finish(std::string_view op, const std::vector<std::string>& vertices,
                    const std::vector<RawEdge>& edges, const VertexLabeling& f)
{
    auto lg = induce_edge_labels(validate_graph(vertices, edges), f);
    auto r = classify_arithmetic(lg);
    if (!r.iasi.is_iasi)
        throw CollisionError(*r.iasi.collision);
    if (!r.arithmetic) {
        std::string what = std::string(op) + ": transferred labeling is not arithmetic";
        if (!r.non_ap_edges.empty())
            what += " (edge " + to_string(r.non_ap_edges.front()) + " label "
                + to_string(lg.edge_label(r.non_ap_edges.front())) + ")";
        throw NonArithmeticResult(what, std::move(lg), std::move(r));
    }
    return lg;
}

std::set<std::string, std::less<>> name_set(const Graph& g)
{
    return {g.vertices().begin(), g.vertices().end()};
}

const IntegerSet& require_edge(const LabeledGraph& lg, const Edge& e)
{
    if (!lg.graph().edge_index(e))
        throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
    return lg.edge_label(e);
}

} // namespace

LabeledGraph contract_edge(const LabeledGraph& lg, const Edge& e)
{
    const auto& merged_label = require_edge(lg, e);
    require_arithmetic(lg, "contract");
    const auto& g = lg.graph();

    auto taken = name_set(g);
    taken.erase(e.u);
    taken.erase(e.v);
    auto w = pair_name(e, taken);

    std::vector<std::string> vertices;
    VertexLabeling f;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& x = g.vertices()[i];
        if (x == e.u || x == e.v)
            continue;
        vertices.push_back(x);
        f.emplace(x, lg.vertex_labels()[i]);
    }
    vertices.push_back(w);
    f.emplace(w, merged_label);

    auto rename = [&](const std::string& x) { return x == e.u || x == e.v ? w : x; };
    std::set<Edge> edges;
    for (const auto& other : g.edges()) {
        if (other == e)
            continue;
        auto a = rename(other.u), b = rename(other.v);
        if (a != b)
            edges.insert(make_edge(a, b));
    }
    std::vector<RawEdge> raw;
    for (const auto& x : edges)
        raw.emplace_back(x.u, x.v);
    return finish("contract", vertices, raw, f);
}

LabeledGraph reduce_topologically(const LabeledGraph& lg, std::string_view v)
{
    const auto& g = lg.graph();
    if (!g.has_vertex(v))
        throw InvalidArgument("vertex '" + std::string(v) + "' is not in the graph");
    if (g.degree(v) != 2)
        throw PreconditionError("reduce: vertex '" + std::string(v) + "' has degree " + std::to_string(g.degree(v))
                                + ", expected 2");
    auto nb = g.neighbors(v);
    if (g.has_edge(nb[0], nb[1]))
        throw PreconditionError("reduce: neighbors '" + nb[0] + "' and '" + nb[1] + "' of '" + std::string(v)
                                + "' are adjacent");
    require_arithmetic(lg, "reduce");

    std::vector<std::string> vertices;
    VertexLabeling f;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (g.vertices()[i] == v)
            continue;
        vertices.push_back(g.vertices()[i]);
        f.emplace(g.vertices()[i], lg.vertex_labels()[i]);
    }
    std::vector<RawEdge> raw;
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v)
            raw.emplace_back(e.u, e.v);
    raw.emplace_back(nb[0], nb[1]);
    return finish("reduce", vertices, raw, f);
}

LabeledGraph subdivide(const LabeledGraph& lg, const Edge& e)
{
    const auto& inserted_label = require_edge(lg, e);
    require_arithmetic(lg, "subdivide");
    const auto& g = lg.graph();

    auto w = pair_name(e, name_set(g));
    auto vertices = g.vertices();
    vertices.push_back(w);
    auto f = lg.labeling();
    f.emplace(w, inserted_label);

    std::vector<RawEdge> raw;
    for (const auto& x : g.edges())
        if (x != e)
            raw.emplace_back(x.u, x.v);
    raw.emplace_back(e.u, w);
    raw.emplace_back(w, e.v);
    return finish("subdivide", vertices, raw, f);
}

LabeledGraph to_line_graph(const LabeledGraph& lg)
{
    const auto& g = lg.graph();
    if (g.edge_count() < 2)
        throw PreconditionError("line graph needs at least two edges");
    require_arithmetic(lg, "line");

    std::set<std::string, std::less<>> taken;
    std::vector<std::string> names;
    VertexLabeling f;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        names.push_back(pair_name(g.edges()[i], taken));
        taken.insert(names.back());
        f.emplace(names.back(), lg.edge_labels()[i]);
    }
    std::vector<RawEdge> raw;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                raw.emplace_back(names[inc[a]], names[inc[b]]);
    }
    return finish("line", names, raw, f);
}

LabeledGraph to_total_graph(const LabeledGraph& lg)
{
    require_arithmetic(lg, "total");
    const auto& g = lg.graph();

    auto taken = name_set(g);
    auto vertices = g.vertices();
    auto f = lg.labeling();
    std::vector<std::string> edge_points;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        edge_points.push_back(pair_name(g.edges()[i], taken));
        taken.insert(edge_points.back());
        vertices.push_back(edge_points.back());
        f.emplace(edge_points.back(), lg.edge_labels()[i]);
    }

    // Vertex and edge points share one label map, so equal labels there are a
    // collision of the transfer map itself, reported before any induced edge.
    std::map<IntegerSet, std::string> owner;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        owner.emplace(lg.vertex_labels()[i], g.vertices()[i]);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto it = owner.find(lg.edge_labels()[i]);
        if (it != owner.end())
            throw CollisionError(Collision{Element{it->second}, Element{g.edges()[i]}, lg.edge_labels()[i]});
    }

    std::vector<RawEdge> raw;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        raw.emplace_back(e.u, e.v);
        raw.emplace_back(e.u, edge_points[i]);
        raw.emplace_back(e.v, edge_points[i]);
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                raw.emplace_back(edge_points[inc[a]], edge_points[inc[b]]);
    }
    return finish("total", vertices, raw, f);
}

} // namespace iasi
