#include "iasi/graph.hpp"

#include <algorithm>
#include <set>

namespace iasi {

Edge make_edge(std::string a, std::string b)
{
    if (b < a)
        std::swap(a, b);
    return Edge{std::move(a), std::move(b)};
}

std::string to_string(const Edge& e)
{
    return "(" + e.u + "," + e.v + ")";
}

std::string to_string(const Element& e)
{
    if (const auto* v = std::get_if<std::string>(&e))
        return *v;
    return to_string(std::get<Edge>(e));
}

std::string_view to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::empty_graph: return "empty-graph";
    case ViolationKind::duplicate_vertex: return "duplicate-vertex";
    case ViolationKind::self_loop: return "self-loop";
    case ViolationKind::duplicate_edge: return "duplicate-edge";
    case ViolationKind::dangling_endpoint: return "dangling-endpoint";
    case ViolationKind::isolated_vertex: return "isolated-vertex";
    }
    return "unknown";
}

std::string Violation::message() const
{
    std::string out(to_string(kind));
    if (!element.empty())
        out += ": " + element;
    return out;
}

namespace {

std::string join_messages(const std::vector<Violation>& vs)
{
    std::string out = "invalid graph";
    for (const auto& v : vs)
        out += "; " + v.message();
    return out;
}

} // namespace

GraphError::GraphError(std::vector<Violation> violations)
    : Error(join_messages(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> check_graph(const std::vector<std::string>& raw_vertices, const std::vector<RawEdge>& raw_edges)
{
    std::vector<Violation> out;
    if (raw_vertices.empty())
        out.push_back({ViolationKind::empty_graph, ""});

    std::set<std::string, std::less<>> known;
    for (const auto& v : raw_vertices)
        if (!known.insert(v).second)
            out.push_back({ViolationKind::duplicate_vertex, v});

    std::set<Edge> seen;
    std::set<std::string, std::less<>> touched;
    for (const auto& [a, b] : raw_edges) {
        Edge e = make_edge(a, b);
        bool dangling = false;
        for (const auto* end : {&a, &b}) {
            if (!known.contains(*end)) {
                out.push_back({ViolationKind::dangling_endpoint, to_string(e) + " -> " + *end});
                dangling = true;
            }
        }
        if (a == b) {
            out.push_back({ViolationKind::self_loop, to_string(e)});
            continue;
        }
        if (!seen.insert(e).second) {
            out.push_back({ViolationKind::duplicate_edge, to_string(e)});
            continue;
        }
        if (!dangling) {
            touched.insert(a);
            touched.insert(b);
        }
    }

    for (const auto& v : known)
        if (!touched.contains(v))
            out.push_back({ViolationKind::isolated_vertex, v});
    return out;
}

Graph validate_graph(const std::vector<std::string>& raw_vertices, const std::vector<RawEdge>& raw_edges)
{
    auto violations = check_graph(raw_vertices, raw_edges);
    if (!violations.empty())
        throw GraphError(std::move(violations));

    Graph g;
    g.vertices_ = raw_vertices;
    std::sort(g.vertices_.begin(), g.vertices_.end());
    g.edges_.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges)
        g.edges_.push_back(make_edge(a, b));
    std::sort(g.edges_.begin(), g.edges_.end());

    g.adjacency_.assign(g.vertices_.size(), {});
    g.incident_.assign(g.vertices_.size(), {});
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        auto u = *g.vertex_index(g.edges_[i].u);
        auto v = *g.vertex_index(g.edges_[i].v);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        g.incident_[u].push_back(i);
        g.incident_[v].push_back(i);
    }
    for (auto& row : g.adjacency_)
        std::sort(row.begin(), row.end());
    return g;
}

Graph graph_from_edges(const std::vector<RawEdge>& raw_edges)
{
    std::set<std::string> names;
    for (const auto& [a, b] : raw_edges) {
        names.insert(a);
        names.insert(b);
    }
    return validate_graph({names.begin(), names.end()}, raw_edges);
}

std::optional<std::size_t> Graph::vertex_index(std::string_view name) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(const std::string& a, const std::string& b) const
{
    return edge_index(make_edge(a, b)).has_value();
}

std::vector<std::string> Graph::neighbors(std::string_view name) const
{
    auto i = vertex_index(name);
    if (!i)
        throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
    std::vector<std::string> out;
    for (auto j : adjacency_[*i])
        out.push_back(vertices_[j]);
    return out;
}

std::size_t Graph::degree(std::string_view name) const
{
    auto i = vertex_index(name);
    if (!i)
        throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
    return adjacency_[*i].size();
}

std::vector<std::vector<std::string>> Graph::components() const
{
    std::vector<std::vector<std::string>> out;
    std::vector<bool> seen(vertices_.size(), false);
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> stack{s}, members;
        seen[s] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (auto y : adjacency_[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        auto& comp = out.emplace_back();
        for (auto m : members)
            comp.push_back(vertices_[m]);
    }
    return out;
}

bool Graph::is_connected() const
{
    return components().size() <= 1;
}

const IntegerSet& LabeledGraph::vertex_label(std::string_view name) const
{
    auto i = graph_.vertex_index(name);
    if (!i)
        throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
    return vertex_labels_[*i];
}

const IntegerSet& LabeledGraph::edge_label(const Edge& e) const
{
    auto i = graph_.edge_index(e);
    if (!i)
        throw InvalidArgument("unknown edge " + to_string(e));
    return edge_labels_[*i];
}

const IntegerSet& LabeledGraph::label(const Element& e) const
{
    if (const auto* v = std::get_if<std::string>(&e))
        return vertex_label(*v);
    return edge_label(std::get<Edge>(e));
}

VertexLabeling LabeledGraph::labeling() const
{
    VertexLabeling out;
    for (std::size_t i = 0; i < vertex_labels_.size(); ++i)
        out.emplace(graph_.vertices()[i], vertex_labels_[i]);
    return out;
}

LabeledGraph induce_edge_labels(Graph g, const VertexLabeling& f)
{
    for (const auto& [name, label] : f)
        if (!g.has_vertex(name))
            throw InvalidLabeling("label given for unknown vertex '" + name + "'");

    LabeledGraph lg;
    lg.vertex_labels_.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) {
        auto it = f.find(v);
        if (it == f.end())
            throw InvalidLabeling("vertex '" + v + "' has no label");
        if (it->second.empty())
            throw InvalidLabeling("vertex '" + v + "' has an empty label");
        lg.vertex_labels_.push_back(it->second);
    }
    lg.edge_labels_.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        const auto& a = lg.vertex_labels_[*g.vertex_index(e.u)];
        const auto& b = lg.vertex_labels_[*g.vertex_index(e.v)];
        lg.edge_labels_.push_back(sumset(a, b));
    }
    lg.graph_ = std::move(g);
    return lg;
}

DeterministicIndex deterministic_index(const IntegerSet& label)
{
    auto ap = detect_ap(label);
    return ap ? ap->difference() : DeterministicIndex::undefined();
}

IndexSummary summarize_indices(const LabeledGraph& lg)
{
    IndexSummary s;
    const auto& g = lg.graph();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& label = lg.vertex_labels()[i];
        s.vertex_indexing_numbers.emplace(g.vertices()[i], label.size());
        s.vertex_deterministic_indices.emplace(g.vertices()[i], deterministic_index(label));
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& label = lg.edge_labels()[i];
        s.edge_indexing_numbers.emplace(g.edges()[i], label.size());
        s.edge_deterministic_indices.emplace(g.edges()[i], deterministic_index(label));
    }
    return s;
}

} // namespace iasi
