#include "iasi/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace iasi {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw DocumentError("malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
    }
}

std::string pointer_token(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what)
{
    throw DocumentError("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& pointer, std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            schema_error(pointer + "/" + pointer_token(key), "unknown field");
    }
}

const json& require(const json& obj, const std::string& pointer, const std::string& key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(pointer, "missing field '" + key + "'");
    return *it;
}

Graph read_graph(const json& doc)
{
    const json& graph = require(doc, "", "graph");
    if (!graph.is_object())
        schema_error("/graph", "expected an object");
    reject_unknown_keys(graph, "/graph", {"vertices", "edges"});

    const json& vs = require(graph, "/graph", "vertices");
    if (!vs.is_array())
        schema_error("/graph/vertices", "expected an array");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string())
            schema_error("/graph/vertices/" + std::to_string(i), "expected a string");
        vertices.push_back(vs[i].get<std::string>());
    }
    std::set<std::string, std::less<>> known(vertices.begin(), vertices.end());

    const json& es = require(graph, "/graph", "edges");
    if (!es.is_array())
        schema_error("/graph/edges", "expected an array");
    std::vector<RawEdge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto ptr = "/graph/edges/" + std::to_string(i);
        const json& e = es[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            schema_error(ptr, "expected a pair of vertex names");
        auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
        for (const auto& end : {a, b})
            if (!known.contains(end))
                schema_error(ptr, "edge (" + a + "," + b + ") references unknown vertex '" + end + "'");
        edges.emplace_back(std::move(a), std::move(b));
    }
    return validate_graph(vertices, edges);
}

void check_top_level(const json& doc)
{
    if (!doc.is_object())
        schema_error("", "expected an object");
    reject_unknown_keys(doc, "", {"graph", "labels", "metadata"});
    if (doc.contains("metadata") && !doc["metadata"].is_object())
        schema_error("/metadata", "expected an object");
}

} // namespace

LoadedDocument parse_document(std::string_view text)
{
    json doc = parse_json(text);
    check_top_level(doc);
    Graph g = read_graph(doc);

    LoadedDocument out;
    const json& labels = require(doc, "", "labels");
    if (!labels.is_object())
        schema_error("/labels", "expected an object");

    VertexLabeling f;
    for (const auto& [name, arr] : labels.items()) {
        auto ptr = "/labels/" + pointer_token(name);
        if (!g.has_vertex(name))
            schema_error(ptr, "label for unknown vertex '" + name + "'");
        if (!arr.is_array() || arr.empty())
            schema_error(ptr, "expected a nonempty integer array");
        std::vector<Value> values;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_unsigned())
                schema_error(ptr + "/" + std::to_string(i), "expected a non-negative 64-bit integer");
            values.push_back(arr[i].get<Value>());
        }
        if (!std::is_sorted(values.begin(), values.end())
            || std::adjacent_find(values.begin(), values.end()) != values.end())
            out.warnings.push_back(ptr + ": label array not strictly ascending; normalized");
        f.emplace(name, IntegerSet(std::move(values)));
    }
    for (const auto& v : g.vertices())
        if (!f.contains(v))
            schema_error("/labels", "missing label for vertex '" + v + "'");

    out.labeling = induce_edge_labels(std::move(g), f);
    if (doc.contains("metadata"))
        out.metadata = doc["metadata"];
    return out;
}

Graph parse_graph_document(std::string_view text)
{
    json doc = parse_json(text);
    check_top_level(doc);
    return read_graph(doc);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DocumentError("cannot write '" + path.string() + "'");
    out << contents;
    if (!out)
        throw DocumentError("write to '" + path.string() + "' failed");
}

LoadedDocument load_document(const std::filesystem::path& path)
{
    auto text = read_file(path);
    try {
        return parse_document(text);
    } catch (const DocumentError& e) {
        throw DocumentError(path.string() + ": " + e.what());
    }
}

Graph load_graph_document(const std::filesystem::path& path)
{
    auto text = read_file(path);
    try {
        return parse_graph_document(text);
    } catch (const DocumentError& e) {
        throw DocumentError(path.string() + ": " + e.what());
    }
}

std::string render_document(const LabeledGraph& lg, const json& metadata)
{
    const auto& g = lg.graph();
    json doc;
    doc["graph"]["vertices"] = g.vertices();
    doc["graph"]["edges"] = json::array();
    for (const auto& e : g.edges())
        doc["graph"]["edges"].push_back({e.u, e.v});
    doc["labels"] = json::object();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        auto elems = lg.vertex_labels()[i].elements();
        doc["labels"][g.vertices()[i]] = std::vector<Value>(elems.begin(), elems.end());
    }
    doc["metadata"] = metadata.is_null() ? json::object() : metadata;
    return doc.dump(2) + "\n";
}

void save_document(const LabeledGraph& lg, const std::filesystem::path& path, const json& metadata)
{
    write_file(path, render_document(lg, metadata));
}

} // namespace iasi
