#include "iasi/dot.hpp"

#include "iasi/document.hpp"

namespace iasi {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_dot(const LabeledGraph& lg)
{
    const auto& g = lg.graph();
    std::string out = "graph iasi {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        out += "  " + quoted(g.vertices()[i]) + " [label=" + quoted(to_string(lg.vertex_labels()[i])) + "];\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        out += "  " + quoted(e.u) + " -- " + quoted(e.v) + " [label=" + quoted(to_string(lg.edge_labels()[i]))
            + "];\n";
    }
    out += "}\n";
    return out;
}

void export_dot(const LabeledGraph& lg, const std::filesystem::path& path)
{
    write_file(path, render_dot(lg));
}

} // namespace iasi
