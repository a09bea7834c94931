#pragma once

#include "iasi/graph.hpp"

#include <filesystem>
#include <string>

namespace iasi {

/// Undirected DOT: one node line per vertex and one edge line per edge, both
/// carrying the set-label as "{a,b,c}", in lexicographic order.
std::string render_dot(const LabeledGraph& lg);

void export_dot(const LabeledGraph& lg, const std::filesystem::path& path);

} // namespace iasi
