#pragma once

#include "iasi/graph.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

/// Malformed or schema-violating document. The message carries a line and
/// column for syntax errors and a JSON pointer for field errors.
class DocumentError : public Error {
public:
    using Error::Error;
};

struct LoadedDocument {
    LabeledGraph labeling;
    nlohmann::json metadata = nlohmann::json::object();
    /// Non-fatal normalizations, e.g. a label array that was not ascending.
    std::vector<std::string> warnings;
};

// Document layout:
//   {"graph":{"vertices":[string,...],"edges":[[string,string],...]},
//    "labels":{vertex:[int,...],...},
//    "metadata":{...}}
// Unknown keys at the top level and inside "graph" are rejected.

LoadedDocument parse_document(std::string_view text);
LoadedDocument load_document(const std::filesystem::path& path);

/// Graph-only documents for the constructor; "labels" may be absent and is ignored if present.
Graph parse_graph_document(std::string_view text);
Graph load_graph_document(const std::filesystem::path& path);

std::string render_document(const LabeledGraph& lg, const nlohmann::json& metadata = nlohmann::json::object());
void save_document(const LabeledGraph& lg, const std::filesystem::path& path,
                   const nlohmann::json& metadata = nlohmann::json::object());

/// Entire file contents; DocumentError if unreadable.
std::string read_file(const std::filesystem::path& path);
/// DocumentError if the destination cannot be written.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace iasi
