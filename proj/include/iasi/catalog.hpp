#pragma once

#include "iasi/constructor.hpp"
#include "iasi/graph.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

struct CatalogEntry {
    /// Canonical edge list, e.g. "n3:0-1,1-2".
    std::string id;
    std::size_t n = 0;
    /// Named families this exact labeled graph realizes: "P4", "C4", "K4", "K1,3".
    std::vector<std::string> families;
    Graph graph;
};

/// Every connected labeled simple graph on 2..max_n vertices, each once, by
/// adjacency bitmask in increasing mask order. Vertices are "0".."n-1".
/// Throws InvalidArgument unless 2 <= max_n <= 7.
void for_each_catalog_graph(std::size_t max_n, const std::function<void(const CatalogEntry&)>& visit);

std::vector<CatalogEntry> enumerate_catalog(std::size_t max_n);

/// Number of connected labeled graphs on exactly n vertices, by the same enumeration.
std::size_t count_connected_labeled(std::size_t n);

std::string graph_id(const Graph& g);

enum class Outcome { pass, fail, discrepancy };

std::string_view to_string(Outcome o);

struct CheckRecord {
    std::string graph_id;
    std::string check;
    Outcome outcome = Outcome::pass;
    nlohmann::json witness = nlohmann::json::object();
    std::optional<double> wall_time_ms;
};

/// One JSON object on one line, keys sorted.
std::string to_jsonl(const CheckRecord& r);

struct CatalogOptions {
    std::size_t max_n = 4;
    std::vector<MultiplierPolicy> policies{MultiplierPolicy::fixed};
    std::uint64_t seed = 0;
    Value base_difference = 1;
    std::size_t min_label_size = 3;
    std::size_t max_label_size = 3;
    OffsetPolicy offset_policy = OffsetPolicy::geometric;
    /// n = 7 means ~1.9M graphs per policy; refused unless set.
    bool allow_seven = false;
    /// Apply the five transforms and the subdivide/reduce round trip.
    bool transforms = true;
    /// Largest n whose graphs get the transform checks.
    std::size_t transform_max_n = 7;
    /// Complete-graph partition and gcd probes; may report discrepancies.
    bool probes = false;
    bool record_timing = false;
    unsigned jobs = 1;
};

struct CatalogSummary {
    std::size_t graphs = 0;
    std::size_t records = 0;
    std::size_t passes = 0;
    std::size_t fails = 0;
    std::size_t discrepancies = 0;
    std::size_t fallbacks = 0;
    std::size_t collisions = 0;

    /// 0 when everything passed, 1 otherwise.
    [[nodiscard]] int exit_code() const noexcept { return fails == 0 && discrepancies == 0 ? 0 : 1; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Constructs, verifies, classifies, checks and transforms every catalog graph
/// under every policy. Records reach `sink` in catalog order whatever `jobs` is.
CatalogSummary run_catalog_checks(const CatalogOptions& options, const std::function<void(const CheckRecord&)>& sink);

/// Records for a single graph and policy, in emission order.
std::vector<CheckRecord> check_graph_under_policy(const CatalogEntry& entry, MultiplierPolicy policy,
                                                  const CatalogOptions& options);

/// Probe records: three-class arithmetic labelings of K_n and a gcd counterexample path.
std::vector<CheckRecord> run_probes(std::size_t max_n);

} // namespace iasi
