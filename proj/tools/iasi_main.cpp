// iasi: construct, verify, classify and transform integer additive
// set-indexers, and run the exhaustive small-graph checks.
//
// Exit codes: 0 all checks passed, 1 a check failed or a discrepancy was
// found, 2 bad input or usage.

#include "iasi/catalog.hpp"
#include "iasi/constructor.hpp"
#include "iasi/document.hpp"
#include "iasi/dot.hpp"
#include "iasi/transforms.hpp"
#include "iasi/verifier.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr const char* tool_version = "0.1.0";

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

std::size_t parse_size(const std::string& s)
{
    std::size_t pos = 0;
    auto v = std::stoull(s, &pos);
    if (pos != s.size())
        throw iasi::InvalidArgument("not an integer: '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> parse_sizes(const std::string& s)
{
    auto parts = split(s, ',');
    if (parts.size() == 1)
        return {parse_size(parts[0]), parse_size(parts[0])};
    if (parts.size() == 2)
        return {parse_size(parts[0]), parse_size(parts[1])};
    throw iasi::InvalidArgument("--sizes expects <int> or <int>,<int>");
}

iasi::Edge parse_edge(const std::string& s)
{
    auto parts = split(s, ',');
    if (parts.size() != 2)
        throw iasi::InvalidArgument("--edge expects u,v");
    return iasi::make_edge(parts[0], parts[1]);
}

json collision_json(const iasi::Collision& c)
{
    return json{{"first", iasi::to_string(c.first)}, {"second", iasi::to_string(c.second)},
                {"label", iasi::to_string(c.label)}};
}

void print_warnings(const iasi::LoadedDocument& doc)
{
    for (const auto& w : doc.warnings)
        std::cerr << "warning: " << w << "\n";
}

json report_json(const iasi::ClassificationReport& r)
{
    json j;
    j["iasi"] = r.iasi.is_iasi;
    if (r.iasi.collision)
        j["collision"] = collision_json(*r.iasi.collision);
    j["vertex_arithmetic"] = r.vertex_arithmetic;
    j["edge_arithmetic"] = r.edge_arithmetic;
    j["arithmetic"] = r.arithmetic;
    j["semi_arithmetic"] = r.semi_arithmetic;
    j["uniform_k"] = r.uniform_k ? json(*r.uniform_k) : json(nullptr);
    j["vertex_uniform_l"] = r.vertex_uniform_l ? json(*r.vertex_uniform_l) : json(nullptr);
    j["sub_minimal_vertices"] = r.sub_minimal_vertices;
    j["non_ap_vertices"] = r.non_ap_vertices;
    j["edge_without_vertex_arithmetic"] = r.edge_without_vertex_arithmetic;
    json edges = json::array();
    for (const auto& e : r.per_edge)
        edges.push_back({{"edge", {e.edge.u, e.edge.v}}, {"indexing_number", e.indexing_number},
                         {"weak", e.weak}, {"strong", e.strong}});
    j["edges"] = edges;
    return j;
}

int run_construct(const std::string& input, const std::string& output, iasi::ConstructionParams p,
                  const std::string& sizes)
{
    auto g = iasi::load_graph_document(input);
    std::tie(p.min_label_size, p.max_label_size) = parse_sizes(sizes);
    auto built = iasi::construct_arbitrary(g, p);
    json meta{{"tool", "iasi"},
              {"version", tool_version},
              {"seed", p.seed},
              {"params",
               {{"d0", p.base_difference},
                {"sizes", {p.min_label_size, p.max_label_size}},
                {"policy", std::string(iasi::to_string(p.multiplier_policy))},
                {"k", p.fixed_k},
                {"offsets", std::string(iasi::to_string(p.offset_policy))}}},
              {"fallback", built.fell_back}};
    if (!built.diagnostics.empty())
        meta["diagnostics"] = built.diagnostics;
    iasi::save_document(built.labeling, output, meta);
    std::cout << json{{"constructed", true}, {"fallback", built.fell_back}, {"output", output}}.dump() << "\n";
    return exit_pass;
}

int run_verify(const std::string& input)
{
    auto doc = iasi::load_document(input);
    print_warnings(doc);
    auto check = iasi::verify_iasi(doc.labeling);
    json out{{"iasi", check.is_iasi}};
    if (check.collision)
        out["collision"] = collision_json(*check.collision);
    std::cout << out.dump() << "\n";
    return check.is_iasi ? exit_pass : exit_fail;
}

int run_classify(const std::string& input, bool strict_semi)
{
    auto doc = iasi::load_document(input);
    print_warnings(doc);
    auto r = iasi::classify_arithmetic(doc.labeling, strict_semi ? iasi::SemiMode::all_edges : iasi::SemiMode::some_edge);
    auto j = report_json(r);
    if (r.vertex_arithmetic || !r.sub_minimal_vertices.empty()) {
        try {
            auto m = iasi::check_multiplier_condition(doc.labeling);
            j["multiplier_condition"] = m.holds;
        } catch (const iasi::NotVertexArithmetic&) {
        }
    }
    if (r.arithmetic) {
        json comps = json::array();
        for (const auto& c : iasi::check_gcd_invariant_per_component(doc.labeling))
            comps.push_back({{"vertices", c.vertices}, {"holds", c.report.holds},
                             {"gcd_vertices", c.report.gcd_vertices}, {"gcd_edges", c.report.gcd_edges},
                             {"min_vertex_index", c.report.min_vertex_index}});
        j["gcd_invariant"] = comps;
    }
    j["singleton_endpoint_rule"] = iasi::check_singleton_endpoint_rule(doc.labeling);
    std::cout << j.dump() << "\n";
    return r.iasi.is_iasi ? exit_pass : exit_fail;
}

int run_transform(const std::string& op, const std::string& edge, const std::string& vertex,
                  const std::string& input, const std::string& output)
{
    auto doc = iasi::load_document(input);
    print_warnings(doc);
    const auto& lg = doc.labeling;
    auto need_edge = [&] {
        if (edge.empty())
            throw iasi::InvalidArgument("--op " + op + " needs --edge u,v");
        return parse_edge(edge);
    };

    try {
        iasi::LabeledGraph result;
        if (op == "contract")
            result = iasi::contract_edge(lg, need_edge());
        else if (op == "subdivide")
            result = iasi::subdivide(lg, need_edge());
        else if (op == "reduce") {
            if (vertex.empty())
                throw iasi::InvalidArgument("--op reduce needs --vertex v");
            result = iasi::reduce_topologically(lg, vertex);
        } else if (op == "line")
            result = iasi::to_line_graph(lg);
        else if (op == "total")
            result = iasi::to_total_graph(lg);
        else
            throw iasi::InvalidArgument("unknown transform '" + op + "'");

        json meta = doc.metadata;
        meta["transform"] = op;
        meta["tool"] = "iasi";
        meta["version"] = tool_version;
        iasi::save_document(result, output, meta);
        std::cout << json{{"transform", op}, {"arithmetic", true}, {"output", output}}.dump() << "\n";
        return exit_pass;
    } catch (const iasi::CollisionError& e) {
        std::cout << json{{"transform", op}, {"collision", collision_json(e.collision())}}.dump() << "\n";
        return exit_fail;
    } catch (const iasi::NonArithmeticResult& e) {
        std::cout << json{{"transform", op}, {"arithmetic", false}, {"error", e.what()}}.dump() << "\n";
        return exit_fail;
    }
}

int run_catalog(iasi::CatalogOptions options, const std::string& policies, const std::string& sizes,
                const std::string& records_path)
{
    options.policies.clear();
    for (const auto& name : split(policies, ','))
        options.policies.push_back(iasi::parse_multiplier_policy(name));
    std::tie(options.min_label_size, options.max_label_size) = parse_sizes(sizes);

    std::ofstream records;
    if (!records_path.empty()) {
        records.open(records_path, std::ios::binary | std::ios::trunc);
        if (!records)
            throw iasi::DocumentError("cannot write '" + records_path + "'");
    }
    auto summary = iasi::run_catalog_checks(options, [&](const iasi::CheckRecord& r) {
        if (records.is_open())
            records << iasi::to_jsonl(r) << "\n";
        if (r.outcome != iasi::Outcome::pass)
            std::cerr << iasi::to_string(r.outcome) << ": " << r.graph_id << " " << r.check << "\n";
    });
    std::cout << json{{"summary", summary.to_json()}}.dump() << "\n";
    return summary.exit_code();
}

int run_export_dot(const std::string& input, const std::string& output)
{
    auto doc = iasi::load_document(input);
    print_warnings(doc);
    iasi::export_dot(doc.labeling, output);
    std::cout << json{{"exported", output}}.dump() << "\n";
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arithmetic integer additive set-indexers of graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::string input, output;

    auto* construct = app.add_subcommand("construct", "Label a graph with an arithmetic IASI");
    iasi::ConstructionParams params;
    std::string sizes = "3";
    std::string policy = "fixed";
    std::string offsets = "sidon";
    std::vector<iasi::Value> offset_list;
    construct->add_option("--input", input, "Graph document")->required();
    construct->add_option("--output", output, "Labeled document to write")->required();
    construct->add_option("--d0", params.base_difference, "Base common difference")->check(CLI::PositiveNumber);
    construct->add_option("--sizes", sizes, "Label size or size range min,max");
    construct->add_option("--policy", policy, "Multiplier policy")->check(CLI::IsMember({"fixed", "random", "maximal"}));
    construct->add_option("--k", params.fixed_k, "Multiplier for the fixed policy")->check(CLI::PositiveNumber);
    construct->add_option("--seed", params.seed, "Seed for the random policy");
    construct->add_option("--offsets", offsets, "First-term policy")->check(CLI::IsMember({"sidon", "geometric", "explicit"}));
    construct->add_option("--offset-list", offset_list, "First terms in traversal order (with --offsets explicit)")
        ->delimiter(',');

    auto* verify = app.add_subcommand("verify", "Check that a labeling is an IASI");
    verify->add_option("--input", input, "Labeled document")->required();

    auto* classify = app.add_subcommand("classify", "Classify a labeling");
    bool strict_semi = false;
    classify->add_option("--input", input, "Labeled document")->required();
    classify->add_flag("--strict-semi", strict_semi, "Semi-arithmetic only when no edge label is an AP");

    auto* transform = app.add_subcommand("transform", "Apply a label-carrying graph transformation");
    std::string op, edge, vertex;
    transform->add_option("--op", op, "Transformation")
        ->required()
        ->check(CLI::IsMember({"contract", "reduce", "subdivide", "line", "total"}));
    transform->add_option("--edge", edge, "Edge u,v for contract and subdivide");
    transform->add_option("--vertex", vertex, "Vertex for reduce");
    transform->add_option("--input", input, "Labeled document")->required();
    transform->add_option("--output", output, "Labeled document to write")->required();

    auto* catalog = app.add_subcommand("catalog", "Check every connected graph up to a size");
    iasi::CatalogOptions copts;
    std::string catalog_policy = "fixed,maximal";
    std::string catalog_sizes = "3";
    std::string records_path;
    bool no_transforms = false;
    catalog->add_option("--max-n", copts.max_n, "Largest vertex count (2..7)")->required();
    catalog->add_option("--policy", catalog_policy, "Comma-separated multiplier policies");
    catalog->add_option("--seed", copts.seed, "Seed for the random policy");
    catalog->add_option("--d0", copts.base_difference, "Base common difference")->check(CLI::PositiveNumber);
    catalog->add_option("--sizes", catalog_sizes, "Label size or size range min,max");
    catalog->add_option("--records", records_path, "JSONL file receiving one record per check");
    catalog->add_option("--jobs", copts.jobs, "Worker threads");
    catalog->add_option("--transform-max-n", copts.transform_max_n, "Largest n that gets transform checks");
    catalog->add_flag("--allow-n7", copts.allow_seven, "Permit --max-n 7");
    catalog->add_flag("--probes", copts.probes, "Add the complete-graph and gcd probes");
    catalog->add_flag("--timing", copts.record_timing, "Add wall_time_ms to records");
    catalog->add_flag("--no-transforms", no_transforms, "Skip transform checks");

    auto* dot = app.add_subcommand("export-dot", "Write a labeled graph as Graphviz DOT");
    dot->add_option("--input", input, "Labeled document")->required();
    dot->add_option("--output", output, "DOT file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*construct) {
            params.multiplier_policy = iasi::parse_multiplier_policy(policy);
            params.offset_policy = iasi::parse_offset_policy(offsets);
            params.explicit_offsets = offset_list;
            return run_construct(input, output, params, sizes);
        }
        if (*verify)
            return run_verify(input);
        if (*classify)
            return run_classify(input, strict_semi);
        if (*transform)
            return run_transform(op, edge, vertex, input, output);
        if (*catalog) {
            copts.transforms = !no_transforms;
            return run_catalog(copts, catalog_policy, catalog_sizes, records_path);
        }
        if (*dot)
            return run_export_dot(input, output);
    } catch (const iasi::CollisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
