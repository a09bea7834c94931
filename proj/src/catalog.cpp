#include "iasi/catalog.hpp"

#include "iasi/transforms.hpp"
#include "iasi/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace iasi {

using nlohmann::json;

namespace {

using Mask = std::uint32_t;

struct PairTable {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    explicit PairTable(std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
    }

    Mask mask_of(const std::vector<std::pair<std::size_t, std::size_t>>& edges) const
    {
        Mask m = 0;
        for (auto e : edges) {
            auto it = std::find(pairs.begin(), pairs.end(), e);
            m |= Mask{1} << (it - pairs.begin());
        }
        return m;
    }
};

bool connected(std::size_t n, Mask mask, const PairTable& t)
{
    std::vector<std::uint8_t> adj(n, 0);
    for (std::size_t b = 0; b < t.pairs.size(); ++b)
        if (mask & (Mask{1} << b)) {
            adj[t.pairs[b].first] |= std::uint8_t(1u << t.pairs[b].second);
            adj[t.pairs[b].second] |= std::uint8_t(1u << t.pairs[b].first);
        }
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (frontier & (1u << v))
                next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == std::uint8_t((1u << n) - 1);
}

std::vector<std::pair<std::string, Mask>> families_for(std::size_t n, const PairTable& t)
{
    std::vector<std::pair<std::string, Mask>> out;
    std::vector<std::pair<std::size_t, std::size_t>> path, cycle, complete, star;
    for (std::size_t i = 0; i + 1 < n; ++i)
        path.emplace_back(i, i + 1);
    cycle = path;
    if (n >= 3)
        cycle.emplace_back(0, n - 1);
    complete = t.pairs;
    for (std::size_t i = 1; i < n; ++i)
        star.emplace_back(0, i);
    auto ns = std::to_string(n);
    out.emplace_back("P" + ns, t.mask_of(path));
    if (n >= 3)
        out.emplace_back("C" + ns, t.mask_of(cycle));
    out.emplace_back("K" + ns, t.mask_of(complete));
    out.emplace_back("K1," + std::to_string(n - 1), t.mask_of(star));
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view id)
{
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::string graph_id(const Graph& g)
{
    std::string out = "n" + std::to_string(g.vertex_count()) + ":";
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first)
            out += ',';
        out += e.u + "-" + e.v;
        first = false;
    }
    return out;
}

void for_each_catalog_graph(std::size_t max_n, const std::function<void(const CatalogEntry&)>& visit)
{
    if (max_n < 2 || max_n > 7)
        throw InvalidArgument("catalog size must be in [2, 7], got " + std::to_string(max_n));
    for (std::size_t n = 2; n <= max_n; ++n) {
        PairTable t(n);
        auto names = numbered_vertices(n);
        auto families = families_for(n, t);
        const Mask limit = Mask{1} << t.pairs.size();
        for (Mask mask = 1; mask < limit; ++mask) {
            if (!connected(n, mask, t))
                continue;
            std::vector<RawEdge> edges;
            for (std::size_t b = 0; b < t.pairs.size(); ++b)
                if (mask & (Mask{1} << b))
                    edges.emplace_back(names[t.pairs[b].first], names[t.pairs[b].second]);
            CatalogEntry entry;
            entry.n = n;
            entry.graph = validate_graph(names, edges);
            entry.id = graph_id(entry.graph);
            for (const auto& [name, fmask] : families)
                if (fmask == mask)
                    entry.families.push_back(name);
            visit(entry);
        }
    }
}

std::vector<CatalogEntry> enumerate_catalog(std::size_t max_n)
{
    std::vector<CatalogEntry> out;
    for_each_catalog_graph(max_n, [&](const CatalogEntry& e) { out.push_back(e); });
    return out;
}

std::size_t count_connected_labeled(std::size_t n)
{
    if (n < 2 || n > 7)
        throw InvalidArgument("n must be in [2, 7]");
    PairTable t(n);
    std::size_t count = 0;
    const Mask limit = Mask{1} << t.pairs.size();
    for (Mask mask = 1; mask < limit; ++mask)
        if (connected(n, mask, t))
            ++count;
    return count;
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::discrepancy: return "discrepancy";
    }
    return "unknown";
}

std::string to_jsonl(const CheckRecord& r)
{
    json j;
    j["graph"] = r.graph_id;
    j["check"] = r.check;
    j["outcome"] = std::string(to_string(r.outcome));
    j["witness"] = r.witness;
    if (r.wall_time_ms)
        j["wall_time_ms"] = *r.wall_time_ms;
    return j.dump();
}

json CatalogSummary::to_json() const
{
    return json{{"graphs", graphs},   {"records", records},         {"pass", passes},
                {"fail", fails},      {"discrepancy", discrepancies}, {"fallbacks", fallbacks},
                {"collisions", collisions}};
}

namespace {

json labels_json(const LabeledGraph& lg)
{
    json out = json::object();
    for (std::size_t i = 0; i < lg.graph().vertex_count(); ++i)
        out[lg.graph().vertices()[i]] = to_string(lg.vertex_labels()[i]);
    return out;
}

json edge_json(const Edge& e)
{
    return json::array({e.u, e.v});
}

/// Tally of one transform applied to every applicable target.
struct TransferTally {
    std::size_t applied = 0;
    std::size_t arithmetic = 0;
    json collisions = json::array();
    json non_arithmetic = json::array();
    json errors = json::array();

    template <typename Fn>
    void attempt(const std::string& target, Fn&& fn)
    {
        ++applied;
        try {
            fn();
            ++arithmetic;
        } catch (const CollisionError& e) {
            collisions.push_back({{"target", target}, {"collision", to_string(e.collision())}});
        } catch (const NonArithmeticResult& e) {
            non_arithmetic.push_back({{"target", target}, {"error", e.what()}});
        } catch (const std::exception& e) {
            errors.push_back({{"target", target}, {"error", e.what()}});
        }
    }

    [[nodiscard]] Outcome outcome() const
    {
        if (!errors.empty())
            return Outcome::fail;
        if (!non_arithmetic.empty())
            return Outcome::discrepancy;
        return Outcome::pass;
    }

    [[nodiscard]] json witness() const
    {
        json w{{"applied", applied}, {"arithmetic", arithmetic}};
        if (!collisions.empty())
            w["collisions"] = collisions;
        if (!non_arithmetic.empty())
            w["non_arithmetic"] = non_arithmetic;
        if (!errors.empty())
            w["errors"] = errors;
        return w;
    }
};

class RecordBuilder {
public:
    RecordBuilder(std::string id, std::string prefix, bool timing)
        : id_(std::move(id)), prefix_(std::move(prefix)), timing_(timing), start_(Clock::now())
    {
    }

    void add(const std::string& check, Outcome outcome, json witness)
    {
        CheckRecord r{id_, prefix_ + check, outcome, std::move(witness), std::nullopt};
        auto now = Clock::now();
        if (timing_)
            r.wall_time_ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        records_.push_back(std::move(r));
    }

    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    using Clock = std::chrono::steady_clock;
    std::string id_;
    std::string prefix_;
    bool timing_;
    Clock::time_point start_;
    std::vector<CheckRecord> records_;
};

void check_edge_cardinalities(const LabeledGraph& lg, RecordBuilder& rb)
{
    const auto& g = lg.graph();
    json mismatches = json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        const auto& a = lg.vertex_label(e.u);
        const auto& b = lg.vertex_label(e.v);
        Value da = deterministic_index(a).value(), db = deterministic_index(b).value();
        std::size_t m = a.size(), n = b.size();
        if (db < da) {
            std::swap(da, db);
            std::swap(m, n);
        }
        auto predicted = predicted_edge_cardinality(m, n, static_cast<std::size_t>(db / da));
        if (predicted != lg.edge_labels()[i].size())
            mismatches.push_back({{"edge", edge_json(e)}, {"predicted", predicted},
                                  {"actual", lg.edge_labels()[i].size()}});
    }
    rb.add("edge_cardinality", mismatches.empty() ? Outcome::pass : Outcome::fail,
           json{{"edges", g.edge_count()}, {"mismatches", mismatches}});
}

void check_transforms(const LabeledGraph& lg, RecordBuilder& rb)
{
    const auto& g = lg.graph();

    TransferTally contract;
    if (g.vertex_count() > 2)
        for (const auto& e : g.edges())
            contract.attempt(to_string(e), [&] { (void)contract_edge(lg, e); });
    rb.add("contract", contract.outcome(), contract.witness());

    TransferTally reduce;
    for (const auto& v : g.vertices()) {
        if (g.degree(v) != 2)
            continue;
        auto nb = g.neighbors(v);
        if (g.has_edge(nb[0], nb[1]))
            continue;
        reduce.attempt(v, [&] { (void)reduce_topologically(lg, v); });
    }
    rb.add("reduce", reduce.outcome(), reduce.witness());

    TransferTally sub;
    std::vector<std::optional<LabeledGraph>> subdivided(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        sub.attempt(to_string(g.edges()[i]), [&] { subdivided[i] = subdivide(lg, g.edges()[i]); });
    rb.add("subdivide", sub.outcome(), sub.witness());

    TransferTally line;
    if (g.edge_count() >= 2)
        line.attempt("L(G)", [&] { (void)to_line_graph(lg); });
    rb.add("line", line.outcome(), line.witness());

    TransferTally total;
    total.attempt("T(G)", [&] { (void)to_total_graph(lg); });
    rb.add("total", total.outcome(), total.witness());

    std::size_t restored = 0, skipped = 0;
    json broken = json::array();
    const std::set<std::string, std::less<>> taken(g.vertices().begin(), g.vertices().end());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        if (!subdivided[i]) {
            ++skipped;
            continue;
        }
        try {
            auto back = reduce_topologically(*subdivided[i], pair_name(e, taken));
            if (back == lg)
                ++restored;
            else
                broken.push_back({{"edge", edge_json(e)}, {"error", "labeling not restored"}});
        } catch (const std::exception& ex) {
            broken.push_back({{"edge", edge_json(e)}, {"error", ex.what()}});
        }
    }
    json w{{"restored", restored}, {"skipped", skipped}};
    if (!broken.empty())
        w["broken"] = broken;
    rb.add("round_trip", broken.empty() ? Outcome::pass : Outcome::fail, w);
}

} // namespace

std::vector<CheckRecord> check_graph_under_policy(const CatalogEntry& entry, MultiplierPolicy policy,
                                                  const CatalogOptions& options)
{
    RecordBuilder rb(entry.id, std::string(to_string(policy)) + "/", options.record_timing);

    ConstructionParams p;
    p.base_difference = options.base_difference;
    p.min_label_size = options.min_label_size;
    p.max_label_size = options.max_label_size;
    p.multiplier_policy = policy;
    p.offset_policy = options.offset_policy;
    p.seed = mix_seed(options.seed, entry.id);

    std::optional<Construction> built;
    try {
        built = construct_arbitrary(entry.graph, p);
    } catch (const std::exception& e) {
        rb.add("construct", Outcome::fail, json{{"error", e.what()}});
        return rb.take();
    }
    const auto& lg = built->labeling;
    json cw{{"fallback", built->fell_back}, {"labels", labels_json(lg)}};
    if (!built->diagnostics.empty())
        cw["diagnostics"] = built->diagnostics;
    if (!entry.families.empty())
        cw["families"] = entry.families;
    rb.add("construct", Outcome::pass, cw);

    auto iasi = verify_iasi(lg);
    rb.add("verify_iasi", iasi.is_iasi ? Outcome::pass : Outcome::fail,
           iasi.collision ? json{{"collision", to_string(*iasi.collision)}} : json::object());

    auto report = classify_arithmetic(lg);
    json flags{{"vertex_arithmetic", report.vertex_arithmetic}, {"edge_arithmetic", report.edge_arithmetic},
               {"arithmetic", report.arithmetic}, {"semi_arithmetic", report.semi_arithmetic}};
    if (report.uniform_k)
        flags["uniform_k"] = *report.uniform_k;
    if (report.vertex_uniform_l)
        flags["vertex_uniform_l"] = *report.vertex_uniform_l;
    rb.add("classify_arithmetic", report.arithmetic ? Outcome::pass : Outcome::fail, flags);
    if (!report.arithmetic)
        return rb.take();

    auto weak = std::count_if(report.per_edge.begin(), report.per_edge.end(), [](const EdgeClass& c) { return c.weak; });
    rb.add("no_weak_edges", weak == 0 ? Outcome::pass : Outcome::fail, json{{"weak_edges", weak}});

    auto mult = check_multiplier_condition(lg);
    json mv = json::array();
    for (const auto& v : mult.violations)
        mv.push_back({{"edge", edge_json(v.edge)}, {"smaller", v.smaller_index}, {"larger", v.larger_index}});
    rb.add("multiplier_condition", mult.holds ? Outcome::pass : Outcome::fail, json{{"violations", mv}});

    auto gcd = check_gcd_invariant(lg);
    rb.add("gcd_invariant", gcd.holds ? Outcome::pass : Outcome::fail,
           json{{"gcd_vertices", gcd.gcd_vertices}, {"gcd_edges", gcd.gcd_edges},
                {"min_vertex_index", gcd.min_vertex_index}});

    check_edge_cardinalities(lg, rb);

    if (options.transforms && entry.n <= options.transform_max_n)
        check_transforms(lg, rb);
    return rb.take();
}

namespace {

LabeledGraph complete_with_differences(const std::vector<Value>& diffs, std::size_t size)
{
    auto n = diffs.size();
    auto names = numbered_vertices(n);
    std::vector<RawEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(names[i], names[j]);
    Value widest = *std::max_element(diffs.begin(), diffs.end()) * (size - 1);
    auto firsts = sidon_sequence(n);
    VertexLabeling f;
    for (std::size_t i = 0; i < n; ++i)
        f.emplace(names[i], APSet::make(firsts[i] * (2 * widest + 1), diffs[i], size).expand());
    return induce_edge_labels(validate_graph(names, edges), f);
}

} // namespace

std::vector<CheckRecord> run_probes(std::size_t max_n)
{
    std::vector<CheckRecord> out;
    const std::vector<Value> palette{1, 2, 4};
    constexpr std::size_t size = 4;
    for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 5); ++n) {
        std::size_t searched = 0, found = 0;
        json first = nullptr;
        std::vector<std::size_t> digits(n, 0);
        std::optional<Graph> kn;
        while (true) {
            std::vector<Value> diffs;
            for (auto d : digits)
                diffs.push_back(palette[d]);
            std::vector<Value> distinct = diffs;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            if (distinct.size() == 3) {
                ++searched;
                auto lg = complete_with_differences(diffs, size);
                if (!kn)
                    kn = lg.graph();
                auto r = classify_arithmetic(lg);
                if (r.iasi.is_iasi && r.arithmetic) {
                    if (found++ == 0)
                        first = json{{"differences", diffs}, {"labels", labels_json(lg)}};
                }
            }
            std::size_t i = 0;
            while (i < n && ++digits[i] == palette.size())
                digits[i++] = 0;
            if (i == n)
                break;
        }
        json w{{"searched", searched}, {"three_class_arithmetic", found}, {"label_size", size}};
        if (found)
            w["example"] = first;
        out.push_back({graph_id(*kn), "probe/complete_three_classes",
                       found ? Outcome::discrepancy : Outcome::pass, w, std::nullopt});
    }

    // Path with differences 2, 6, 3: each adjacent pair satisfies the multiplier
    // rule, yet the gcd of the vertex differences is 1 while the smallest is 2.
    auto g = graph_from_edges({{"0", "1"}, {"1", "2"}});
    VertexLabeling f{{"0", APSet::make(0, 2, 3).expand()},
                     {"1", APSet::make(100, 6, 3).expand()},
                     {"2", APSet::make(200, 3, 3).expand()}};
    auto lg = induce_edge_labels(g, f);
    auto r = classify_arithmetic(lg);
    auto gcd = check_gcd_invariant(lg);
    json w{{"arithmetic", r.arithmetic}, {"iasi", r.iasi.is_iasi}, {"gcd_vertices", gcd.gcd_vertices},
           {"gcd_edges", gcd.gcd_edges}, {"min_vertex_index", gcd.min_vertex_index}, {"labels", labels_json(lg)}};
    out.push_back({graph_id(g), "probe/gcd_chain", gcd.holds ? Outcome::pass : Outcome::discrepancy, w, std::nullopt});
    return out;
}

CatalogSummary run_catalog_checks(const CatalogOptions& options, const std::function<void(const CheckRecord&)>& sink)
{
    if (options.max_n == 7 && !options.allow_seven)
        throw InvalidArgument("max_n = 7 requires the explicit opt-in");
    if (options.policies.empty())
        throw InvalidArgument("at least one multiplier policy is required");

    CatalogSummary summary;
    auto emit = [&](const CheckRecord& r) {
        ++summary.records;
        switch (r.outcome) {
        case Outcome::pass: ++summary.passes; break;
        case Outcome::fail: ++summary.fails; break;
        case Outcome::discrepancy: ++summary.discrepancies; break;
        }
        if (r.witness.is_object()) {
            if (r.witness.value("fallback", false))
                ++summary.fallbacks;
            if (auto it = r.witness.find("collisions"); it != r.witness.end())
                summary.collisions += it->size();
        }
        sink(r);
    };

    std::vector<CatalogEntry> batch;
    auto flush = [&] {
        std::vector<std::vector<CheckRecord>> results(batch.size());
        auto work = [&](std::size_t i) {
            for (auto policy : options.policies) {
                std::vector<CheckRecord> recs;
                try {
                    recs = check_graph_under_policy(batch[i], policy, options);
                } catch (const std::exception& e) {
                    recs.push_back({batch[i].id, std::string(to_string(policy)) + "/internal", Outcome::fail,
                                    json{{"error", e.what()}}, std::nullopt});
                }
                results[i].insert(results[i].end(), std::make_move_iterator(recs.begin()),
                                  std::make_move_iterator(recs.end()));
            }
        };
        unsigned jobs = std::max(1u, options.jobs);
        if (jobs == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                work(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < batch.size(); i = next++)
                        work(i);
                });
        }
        for (const auto& recs : results)
            for (const auto& r : recs)
                emit(r);
        summary.graphs += batch.size();
        batch.clear();
    };

    for_each_catalog_graph(options.max_n, [&](const CatalogEntry& e) {
        batch.push_back(e);
        if (batch.size() == 1024)
            flush();
    });
    flush();

    if (options.probes)
        for (const auto& r : run_probes(options.max_n))
            emit(r);
    return summary;
}

} // namespace iasi
