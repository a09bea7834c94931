#include "iasi/constructor.hpp"

#include "iasi/verifier.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace iasi {

std::string_view to_string(MultiplierPolicy p)
{
    switch (p) {
    case MultiplierPolicy::fixed: return "fixed";
    case MultiplierPolicy::random: return "random";
    case MultiplierPolicy::maximal: return "maximal";
    }
    return "unknown";
}

MultiplierPolicy parse_multiplier_policy(std::string_view name)
{
    for (auto p : {MultiplierPolicy::fixed, MultiplierPolicy::random, MultiplierPolicy::maximal})
        if (name == to_string(p))
            return p;
    throw InvalidArgument("unknown multiplier policy '" + std::string(name) + "'");
}

std::string_view to_string(OffsetPolicy p)
{
    switch (p) {
    case OffsetPolicy::sidon: return "sidon";
    case OffsetPolicy::geometric: return "geometric";
    case OffsetPolicy::explicit_list: return "explicit";
    }
    return "unknown";
}

OffsetPolicy parse_offset_policy(std::string_view name)
{
    for (auto p : {OffsetPolicy::sidon, OffsetPolicy::geometric, OffsetPolicy::explicit_list})
        if (name == to_string(p))
            return p;
    throw InvalidArgument("unknown offset policy '" + std::string(name) + "'");
}

void validate(const ConstructionParams& p)
{
    if (p.base_difference == 0)
        throw InvalidArgument("base difference must be positive");
    if (p.min_label_size < 3)
        throw InvalidArgument("arithmetic labels need at least three elements");
    if (p.min_label_size > p.max_label_size)
        throw InvalidArgument("label size range is empty");
    if (p.fixed_k == 0)
        throw InvalidArgument("fixed multiplier must be positive");
}

std::vector<std::string> numbered_vertices(std::size_t n)
{
    std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto s = std::to_string(i);
        out.push_back(std::string(width - s.size(), '0') + s);
    }
    return out;
}

std::vector<Value> sidon_sequence(std::size_t count)
{
    std::vector<Value> seq;
    std::vector<bool> sums;
    for (Value candidate = 0; seq.size() < count; ++candidate) {
        bool ok = true;
        for (Value s : seq) {
            Value sum = s + candidate;
            if (sum < sums.size() && sums[sum]) {
                ok = false;
                break;
            }
        }
        if (!ok || (2 * candidate < sums.size() && sums[2 * candidate]))
            continue;
        if (sums.size() <= 2 * candidate)
            sums.resize(2 * candidate + 1, false);
        for (Value s : seq)
            sums[s + candidate] = true;
        sums[2 * candidate] = true;
        seq.push_back(candidate);
    }
    return seq;
}

namespace {

std::vector<std::size_t> traversal_order(const Graph& g)
{
    std::vector<std::size_t> order;
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (seen[root])
            continue;
        std::deque<std::size_t> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (auto y : g.adjacent_vertices(x))
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
        }
    }
    return order;
}

std::vector<Value> first_terms(const ConstructionParams& p, std::size_t n, Value stride)
{
    std::vector<Value> out;
    out.reserve(n);
    switch (p.offset_policy) {
    case OffsetPolicy::sidon:
        for (Value s : sidon_sequence(n))
            out.push_back(checked_mul(stride, s));
        break;
    case OffsetPolicy::geometric: {
        Value power = 1;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(checked_mul(stride, power));
            if (i + 1 < n)
                power = checked_mul(power, 4);
        }
        break;
    }
    case OffsetPolicy::explicit_list:
        if (p.explicit_offsets.size() < n)
            throw InvalidArgument("explicit offsets: need " + std::to_string(n) + ", got "
                                  + std::to_string(p.explicit_offsets.size()));
        out.assign(p.explicit_offsets.begin(), p.explicit_offsets.begin() + static_cast<std::ptrdiff_t>(n));
        break;
    }
    return out;
}

Value auto_stride(const std::vector<std::size_t>& sizes, const std::vector<Value>& diffs)
{
    Value widest = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        widest = std::max(widest, checked_mul(diffs[i], sizes[i] - 1));
    return checked_add(checked_mul(widest, 2), 1);
}

/// Labels vertices given per-vertex sizes and differences (indexed by vertex) and
/// first terms handed out in `order`.
VertexLabeling build_labels(const Graph& g, const std::vector<std::size_t>& order,
                            const std::vector<std::size_t>& sizes, const std::vector<Value>& diffs,
                            const ConstructionParams& p)
{
    Value stride = p.offset_stride != 0 ? p.offset_stride : auto_stride(sizes, diffs);
    auto firsts = first_terms(p, order.size(), stride);
    VertexLabeling f;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        auto v = order[pos];
        f.emplace(g.vertices()[v], APSet::make(firsts[pos], diffs[v], sizes[v]).expand());
    }
    return f;
}

LabeledGraph checked_arithmetic(Graph g, const VertexLabeling& f)
{
    auto lg = induce_edge_labels(std::move(g), f);
    auto report = classify_arithmetic(lg);
    if (!report.iasi.is_iasi)
        throw CollisionError(*report.iasi.collision);
    if (!report.arithmetic)
        throw Error("constructed labeling is not arithmetic");
    return lg;
}

} // namespace

Construction construct_arbitrary(const Graph& g, const ConstructionParams& p)
{
    validate(p);
    auto order = traversal_order(g);
    const auto n = g.vertex_count();

    std::vector<std::size_t> sizes(n);
    const auto span = p.max_label_size - p.min_label_size + 1;
    for (std::size_t pos = 0; pos < n; ++pos)
        sizes[order[pos]] = p.min_label_size + pos % span;

    std::mt19937_64 rng(p.seed);
    std::vector<Value> diffs(n, 0);
    std::vector<bool> visited(n, false);
    Construction out;

    for (auto v : order) {
        std::vector<std::size_t> prior;
        for (auto u : g.adjacent_vertices(v))
            if (visited[u])
                prior.push_back(u);
        visited[v] = true;

        if (prior.empty()) {
            diffs[v] = p.base_difference;
            continue;
        }
        if (prior.size() == 1) {
            auto u = prior.front();
            std::size_t bound = sizes[u];
            std::size_t k = 1;
            switch (p.multiplier_policy) {
            case MultiplierPolicy::fixed: k = p.fixed_k; break;
            case MultiplierPolicy::random: k = std::uniform_int_distribution<std::size_t>(1, bound)(rng); break;
            case MultiplierPolicy::maximal: k = bound; break;
            }
            if (k > bound) {
                out.fell_back = true;
                out.diagnostics.push_back("vertex '" + g.vertices()[v] + "': multiplier " + std::to_string(k)
                                          + " exceeds bound " + std::to_string(bound) + " from '"
                                          + g.vertices()[u] + "'");
                break;
            }
            diffs[v] = checked_mul(diffs[u], k);
            continue;
        }

        Value top = 0;
        for (auto u : prior)
            top = std::max(top, diffs[u]);
        std::string blocker;
        for (auto u : prior) {
            if (top % diffs[u] != 0 || top / diffs[u] > sizes[u]) {
                blocker = g.vertices()[u];
                break;
            }
        }
        if (!blocker.empty()) {
            out.fell_back = true;
            out.diagnostics.push_back("vertex '" + g.vertices()[v] + "': difference " + std::to_string(top)
                                      + " incompatible with neighbor '" + blocker + "' (difference "
                                      + std::to_string(diffs[*g.vertex_index(blocker)]) + ")");
            break;
        }
        diffs[v] = top;
    }

    if (out.fell_back) {
        out.diagnostics.push_back("fell back to uniform difference " + std::to_string(p.base_difference));
        std::fill(diffs.begin(), diffs.end(), p.base_difference);
    }

    for (auto v : order)
        out.order.push_back(g.vertices()[v]);
    auto f = build_labels(g, order, sizes, diffs, p);
    out.labeling = checked_arithmetic(g, f);
    return out;
}

LabeledGraph construct_complete(std::size_t n, std::size_t r, std::size_t l, Value d, std::size_t k,
                                const std::vector<std::size_t>& sizes)
{
    if (n < 2)
        throw PreconditionError("complete graph needs at least two vertices");
    if (r + l != n)
        throw PreconditionError("part sizes " + std::to_string(r) + "+" + std::to_string(l) + " do not sum to "
                                + std::to_string(n));
    if (r == 0)
        throw PreconditionError("first part must be nonempty");
    if (d == 0)
        throw PreconditionError("difference must be positive");
    if (sizes.size() != 1 && sizes.size() != n)
        throw PreconditionError("sizes: expected 1 or " + std::to_string(n) + " values");

    std::vector<std::size_t> per_vertex(n);
    for (std::size_t i = 0; i < n; ++i) {
        per_vertex[i] = sizes.size() == 1 ? sizes[0] : sizes[i];
        if (per_vertex[i] < 3)
            throw PreconditionError("arithmetic labels need at least three elements");
    }
    auto smallest = *std::min_element(per_vertex.begin(), per_vertex.begin() + static_cast<std::ptrdiff_t>(r));
    if (k < 1 || k > smallest)
        throw PreconditionError("multiplier k=" + std::to_string(k) + " outside [1, " + std::to_string(smallest)
                                + "]");

    auto names = numbered_vertices(n);
    std::vector<RawEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(names[i], names[j]);
    auto g = validate_graph(names, edges);

    std::vector<Value> diffs(n, d);
    for (std::size_t i = r; i < n; ++i)
        diffs[i] = checked_mul(d, k);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    auto f = build_labels(g, order, per_vertex, diffs, ConstructionParams{});
    return checked_arithmetic(std::move(g), f);
}

LabeledGraph restrict_labeling(const LabeledGraph& lg, const Graph& h)
{
    const auto& g = lg.graph();
    VertexLabeling f;
    for (const auto& v : h.vertices()) {
        if (!g.has_vertex(v))
            throw InvalidArgument("vertex '" + v + "' is not in the labeled graph");
        f.emplace(v, lg.vertex_label(v));
    }
    for (const auto& e : h.edges())
        if (!g.edge_index(e))
            throw InvalidArgument("edge " + to_string(e) + " is not in the labeled graph");
    return induce_edge_labels(h, f);
}

} // namespace iasi
