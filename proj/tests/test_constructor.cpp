#include "iasi/catalog.hpp"
#include "iasi/constructor.hpp"
#include "iasi/verifier.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace iasi;
using support::ap;

namespace {

void require_sound(const LabeledGraph& lg)
{
    auto r = classify_arithmetic(lg);
    REQUIRE(r.iasi.is_iasi);
    REQUIRE(r.arithmetic);
    REQUIRE(check_multiplier_condition(lg).holds);
    for (const auto& label : lg.edge_labels())
        REQUIRE(oracle::is_ap(support::to_oracle(label)));
}

} // namespace

TEST_CASE("construction parameters are validated")
{
    auto g = graph_from_edges({{"a", "b"}});
    ConstructionParams p;
    p.min_label_size = 2;
    CHECK_THROWS_AS(construct_arbitrary(g, p), InvalidArgument);
    p = {};
    p.min_label_size = 5;
    p.max_label_size = 4;
    CHECK_THROWS_AS(construct_arbitrary(g, p), InvalidArgument);
    p = {};
    p.base_difference = 0;
    CHECK_THROWS_AS(construct_arbitrary(g, p), InvalidArgument);
    p = {};
    p.fixed_k = 0;
    CHECK_THROWS_AS(construct_arbitrary(g, p), InvalidArgument);
}

TEST_CASE("policy names round-trip")
{
    for (auto p : {MultiplierPolicy::fixed, MultiplierPolicy::random, MultiplierPolicy::maximal})
        CHECK(parse_multiplier_policy(to_string(p)) == p);
    for (auto p : {OffsetPolicy::sidon, OffsetPolicy::geometric, OffsetPolicy::explicit_list})
        CHECK(parse_offset_policy(to_string(p)) == p);
    CHECK_THROWS_AS(parse_multiplier_policy("greedy"), InvalidArgument);
}

TEST_CASE("C4 with k = 1 and explicit offsets")
{
    auto g = graph_from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
    ConstructionParams p;
    p.offset_policy = OffsetPolicy::explicit_list;
    p.explicit_offsets = {0, 10, 20, 30};
    auto c = construct_arbitrary(g, p);
    CHECK(c.order == std::vector<std::string>{"a", "b", "d", "c"});
    CHECK_FALSE(c.fell_back);
    CHECK(c.labeling.vertex_label("a") == IntegerSet{0, 1, 2});
    CHECK(c.labeling.vertex_label("b") == IntegerSet{10, 11, 12});
    CHECK(c.labeling.vertex_label("d") == IntegerSet{20, 21, 22});
    CHECK(c.labeling.vertex_label("c") == IntegerSet{30, 31, 32});
    for (const auto& label : c.labeling.edge_labels())
        CHECK(deterministic_index(label) == DeterministicIndex::of(1));
    require_sound(c.labeling);
}

TEST_CASE("K3 under the maximal policy")
{
    auto g = graph_from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    ConstructionParams p;
    p.multiplier_policy = MultiplierPolicy::maximal;
    auto c = construct_arbitrary(g, p);
    require_sound(c.labeling);
    // b sees only a and takes 3 * 1; c sees a and b, and 3 is within a's bound.
    CHECK(deterministic_index(c.labeling.vertex_label("a")).value() == 1);
    CHECK(deterministic_index(c.labeling.vertex_label("b")).value() == 3);
    CHECK(deterministic_index(c.labeling.vertex_label("c")).value() == 3);
}

TEST_CASE("P2 with sizes 3 and 4 and k = 3")
{
    auto g = graph_from_edges({{"u", "v"}});
    ConstructionParams p;
    p.base_difference = 2;
    p.min_label_size = 3;
    p.max_label_size = 4;
    p.fixed_k = 3;
    p.offset_policy = OffsetPolicy::explicit_list;
    p.explicit_offsets = {0, 1};
    auto c = construct_arbitrary(g, p);
    CHECK(c.labeling.vertex_label("u") == IntegerSet{0, 2, 4});
    CHECK(c.labeling.vertex_label("v") == IntegerSet{1, 7, 13, 19});
    const auto& e = c.labeling.edge_label({"u", "v"});
    CHECK(e.size() == 12);
    CHECK(e.size() == predicted_edge_cardinality(3, 4, 3));
    CHECK(deterministic_index(e) == DeterministicIndex::of(2));
    CHECK(support::to_oracle(e) == oracle::sumset({0, 2, 4}, {1, 7, 13, 19}));
}

TEST_CASE("an out-of-bound fixed multiplier falls back to the uniform difference")
{
    auto g = graph_from_edges({{"a", "b"}, {"b", "c"}});
    ConstructionParams p;
    p.fixed_k = 4;
    auto c = construct_arbitrary(g, p);
    CHECK(c.fell_back);
    REQUIRE(c.diagnostics.size() == 2);
    CHECK(c.diagnostics[0].find("exceeds bound 3") != std::string::npos);
    for (const auto& label : c.labeling.vertex_labels())
        CHECK(deterministic_index(label) == DeterministicIndex::of(1));
    require_sound(c.labeling);
}

TEST_CASE("incompatible neighbor differences trigger the fallback")
{
    // b and d each draw a random multiple of a's difference; c and e then see
    // both, and a pair such as 2 and 3 has no common choice.
    auto g = graph_from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"b", "e"}, {"e", "d"}});
    std::size_t fallbacks = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        ConstructionParams p;
        p.multiplier_policy = MultiplierPolicy::random;
        p.seed = seed;
        auto c = construct_arbitrary(g, p);
        require_sound(c.labeling);
        fallbacks += c.fell_back;
        if (c.fell_back)
            CHECK(c.diagnostics.back() == "fell back to uniform difference 1");
    }
    CHECK(fallbacks > 0);
}

TEST_CASE("construction is deterministic for a given seed")
{
    auto g = graph_from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "d"}, {"d", "e"}});
    ConstructionParams p;
    p.multiplier_policy = MultiplierPolicy::random;
    p.seed = 99;
    p.max_label_size = 6;
    auto first = construct_arbitrary(g, p);
    auto second = construct_arbitrary(g, p);
    CHECK(first.labeling == second.labeling);
    CHECK(first.diagnostics == second.diagnostics);
}

TEST_CASE("disconnected graphs are labeled per component")
{
    auto g = graph_from_edges({{"a", "b"}, {"c", "d"}, {"d", "e"}});
    auto c = construct_arbitrary(g, {});
    require_sound(c.labeling);
    CHECK(check_gcd_invariant_per_component(c.labeling).size() == 2);
}

TEST_CASE("sidon sequence")
{
    CHECK(sidon_sequence(7) == std::vector<Value>{0, 1, 3, 7, 12, 20, 30});
    auto s = sidon_sequence(12);
    std::set<Value> sums;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j)
            CHECK(sums.insert(s[i] + s[j]).second);
}

TEST_CASE("numbered vertices sort numerically")
{
    CHECK(numbered_vertices(3) == std::vector<std::string>{"0", "1", "2"});
    auto v = numbered_vertices(12);
    CHECK(v[3] == "03");
    CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("every policy and size range is sound on the small catalog")
{
    for (const auto& entry : enumerate_catalog(4)) {
        for (auto policy : {MultiplierPolicy::fixed, MultiplierPolicy::random, MultiplierPolicy::maximal}) {
            for (auto offsets : {OffsetPolicy::sidon, OffsetPolicy::geometric}) {
                ConstructionParams p;
                p.multiplier_policy = policy;
                p.offset_policy = offsets;
                p.max_label_size = 5;
                p.base_difference = 2;
                p.seed = 5;
                auto c = construct_arbitrary(entry.graph, p);
                require_sound(c.labeling);
                CHECK(check_gcd_invariant(c.labeling).min_vertex_index == 2);
                for (std::size_t i = 0; i < entry.graph.edge_count(); ++i) {
                    const auto& e = entry.graph.edges()[i];
                    auto a = c.labeling.vertex_label(e.u), b = c.labeling.vertex_label(e.v);
                    auto da = deterministic_index(a).value(), db = deterministic_index(b).value();
                    if (db < da) {
                        std::swap(a, b);
                        std::swap(da, db);
                    }
                    CHECK(c.labeling.edge_labels()[i].size()
                          == predicted_edge_cardinality(a.size(), b.size(), db / da));
                }
            }
        }
    }
}

TEST_CASE("construct_complete examples")
{
    auto k4 = construct_complete(4, 2, 2, 3, 2, {3});
    require_sound(k4);
    CHECK(k4.graph().edge_count() == 6);
    CHECK(deterministic_index(k4.vertex_label("0")).value() == 3);
    CHECK(deterministic_index(k4.vertex_label("3")).value() == 6);

    auto k3 = construct_complete(3, 3, 0, 1, 1, {3});
    require_sound(k3);
    for (const auto& label : k3.vertex_labels())
        CHECK(deterministic_index(label) == DeterministicIndex::of(1));

    CHECK_THROWS_AS(construct_complete(4, 2, 2, 3, 4, {3}), PreconditionError);
    CHECK_THROWS_AS(construct_complete(4, 2, 1, 3, 1, {3}), PreconditionError);
    CHECK_THROWS_AS(construct_complete(4, 0, 4, 3, 1, {3}), PreconditionError);
    CHECK_THROWS_AS(construct_complete(4, 2, 2, 3, 1, {3, 3}), PreconditionError);
    CHECK_THROWS_AS(construct_complete(3, 2, 1, 1, 1, {2}), PreconditionError);
}

TEST_CASE("construct_complete bound comes from the smallest part-one label")
{
    CHECK_NOTHROW(construct_complete(3, 2, 1, 1, 4, {4, 5, 3}));
    CHECK_THROWS_AS(construct_complete(3, 2, 1, 1, 4, {3, 5, 3}), PreconditionError);
}

TEST_CASE("restrict_labeling")
{
    auto k4 = construct_complete(4, 2, 2, 1, 3, {3});
    auto path = graph_from_edges({{"0", "1"}, {"1", "2"}, {"2", "3"}});
    auto r = restrict_labeling(k4, path);
    require_sound(r);
    CHECK(r.vertex_label("2") == k4.vertex_label("2"));

    auto edge = restrict_labeling(k4, graph_from_edges({{"1", "3"}}));
    require_sound(edge);
    CHECK(edge.edge_label({"1", "3"}) == k4.edge_label({"1", "3"}));

    try {
        (void)restrict_labeling(r, graph_from_edges({{"0", "2"}}));
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(restrict_labeling(k4, graph_from_edges({{"0", "9"}})), InvalidArgument);
}

TEST_CASE("restriction never breaks arithmeticity")
{
    for (std::size_t n = 3; n <= 5; ++n) {
        auto kn = construct_complete(n, 1, n - 1, 2, 3, {3});
        for (const auto& entry : enumerate_catalog(n)) {
            if (entry.n != n)
                continue;
            require_sound(restrict_labeling(kn, entry.graph));
        }
    }
}
