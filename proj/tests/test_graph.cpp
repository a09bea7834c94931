#include "iasi/graph.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>

using namespace iasi;
using support::ap;
using support::labeled;

namespace {

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind, const std::string& element)
{
    return std::find(vs.begin(), vs.end(), Violation{kind, element}) != vs.end();
}

} // namespace

TEST_CASE("validate_graph canonicalizes")
{
    auto g = validate_graph({"b", "a", "c"}, {{"c", "b"}, {"b", "a"}});
    CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edges() == std::vector<Edge>{{"a", "b"}, {"b", "c"}});
    CHECK(g.has_edge("c", "b"));
    CHECK(g.neighbors("b") == std::vector<std::string>{"a", "c"});
    CHECK(g.degree("a") == 1);
    CHECK(g.is_connected());
    CHECK(make_edge("z", "y") == Edge{"y", "z"});
}

TEST_CASE("validate_graph reports every violation with its element")
{
    SUBCASE("single edge is fine")
    {
        CHECK(check_graph({"a", "b"}, {{"a", "b"}}).empty());
    }
    SUBCASE("self-loop")
    {
        auto vs = check_graph({"a"}, {{"a", "a"}});
        CHECK(has_violation(vs, ViolationKind::self_loop, "(a,a)"));
        CHECK_THROWS_AS(validate_graph({"a"}, {{"a", "a"}}), GraphError);
    }
    SUBCASE("isolated vertex")
    {
        auto vs = check_graph({"a", "b", "c"}, {{"a", "b"}});
        REQUIRE(vs.size() == 1);
        CHECK(vs[0] == Violation{ViolationKind::isolated_vertex, "c"});
    }
    SUBCASE("duplicate edge in either orientation")
    {
        auto vs = check_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        CHECK(has_violation(vs, ViolationKind::duplicate_edge, "(a,b)"));
    }
    SUBCASE("dangling endpoint")
    {
        auto vs = check_graph({"a", "b"}, {{"a", "b"}, {"b", "q"}});
        CHECK(has_violation(vs, ViolationKind::dangling_endpoint, "(b,q) -> q"));
    }
    SUBCASE("duplicate vertex and empty graph")
    {
        CHECK(has_violation(check_graph({"a", "a", "b"}, {{"a", "b"}}), ViolationKind::duplicate_vertex, "a"));
        CHECK(has_violation(check_graph({}, {}), ViolationKind::empty_graph, ""));
    }
    SUBCASE("the exception carries the full list")
    {
        try {
            (void)validate_graph({"a", "b", "c", "d"}, {{"a", "a"}, {"b", "c"}});
            FAIL("expected GraphError");
        } catch (const GraphError& e) {
            CHECK(e.violations().size() >= 3);
            CHECK(std::string(e.what()).find("isolated") != std::string::npos);
        }
    }
}

TEST_CASE("components and connectivity")
{
    auto g = graph_from_edges({{"a", "b"}, {"c", "d"}, {"d", "e"}});
    CHECK_FALSE(g.is_connected());
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::string>{"a", "b"});
    CHECK(comps[1] == std::vector<std::string>{"c", "d", "e"});
    CHECK_THROWS_AS((void)g.neighbors("zz"), InvalidArgument);
}

TEST_CASE("induce_edge_labels examples")
{
    auto p2 = labeled({{"u", "v"}}, {{"u", {1, 2}}, {"v", {3, 4}}});
    CHECK(p2.edge_label(make_edge("u", "v")) == IntegerSet{4, 5, 6});

    auto zero = labeled({{"u", "v"}}, {{"u", {0}}, {"v", {5, 9}}});
    CHECK(zero.edge_label(make_edge("v", "u")) == IntegerSet{5, 9});

    auto tri = labeled({{"a", "b"}, {"b", "c"}, {"a", "c"}}, {{"a", {0, 1}}, {"b", {2, 3}}, {"c", {4, 6}}});
    CHECK(tri.edge_label({"a", "b"}) == IntegerSet{2, 3, 4});
    CHECK(tri.edge_label({"b", "c"}) == IntegerSet{6, 7, 8, 9});
    CHECK(tri.edge_label({"a", "c"}) == IntegerSet{4, 5, 6, 7});
    CHECK(tri.label(Element{std::string("c")}) == IntegerSet{4, 6});
    CHECK(tri.labeling().size() == 3);
}

TEST_CASE("induce_edge_labels rejects bad labelings, naming the vertex")
{
    auto g = graph_from_edges({{"u", "v"}});
    auto message = [&](const VertexLabeling& f) {
        try {
            (void)induce_edge_labels(g, f);
        } catch (const InvalidLabeling& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message({{"u", {1}}}).find("'v'") != std::string::npos);
    CHECK(message({{"u", {1}}, {"v", {}}}).find("'v'") != std::string::npos);
    CHECK(message({{"u", {1}}, {"v", {2}}, {"w", {3}}}).find("'w'") != std::string::npos);
}

TEST_CASE("summarize_indices examples")
{
    auto lg = labeled({{"u", "v"}}, {{"u", {0, 2, 4}}, {"v", {1, 3, 5}}});
    auto s = summarize_indices(lg);
    CHECK(s.vertex_indexing_numbers.at("u") == 3);
    CHECK(s.vertex_indexing_numbers.at("v") == 3);
    CHECK(s.edge_indexing_numbers.at({"u", "v"}) == 5);
    CHECK(s.vertex_deterministic_indices.at("u") == DeterministicIndex::of(2));
    CHECK(s.edge_deterministic_indices.at({"u", "v"}) == DeterministicIndex::of(2));

    auto single = summarize_indices(labeled({{"u", "v"}}, {{"u", {7}}, {"v", {1, 2}}}));
    CHECK(single.vertex_indexing_numbers.at("u") == 1);
    CHECK_FALSE(single.vertex_deterministic_indices.at("u").defined());

    auto gappy = labeled({{"u", "v"}}, {{"u", {0, 1, 2}}, {"v", {0, 4, 8}}});
    CHECK(gappy.edge_label({"u", "v"}) == IntegerSet{0, 1, 2, 4, 5, 6, 8, 9, 10});
    CHECK_FALSE(summarize_indices(gappy).edge_deterministic_indices.at({"u", "v"}).defined());
}

TEST_CASE("random labelings respect the sumset cardinality bounds and rebuild identically")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        VertexLabeling f;
        for (const char* v : {"a", "b", "c", "d"})
            f.emplace(v, support::to_iasi(oracle::random_set(rng, 5, 30)));
        auto g = graph_from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "c"}});
        auto lg = induce_edge_labels(g, f);
        CHECK(induce_edge_labels(g, lg.labeling()) == lg);
        auto s = summarize_indices(lg);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edges()[i];
            auto m = f.at(e.u).size(), n = f.at(e.v).size();
            auto card = lg.edge_labels()[i].size();
            CHECK(card >= std::max(m, n));
            CHECK(card <= m * n);
            auto as_set = support::to_oracle(lg.edge_labels()[i]);
            bool numeric = as_set.size() >= 2 && oracle::is_ap(as_set);
            CHECK(s.edge_deterministic_indices.at(e).defined() == numeric);
        }
    }
}

TEST_CASE("deterministic_index")
{
    CHECK(deterministic_index(ap(3, 4, 5)) == DeterministicIndex::of(4));
    CHECK(deterministic_index({1, 9}) == DeterministicIndex::of(8));
    CHECK_FALSE(deterministic_index({5}).defined());
    CHECK_FALSE(deterministic_index({0, 1, 3}).defined());
}
