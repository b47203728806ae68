#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wog/graph.hpp"

using namespace wog;
using fixtures::random_graph;

TEST_CASE("out/in neighborhoods on a single edge") {
    auto g = fixtures::single_edge(2);
    CHECK(g.out_neighbors(0) == VertexSet::of({1}));
    CHECK(g.out_neighbors(1).empty());
    CHECK(g.in_neighbors(1) == VertexSet::of({0}));
    CHECK(g.is_source(0));
    CHECK(g.is_sink(1));
    CHECK(g.v_plus() == VertexSet::of({1}));
}

TEST_CASE("neighborhoods on the five-vertex example path") {
    auto g = fixtures::path_into_middle();
    const int x4 = g.require_index("x4");
    CHECK(g.out_neighbors(x4) == VertexSet::of({g.require_index("x3")}));
    CHECK(g.in_neighbors(x4) == VertexSet::of({g.require_index("x5")}));
    CHECK(g.degree(x4) == 2);
    CHECK_THROWS_AS((void)g.require_index("nope"), PreconditionError);
}

TEST_CASE("in/out neighborhoods partition the neighborhood") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 8, 3);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK((g.out_neighbors(v) & g.in_neighbors(v)).empty());
            CHECK((g.out_neighbors(v) | g.in_neighbors(v)) == g.neighbors(v));
            CHECK(g.degree(v) == g.out_neighbors(v).size() + g.in_neighbors(v).size());
        }
    }
}

TEST_CASE("induced subgraph drops the prefix weight to 1") {
    auto d = fixtures::path_into_middle();
    CHECK(d.weight(d.require_index("x4")) == 3);
    auto dp = fixtures::path_into_middle_prefix();
    CHECK(dp.vertex_count() == 4);
    CHECK(dp.weight(dp.require_index("x4")) == 1);  // became a source
    CHECK(dp.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 2}});
}

TEST_CASE("induced subgraph on the full vertex set is the identity") {
    auto g = fixtures::mixed_path_six();
    auto h = g.induced_subgraph(VertexSet::full(g.vertex_count()));
    CHECK(serialize(g) == serialize(h));
}

TEST_CASE("inducing on a lone head makes it a weight-1 source") {
    auto g = fixtures::single_edge(2);
    auto h = g.induced_subgraph(VertexSet::of({1}));
    CHECK(h.vertex_count() == 1);
    CHECK(h.weight(0) == 1);
    CHECK(h.edge_count() == 0);
}

TEST_CASE("induced edge set is the restriction, and inducing is idempotent") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 8, 3);
        std::uniform_int_distribution<std::uint64_t> pick(
            0, VertexSet::full(g.vertex_count()).bits());
        VertexSet keep(pick(rng));
        auto h = g.induced_subgraph(keep);
        std::set<std::pair<std::string, std::string>> expected;
        for (auto [a, b] : g.edges()) {
            if (keep.contains(a) && keep.contains(b)) expected.insert({g.name(a), g.name(b)});
        }
        std::set<std::pair<std::string, std::string>> got;
        for (auto [a, b] : h.edges()) got.insert({h.name(a), h.name(b)});
        CHECK(got == expected);
        auto hh = h.induced_subgraph(VertexSet::full(h.vertex_count()));
        CHECK(serialize(h) == serialize(hh));
    }
}

TEST_CASE("remove_vertices") {
    auto g = fixtures::fan_tree();
    SUBCASE("removing nothing is the identity") {
        CHECK(serialize(g.remove_vertices({})) == serialize(g));
    }
    SUBCASE("removing everything leaves the empty graph") {
        auto h = g.remove_vertices(VertexSet::full(g.vertex_count()));
        CHECK(h.vertex_count() == 0);
        CHECK(h.edge_count() == 0);
    }
    SUBCASE("removing the root path leaves the two-level forest") {
        auto h = g.remove_vertices(g.vertex_set({"x0", "x1"}));
        CHECK(h.vertex_count() == 14);
        CHECK(h.edge_count() == 12);
        CHECK(h.is_source(h.require_index("x2")));
        CHECK(h.weight(h.require_index("x2")) == 1);
        CHECK_FALSE(h.connected());
    }
}

TEST_CASE("make_natural_path") {
    auto g = make_natural_path({1, 2, 1, 2});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.weight(3) == 2);
    CHECK(make_natural_path({1, 1}).edge_count() == 1);
    CHECK_THROWS_AS(make_natural_path({2, 1}), PreconditionError);
}

TEST_CASE("make_two_path_sink shapes") {
    SUBCASE("one junction") {
        auto g = make_two_path_sink({1, 1, 1}, {1, 1, 1}, 1);
        std::vector<std::pair<std::string, std::string>> edges;
        for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
        CHECK(edges == std::vector<std::pair<std::string, std::string>>{{"y1", "y2"},
                                                                        {"y2", "y3"},
                                                                        {"y3", "z1"},
                                                                        {"x3", "z1"},
                                                                        {"x2", "x3"},
                                                                        {"x1", "x2"}});
    }
    SUBCASE("two junctions") {
        auto g = make_two_path_sink({1}, {1, 2}, 2);
        CHECK(g.has_edge(g.require_index("z1"), g.require_index("z2")));
        CHECK(g.has_edge(g.require_index("x2"), g.require_index("z2")));
        CHECK(g.has_edge(g.require_index("y1"), g.require_index("z1")));
        CHECK(g.weight(g.require_index("z1")) == 1);
        CHECK(g.weight(g.require_index("z2")) == 1);
    }
    SUBCASE("smallest instance") {
        auto g = make_two_path_sink({1}, {1}, 1);
        CHECK(g.vertex_count() == 3);
        CHECK(g.in_neighbors(g.require_index("z1")).size() == 2);
    }
    SUBCASE("free sink weight") {
        auto g = make_two_path_sink({1, 2}, {1, 2}, 0, 5);
        CHECK(g.weight(g.require_index("z1")) == 5);
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(make_two_path_sink({1}, {1}, 3), PreconditionError);
        CHECK_THROWS_AS(make_two_path_sink({2}, {1}, 1), PreconditionError);
        CHECK_THROWS_AS(make_two_path_sink({1}, {1}, 1, 4), PreconditionError);
    }
}

TEST_CASE("make_rooted_tree") {
    SUBCASE("star") {
        auto g = make_rooted_tree({{"a", "r"}, {"b", "r"}}, "r", {{"a", 2}, {"b", 3}});
        CHECK(g.vertex_count() == 3);
        CHECK(g.has_edge(g.require_index("r"), g.require_index("a")));
        CHECK(g.has_edge(g.require_index("r"), g.require_index("b")));
        CHECK(g.weight(g.require_index("r")) == 1);
    }
    SUBCASE("chain equals the natural path") {
        auto t = make_rooted_tree({{"x2", "x1"}, {"x3", "x2"}}, "x1",
                                  {{"x2", 2}, {"x3", 2}});
        auto p = make_natural_path({1, 2, 2});
        CHECK(serialize(t) == serialize(p));
    }
    SUBCASE("cycle is rejected") {
        CHECK_THROWS_AS(make_rooted_tree({{"a", "b"}, {"b", "a"}}, "r", {}), PreconditionError);
    }
    SUBCASE("second root is rejected") {
        CHECK_THROWS_AS(make_rooted_tree({{"a", "r"}, {"b", "q"}}, "r", {}), PreconditionError);
    }
    SUBCASE("weights for unknown vertices are rejected") {
        CHECK_THROWS_AS(make_rooted_tree({{"a", "r"}}, "r", {{"q", 1}}), PreconditionError);
    }
}

TEST_CASE("parse and serialize") {
    const std::string doc = R"({
      "vertices": [{"name":"x1","weight":1},{"name":"x2","weight":3},
                   {"name":"x3","weight":1},{"name":"x4","weight":3},
                   {"name":"x5","weight":1}],
      "edges": [["x1","x2"],["x2","x3"],["x4","x3"],["x5","x4"]]
    })";
    auto g = parse(doc);
    CHECK(serialize(g) == serialize(fixtures::path_into_middle()));

    SUBCASE("empty vertex list") {
        auto e = parse(R"({"vertices":[],"edges":[]})");
        CHECK(e.vertex_count() == 0);
    }
    SUBCASE("bad weight") {
        CHECK_THROWS_AS(parse(R"({"vertices":[{"name":"a","weight":0}],"edges":[]})"),
                        ParseError);
    }
    SUBCASE("unknown vertex in edge") {
        CHECK_THROWS_AS(parse(R"({"vertices":[{"name":"a","weight":1}],"edges":[["a","b"]]})"),
                        ParseError);
    }
    SUBCASE("source with explicit nontrivial weight") {
        const std::string bad =
            R"({"vertices":[{"name":"a","weight":2},{"name":"b","weight":1}],"edges":[["a","b"]]})";
        CHECK_THROWS_AS(parse(bad), ParseError);
        auto fixed = parse(bad, /*normalize=*/true);
        CHECK(fixed.weight(0) == 1);
    }
    SUBCASE("duplicate and antiparallel edges") {
        CHECK_THROWS_AS(
            parse(R"({"vertices":[{"name":"a","weight":1},{"name":"b","weight":1}],
                      "edges":[["a","b"],["a","b"]]})"),
            ParseError);
        CHECK_THROWS_AS(
            parse(R"({"vertices":[{"name":"a","weight":1},{"name":"b","weight":1}],
                      "edges":[["a","b"],["b","a"]]})"),
            ParseError);
    }
}

TEST_CASE("serialized form is a fixed point of parse-serialize") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 9, 3);
        const std::string text = serialize(g);
        CHECK(serialize(parse(text)) == text);
    }
}
