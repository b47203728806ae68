#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wog/covers.hpp"

using namespace wog;
using fixtures::random_graph;

namespace {

// independent oracle: scan all subsets, check every edge by hand
std::vector<VertexSet> naive_covers(const WeightedOrientedGraph& g) {
    std::vector<VertexSet> out;
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet c(mask);
        bool covers = true;
        for (auto [a, b] : g.edges()) {
            if (!c.contains(a) && !c.contains(b)) covers = false;
        }
        if (covers) out.push_back(c);
    }
    return out;
}

// independent oracle for strongness, straight from the defining sets
bool naive_strong(const WeightedOrientedGraph& g, VertexSet c) {
    std::vector<int> l1, l2, l3;
    c.for_each([&](int x) {
        bool out_escapes = false, in_escapes = false;
        g.out_neighbors(x).for_each([&](int y) { out_escapes |= !c.contains(y); });
        g.in_neighbors(x).for_each([&](int y) { in_escapes |= !c.contains(y); });
        if (out_escapes)
            l1.push_back(x);
        else if (in_escapes)
            l2.push_back(x);
        else
            l3.push_back(x);
    });
    for (int x : l3) {
        bool ok = false;
        g.in_neighbors(x).for_each([&](int y) {
            if (g.weight(y) >= 2 && c.contains(y) &&
                std::find(l1.begin(), l1.end(), y) == l1.end()) {
                ok = true;
            }
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<std::string>> cover_names(const WeightedOrientedGraph& g,
                                                  const std::vector<CoverPartition>& ps) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : ps) out.push_back(g.vertex_names(p.cover));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace

TEST_CASE("partition on a single edge") {
    auto g = fixtures::single_edge(1);
    auto p = partition(g, VertexSet::of({1}));
    CHECK(p.l1.empty());
    CHECK(p.l2 == VertexSet::of({1}));
    CHECK(p.l3.empty());
    auto q = partition(g, VertexSet::of({0, 1}));
    CHECK(q.l3 == VertexSet::of({0, 1}));
    CHECK_THROWS_AS(partition(g, VertexSet{}), PreconditionError);
}

TEST_CASE("partition of the fan tree without x1") {
    auto g = fixtures::fan_tree();
    VertexSet c = VertexSet::full(16) - g.vertex_set({"x1"});
    auto p = partition(g, c);
    CHECK(p.l1 == g.vertex_set({"x0"}));
    CHECK(p.l2 == g.vertex_set({"x2", "x3"}));
    CHECK(p.l3 == c - g.vertex_set({"x0", "x2", "x3"}));
    CHECK(p.strong);
}

TEST_CASE("partition classes agree with the all-neighbors-inside description of L3") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_graph(rng, 8, 3);
        for (VertexSet c : enumerate_vertex_covers(g)) {
            auto p = partition(g, c);
            CHECK((p.l1 | p.l2 | p.l3) == c);
            CHECK((p.l1 & p.l2).empty());
            CHECK((p.l2 & p.l3).empty());
            CHECK((p.l1 & p.l3).empty());
            VertexSet inside;
            c.for_each([&](int x) {
                if (g.neighbors(x).subset_of(c)) inside.add(x);
            });
            CHECK(p.l3 == inside);
        }
    }
}

TEST_CASE("satisfies_svc") {
    SUBCASE("root of the fan tree fails on the full cover") {
        auto g = fixtures::fan_tree();
        CHECK_FALSE(satisfies_svc(g, g.require_index("x0"), VertexSet::full(16)));
    }
    SUBCASE("head of a heavy edge fails when the tail is trivial") {
        auto g = fixtures::single_edge(2);
        CHECK_FALSE(satisfies_svc(g, 1, VertexSet::of({0, 1})));
    }
    SUBCASE("nontrivial in-neighbor inside the cover satisfies it") {
        auto g = make_natural_path({1, 2, 1});
        CHECK(satisfies_svc(g, 2, VertexSet::of({0, 1, 2})));
    }
    SUBCASE("asking outside L3 is an error") {
        auto g = fixtures::single_edge(1);
        CHECK_THROWS_AS(satisfies_svc(g, 1, VertexSet::of({1})), PreconditionError);
    }
}

TEST_CASE("is_strong") {
    auto heavy = make_natural_path({1, 7, 1, 1});
    CHECK(is_strong(heavy, heavy.vertex_set({"x2", "x4"})).strong);
    CHECK_FALSE(is_strong(fixtures::fan_tree(), VertexSet::full(16)).strong);
    auto plain = fixtures::single_edge(1);
    CHECK_FALSE(is_strong(plain, VertexSet::of({0, 1})).strong);
}

TEST_CASE("enumerate_vertex_covers") {
    SUBCASE("single edge") {
        auto g = fixtures::single_edge(1);
        auto cs = enumerate_vertex_covers(g);
        CHECK(cs == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1}),
                                           VertexSet::of({0, 1})});
    }
    SUBCASE("triangle has four covers") {
        auto g = WeightedOrientedGraph::create({"a", "b", "c"}, {1, 1, 1},
                                               {{0, 1}, {1, 2}, {0, 2}});
        CHECK(enumerate_vertex_covers(g).size() == 4);
    }
    SUBCASE("path on three vertices has five covers") {
        auto g = make_natural_path({1, 1, 1});
        auto cs = enumerate_vertex_covers(g);
        CHECK(cs.size() == 5);
        CHECK(cs == naive_covers(g));
    }
    SUBCASE("matches the subset-scan oracle on random graphs") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_graph(rng, 9, 2);
            CHECK(enumerate_vertex_covers(g) == naive_covers(g));
        }
    }
    SUBCASE("guard refuses oversized graphs") {
        Guard tight;
        tight.max_vertices = 3;
        auto g = make_natural_path({1, 1, 1, 1});
        CHECK_THROWS_AS(enumerate_vertex_covers(g, tight), GuardError);
        tight.force = true;
        CHECK(enumerate_vertex_covers(g, tight).size() == 8);
    }
}

TEST_CASE("strong cover enumeration matches the worked examples") {
    SUBCASE("heavy six-path") {
        auto g = make_natural_path({1, 7, 1, 1, 1, 1});
        auto expected = std::vector<std::vector<std::string>>{
            {"x1", "x3", "x5"},       {"x2", "x3", "x5"},       {"x2", "x4", "x5"},
            {"x2", "x4", "x6"},       {"x1", "x3", "x4", "x6"}, {"x2", "x3", "x4", "x6"}};
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        CHECK(cover_names(g, enumerate_strong_covers(g)) == expected);
    }
    SUBCASE("heavy three-path") {
        auto g = make_natural_path({1, 7, 1});
        CHECK(cover_names(g, enumerate_strong_covers(g)) ==
              std::vector<std::vector<std::string>>{{"x2"}, {"x1", "x3"}, {"x2", "x3"}});
    }
    SUBCASE("five-path with interior sink") {
        auto g = fixtures::path_into_middle();
        CHECK(cover_names(g, enumerate_strong_covers(g)) ==
              std::vector<std::vector<std::string>>{{"x2", "x4"},
                                                    {"x1", "x3", "x4"},
                                                    {"x1", "x3", "x5"},
                                                    {"x2", "x3", "x4"},
                                                    {"x2", "x3", "x5"}});
    }
    SUBCASE("agrees with the definitional oracle on random graphs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_graph(rng, 8, 3);
            auto strong = enumerate_strong_covers(g);
            std::size_t naive_count = 0;
            for (VertexSet c : naive_covers(g)) {
                if (naive_strong(g, c)) ++naive_count;
            }
            CHECK(strong.size() == naive_count);
            for (const auto& p : strong) CHECK(naive_strong(g, p.cover));
        }
    }
}

TEST_CASE("maximal strong covers") {
    SUBCASE("heavy six-path") {
        auto g = make_natural_path({1, 7, 1, 1, 1, 1});
        auto ms = cover_names(g, maximal_strong_covers(g));
        CHECK(std::find(ms.begin(), ms.end(),
                        std::vector<std::string>{"x2", "x4", "x5"}) != ms.end());
    }
    SUBCASE("heavy four-path") {
        auto g = make_natural_path({1, 7, 1, 1});
        CHECK(cover_names(g, maximal_strong_covers(g)) ==
              std::vector<std::vector<std::string>>{{"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}});
    }
    SUBCASE("single edge: both endpoints") {
        auto g = fixtures::single_edge(1);
        CHECK(maximal_strong_covers(g).size() == 2);
    }
}

TEST_CASE("shrink_to_strong") {
    SUBCASE("already strong covers are returned unchanged") {
        auto g = make_natural_path({1, 7, 1, 1});
        VertexSet c = g.vertex_set({"x2", "x4"});
        CHECK(shrink_to_strong(g, c) == c);
    }
    SUBCASE("single trivial edge: the lowest-index failing vertex goes first") {
        auto g = fixtures::single_edge(1);
        CHECK(shrink_to_strong(g, VertexSet::of({0, 1})) == VertexSet::of({1}));
    }
    SUBCASE("fan tree: the full vertex set shrinks to everything but the root") {
        auto g = fixtures::fan_tree();
        CHECK(shrink_to_strong(g, VertexSet::full(16)) ==
              VertexSet::full(16) - g.vertex_set({"x0"}));
    }
    SUBCASE("result is strong, inside the input, and maximal within it") {
        std::mt19937_64 rng(24);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_graph(rng, 8, 3);
            auto strong = enumerate_strong_covers(g);
            for (VertexSet c : enumerate_vertex_covers(g)) {
                VertexSet s = shrink_to_strong(g, c);
                CHECK(s.subset_of(c));
                CHECK(partition(g, s).strong);
                for (const auto& p : strong) {
                    const bool strictly_between =
                        p.cover.subset_of(c) && s.subset_of(p.cover) && p.cover != s;
                    CHECK_FALSE(strictly_between);
                }
            }
        }
    }
}

TEST_CASE("SVC persistence under cover growth") {
    // x in L3 of a smaller cover satisfying the condition keeps satisfying it
    // in any larger cover.
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 7, 3);
        auto covers = enumerate_vertex_covers(g);
        for (VertexSet c1 : covers) {
            auto p1 = partition(g, c1);
            for (VertexSet c2 : covers) {
                if (!c1.subset_of(c2) || c1 == c2) continue;
                auto p2 = partition(g, c2);
                (p1.l3 - p1.failing).for_each([&](int x) {
                    CHECK(p2.l3.contains(x));
                    CHECK_FALSE(p2.failing.contains(x));
                });
            }
        }
    }
}

TEST_CASE("nontrivial vertices outside L1 stay outside L1 after shrinking") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_graph(rng, 8, 3);
        for (VertexSet c : enumerate_vertex_covers(g)) {
            auto before = partition(g, c);
            auto after = partition(g, shrink_to_strong(g, c));
            ((c - before.l1) & g.v_plus()).for_each([&](int x) {
                CHECK_FALSE(after.l1.contains(x));
            });
        }
    }
}

TEST_CASE("cover members outside L3 survive into some strong subcover") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 7, 3);
        auto strong = enumerate_strong_covers(g);
        for (VertexSet c : enumerate_vertex_covers(g)) {
            auto p = partition(g, c);
            (c - p.l3).for_each([&](int x) {
                bool found = false;
                for (const auto& q : strong) {
                    if (q.cover.subset_of(c) && q.cover.contains(x)) found = true;
                }
                CHECK(found);
            });
        }
    }
}

namespace {

// Random graph with at most one incoming edge per vertex and weight >= 2
// wherever the degree is. Sources must keep out-degree <= 1, since their
// weight is 1 by convention and the weight hypothesis could never hold.
WeightedOrientedGraph random_single_in_graph(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int n = nv(rng);
    std::vector<int> parent(n, -1);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int v = 1; v < n; ++v) {
        if (coin(rng) == 0) continue;  // leave some extra roots
        parent[v] = std::uniform_int_distribution<int>(0, v - 1)(rng);
    }
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> out(n, 0);
        for (int v = 0; v < n; ++v) {
            if (parent[v] >= 0) out[parent[v]]++;
        }
        for (int v = n - 1; v >= 0; --v) {
            const int p = parent[v];
            if (p >= 0 && parent[p] < 0 && out[p] >= 2) {
                parent[v] = -1;  // detach extra children of a source
                changed = true;
                break;
            }
        }
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) {
            edges.push_back({parent[v], v});
            deg[v]++;
            deg[parent[v]]++;
        }
    }
    std::vector<std::string> names;
    std::vector<int> weights;
    std::uniform_int_distribution<int> w(2, 3);
    for (int v = 0; v < n; ++v) {
        names.push_back("v" + std::to_string(v));
        weights.push_back(deg[v] >= 2 ? w(rng) : 1 + (coin(rng) == 0 ? 0 : w(rng) - 1));
    }
    return WeightedOrientedGraph::create(std::move(names), std::move(weights), std::move(edges));
}

bool inclusion_minimal_containment(const WeightedOrientedGraph& g, VertexSet c) {
    if (!weight_power_containment(g, c)) return false;
    bool minimal = true;
    c.for_each([&](int v) {
        VertexSet smaller = c;
        smaller.remove(v);
        if (weight_power_containment(g, smaller)) minimal = false;
    });
    return minimal;
}

}  // namespace

TEST_CASE("containment_cover_check") {
    SUBCASE("fan tree without its root") {
        auto g = fixtures::fan_tree();
        CHECK(containment_cover_check(g, VertexSet::full(16) - g.vertex_set({"x0"})));
        CHECK_FALSE(containment_cover_check(g, VertexSet::full(16)));
    }
    SUBCASE("heavy four-path violates the weight hypothesis") {
        auto g = make_natural_path({1, 7, 1, 1});
        CHECK_THROWS_AS(containment_cover_check(g, g.vertex_set({"x2", "x4"})),
                        HypothesisError);
    }
    SUBCASE("heavy single edge") {
        auto g = fixtures::single_edge(2);
        CHECK(containment_cover_check(g, VertexSet::of({1})));
    }
    SUBCASE("non-cover is rejected") {
        auto g = fixtures::single_edge(2);
        CHECK_THROWS_AS(containment_cover_check(g, VertexSet{}), PreconditionError);
    }
}

TEST_CASE("containment characterizes maximal strong covers under the hypothesis") {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_single_in_graph(rng, 7);
        auto maximal = maximal_strong_covers(g);
        const auto is_maximal = [&](VertexSet c) {
            for (const auto& p : maximal) {
                if (p.cover == c) return true;
            }
            return false;
        };
        for (VertexSet c : enumerate_vertex_covers(g)) {
            CHECK(containment_cover_check(g, c) == is_maximal(c));
        }
    }
}

TEST_CASE("minimal containment forces a maximal strong cover on arbitrary graphs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_graph(rng, 7, 3);
        auto maximal = maximal_strong_covers(g);
        const int n = g.vertex_count();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            VertexSet c(mask);
            if (!inclusion_minimal_containment(g, c)) continue;
            bool found = false;
            for (const auto& p : maximal) {
                if (p.cover == c) found = true;
            }
            CHECK(found);
        }
    }
}
