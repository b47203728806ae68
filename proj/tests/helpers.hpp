#pragma once

// Shared fixtures: the worked example graphs used across the suites, plus a
// deterministic random-graph source for the property tests.

#include <random>
#include <string>
#include <vector>

#include "wog/graph.hpp"

namespace fixtures {

using wog::WeightedOrientedGraph;

// 5-vertex path, weights (1,3,1,3,1), edges x1->x2, x2->x3, x4->x3, x5->x4.
inline WeightedOrientedGraph path_into_middle() {
    return WeightedOrientedGraph::create({"x1", "x2", "x3", "x4", "x5"}, {1, 3, 1, 3, 1},
                                         {{0, 1}, {1, 2}, {3, 2}, {4, 3}});
}

// Its induced digraph on x1..x4 (w(x4) drops to 1).
inline WeightedOrientedGraph path_into_middle_prefix() {
    return path_into_middle().induced_subgraph(wog::VertexSet::of({0, 1, 2, 3}));
}

// 6-vertex path with mixed orientation: x1->x2->x3->x4, x5->x4, x6->x5,
// weights (1,2,1,2,2,1).
inline WeightedOrientedGraph mixed_path_six() {
    return WeightedOrientedGraph::create({"x1", "x2", "x3", "x4", "x5", "x6"},
                                         {1, 2, 1, 2, 2, 1},
                                         {{0, 1}, {1, 2}, {2, 3}, {4, 3}, {5, 4}});
}

// The 16-vertex rooted tree: pendant root x0, then a binary fan-out two
// levels deep; all internal non-root weights 2, leaves 1.
inline WeightedOrientedGraph fan_tree() {
    std::vector<std::string> names;
    for (int i = 0; i < 16; ++i) names.push_back("x" + std::to_string(i));
    std::vector<int> weights{1, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1};
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 3}};
    for (int v = 2; v <= 7; ++v) {
        edges.push_back({v, 2 * v});
        edges.push_back({v, 2 * v + 1});
    }
    return WeightedOrientedGraph::create(std::move(names), std::move(weights), std::move(edges));
}

// single directed edge x -> y with the given head weight
inline WeightedOrientedGraph single_edge(int head_weight = 1) {
    return WeightedOrientedGraph::create({"x", "y"}, {1, head_weight}, {{0, 1}});
}

// Random weighted oriented graph: each vertex pair gets an edge with
// probability ~1/2, orientation uniform; non-source weights uniform in
// [1, max_weight]. Deterministic for a given rng state.
inline WeightedOrientedGraph random_graph(std::mt19937_64& rng, int max_vertices,
                                          int max_weight) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> coin(0, 3);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            switch (coin(rng)) {
                case 0: edges.push_back({a, b}); break;
                case 1: edges.push_back({b, a}); break;
                default: break;  // no edge
            }
        }
    }
    std::uniform_int_distribution<int> wdist(1, max_weight);
    std::vector<int> weights;
    for (int v = 0; v < n; ++v) weights.push_back(wdist(rng));
    return WeightedOrientedGraph::create(std::move(names), std::move(weights), std::move(edges));
}

}  // namespace fixtures
