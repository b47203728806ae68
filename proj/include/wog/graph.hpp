#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wog/errors.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

// A weighted oriented graph: an orientation of a simple graph plus a
// positive integer weight per vertex. Source vertices always carry weight 1
// (the constructor normalizes silently; the parser is stricter, see parse()).
// Instances are immutable after construction and safe to share across threads.
class WeightedOrientedGraph {
public:
    static WeightedOrientedGraph create(std::vector<std::string> names,
                                        std::vector<int> weights,
                                        std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int weight(int v) const { return weights_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // -1 when the name is unknown
    int index_of(const std::string& name) const;
    int require_index(const std::string& name) const;  // throws PreconditionError

    VertexSet out_neighbors(int v) const { return out_[v]; }
    VertexSet in_neighbors(int v) const { return in_[v]; }
    VertexSet neighbors(int v) const { return out_[v] | in_[v]; }
    int degree(int v) const { return neighbors(v).size(); }
    bool is_source(int v) const { return in_[v].empty(); }
    bool is_sink(int v) const { return out_[v].empty(); }

    // vertices of non-trivial weight (>= 2)
    VertexSet v_plus() const { return v_plus_; }

    bool has_edge(int tail, int head) const { return out_[tail].contains(head); }
    bool connected() const;  // underlying undirected graph; empty graph counts as connected

    // Induced digraph on `keep`: edges with both ends inside, orientation
    // preserved; vertices that become sources are reassigned weight 1.
    WeightedOrientedGraph induced_subgraph(VertexSet keep) const;
    WeightedOrientedGraph remove_vertices(VertexSet drop) const;

    VertexSet vertex_set(const std::vector<std::string>& names) const;
    std::vector<std::string> vertex_names(VertexSet s) const;  // in index order

private:
    WeightedOrientedGraph() = default;

    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::vector<std::pair<int, int>> edges_;  // sorted by (tail, head)
    std::vector<VertexSet> out_, in_;
    VertexSet v_plus_;
    std::map<std::string, int> index_;
};

// Named families.

// x1 -> x2 -> ... -> xn; weights[0] must be 1 (x1 is a source).
WeightedOrientedGraph make_natural_path(const std::vector<int>& weights);

// Two naturally oriented paths y1->...->ym and x1->...->xn joined at a
// common sink through `middle` forced-weight-1 junction vertices:
//   middle=1:  ym -> z1 <- xn                    (w(z1) = 1)
//   middle=2:  ym -> z1 -> z2 <- xn              (w(z1) = w(z2) = 1)
//   middle=0:  ym -> z1 <- xn with w(z1) = sink_weight (any positive value)
WeightedOrientedGraph make_two_path_sink(const std::vector<int>& y_weights,
                                         const std::vector<int>& x_weights,
                                         int middle,
                                         int sink_weight = 1);

// All edges oriented away from `root`; parent maps each non-root vertex to
// its parent. Root weight is forced to 1.
WeightedOrientedGraph make_rooted_tree(const std::map<std::string, std::string>& parent,
                                       const std::string& root,
                                       const std::map<std::string, int>& weights);

// JSON document format:
//   {"vertices":[{"name":"x1","weight":1},...],"edges":[["x1","x2"],...]}
// Edge [a,b] is the directed edge a -> b. Canonical form keeps vertices in
// file order and sorts edges by (tail index, head index); serialize() always
// emits canonical form, so serialize(parse(serialize(g))) == serialize(g).
// A source with an explicit weight > 1 is rejected unless `normalize` is set.
WeightedOrientedGraph parse(const std::string& text, bool normalize = false);
std::string serialize(const WeightedOrientedGraph& g);

}  // namespace wog
