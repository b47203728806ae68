#include "wog/graph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace wog {

WeightedOrientedGraph WeightedOrientedGraph::create(std::vector<std::string> names,
                                                    std::vector<int> weights,
                                                    std::vector<std::pair<int, int>> edges) {
    const int n = static_cast<int>(names.size());
    if (n > VertexSet::capacity) {
        throw ParseError("too many vertices (" + std::to_string(n) + "), limit is " +
                         std::to_string(VertexSet::capacity));
    }
    if (static_cast<int>(weights.size()) != n) {
        throw ParseError("weight list length does not match vertex list");
    }

    WeightedOrientedGraph g;
    for (int v = 0; v < n; ++v) {
        if (names[v].empty()) throw ParseError("empty vertex name");
        if (!g.index_.emplace(names[v], v).second) {
            throw ParseError("duplicate vertex name '" + names[v] + "'");
        }
        if (weights[v] < 1) {
            throw ParseError("vertex '" + names[v] + "' has weight " +
                             std::to_string(weights[v]) + ", weights must be >= 1");
        }
    }

    std::sort(edges.begin(), edges.end());
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("edge endpoint out of range");
        if (a == b) throw ParseError("self-loop at '" + names[a] + "'");
        if (g.out_[a].contains(b)) {
            throw ParseError("duplicate edge " + names[a] + " -> " + names[b]);
        }
        if (g.out_[b].contains(a)) {
            throw ParseError("both orientations present between '" + names[a] + "' and '" +
                             names[b] + "'");
        }
        g.out_[a].add(b);
        g.in_[b].add(a);
    }

    // sources carry weight 1 by convention
    for (int v = 0; v < n; ++v) {
        if (g.in_[v].empty()) weights[v] = 1;
        if (weights[v] >= 2) g.v_plus_.add(v);
    }

    g.names_ = std::move(names);
    g.weights_ = std::move(weights);
    g.edges_ = std::move(edges);
    return g;
}

int WeightedOrientedGraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int WeightedOrientedGraph::require_index(const std::string& name) const {
    int v = index_of(name);
    if (v < 0) throw PreconditionError("unknown vertex '" + name + "'");
    return v;
}

bool WeightedOrientedGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    VertexSet seen = VertexSet::of({0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | neighbors(v); });
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == VertexSet::full(n);
}

WeightedOrientedGraph WeightedOrientedGraph::induced_subgraph(VertexSet keep) const {
    if (!keep.subset_of(VertexSet::full(vertex_count()))) {
        throw PreconditionError("induced_subgraph: vertex index out of range");
    }
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> remap(vertex_count(), -1);
    keep.for_each([&](int v) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(names_[v]);
        weights.push_back(weights_[v]);  // create() renormalizes fresh sources
    });
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : edges_) {
        if (keep.contains(a) && keep.contains(b)) edges.emplace_back(remap[a], remap[b]);
    }
    return create(std::move(names), std::move(weights), std::move(edges));
}

WeightedOrientedGraph WeightedOrientedGraph::remove_vertices(VertexSet drop) const {
    if (!drop.subset_of(VertexSet::full(vertex_count()))) {
        throw PreconditionError("remove_vertices: vertex index out of range");
    }
    return induced_subgraph(drop.complement_in(vertex_count()));
}

VertexSet WeightedOrientedGraph::vertex_set(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& name : names) s.add(require_index(name));
    return s;
}

std::vector<std::string> WeightedOrientedGraph::vertex_names(VertexSet s) const {
    std::vector<std::string> out;
    s.for_each([&](int v) { out.push_back(names_[v]); });
    return out;
}

WeightedOrientedGraph make_natural_path(const std::vector<int>& weights) {
    if (weights.empty()) throw PreconditionError("natural path needs at least one vertex");
    if (weights.front() != 1) {
        throw PreconditionError("first vertex of a natural path is a source; its weight must be 1");
    }
    const int n = static_cast<int>(weights.size());
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return WeightedOrientedGraph::create(std::move(names), weights, std::move(edges));
}

WeightedOrientedGraph make_two_path_sink(const std::vector<int>& y_weights,
                                         const std::vector<int>& x_weights,
                                         int middle,
                                         int sink_weight) {
    if (middle < 0 || middle > 2) {
        throw PreconditionError("middle must be 0, 1 or 2");
    }
    if (y_weights.empty() || x_weights.empty()) {
        throw PreconditionError("both arms need at least one vertex");
    }
    if (y_weights.front() != 1 || x_weights.front() != 1) {
        throw PreconditionError("y1 and x1 are sources; their weights must be 1");
    }
    if (middle != 0 && sink_weight != 1) {
        throw PreconditionError("junction weights are fixed to 1 unless middle = 0");
    }
    const int m = static_cast<int>(y_weights.size());
    const int n = static_cast<int>(x_weights.size());
    const int junctions = middle == 0 ? 1 : middle;

    // vertex order: y1..ym, z1[, z2], xn..x1
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 0; i < m; ++i) {
        names.push_back("y" + std::to_string(i + 1));
        weights.push_back(y_weights[i]);
    }
    for (int j = 0; j < junctions; ++j) {
        names.push_back("z" + std::to_string(j + 1));
        weights.push_back(j == 0 && middle == 0 ? sink_weight : 1);
    }
    for (int i = n; i >= 1; --i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(x_weights[i - 1]);
    }

    const int z1 = m;
    const auto x_of = [&](int i) { return m + junctions + (n - i); };  // 1-based x index
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(m - 1, z1);
    if (junctions == 2) {
        edges.emplace_back(z1, z1 + 1);
        edges.emplace_back(x_of(n), z1 + 1);
    } else {
        edges.emplace_back(x_of(n), z1);
    }
    for (int i = 1; i < n; ++i) edges.emplace_back(x_of(i), x_of(i + 1));
    return WeightedOrientedGraph::create(std::move(names), std::move(weights), std::move(edges));
}

WeightedOrientedGraph make_rooted_tree(const std::map<std::string, std::string>& parent,
                                       const std::string& root,
                                       const std::map<std::string, int>& weights) {
    if (parent.count(root)) throw PreconditionError("root '" + root + "' must not have a parent");
    std::set<std::string> vertices{root};
    for (const auto& [child, par] : parent) {
        vertices.insert(child);
        vertices.insert(par);
    }
    for (const auto& [v, w] : weights) {
        if (!vertices.count(v)) {
            throw PreconditionError("weight given for unknown vertex '" + v + "'");
        }
    }
    for (const auto& v : vertices) {
        if (v != root && !parent.count(v)) {
            throw PreconditionError("vertex '" + v + "' has no parent; multiple roots");
        }
    }
    // cycle check: walking up from any vertex must reach the root
    for (const auto& v : vertices) {
        std::set<std::string> seen;
        std::string cur = v;
        while (cur != root) {
            if (!seen.insert(cur).second) {
                throw PreconditionError("parent map contains a cycle through '" + cur + "'");
            }
            cur = parent.at(cur);
        }
    }

    // root first, then children in name order, breadth first
    std::map<std::string, std::vector<std::string>> children;
    for (const auto& [child, par] : parent) children[par].push_back(child);
    std::vector<std::string> names;
    std::vector<int> w;
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> index;
    std::vector<std::string> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::string v = queue[head];
        index[v] = static_cast<int>(names.size());
        names.push_back(v);
        auto it = weights.find(v);
        w.push_back(it == weights.end() ? 1 : it->second);
        auto kids = children.find(v);
        if (kids != children.end()) {
            for (const auto& c : kids->second) queue.push_back(c);
        }
    }
    for (const auto& [child, par] : parent) edges.emplace_back(index.at(par), index.at(child));
    return WeightedOrientedGraph::create(std::move(names), std::move(w), std::move(edges));
}

WeightedOrientedGraph parse(const std::string& text, bool normalize) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw ParseError("graph document needs 'vertices' and 'edges'");
    }

    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("name") || !v.contains("weight") ||
            !v["name"].is_string() || !v["weight"].is_number_integer()) {
            throw ParseError("each vertex needs a string 'name' and integer 'weight'");
        }
        names.push_back(v["name"].get<std::string>());
        weights.push_back(v["weight"].get<int>());
    }

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (!index.emplace(names[i], i).second) {
            throw ParseError("duplicate vertex name '" + names[i] + "'");
        }
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<bool> has_in(names.size(), false);
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw ParseError("each edge must be a [tail, head] pair of vertex names");
        }
        auto tail = index.find(e[0].get<std::string>());
        auto head = index.find(e[1].get<std::string>());
        if (tail == index.end()) throw ParseError("edge references unknown vertex '" + e[0].get<std::string>() + "'");
        if (head == index.end()) throw ParseError("edge references unknown vertex '" + e[1].get<std::string>() + "'");
        edges.emplace_back(tail->second, head->second);
        has_in[head->second] = true;
    }

    if (!normalize) {
        for (std::size_t v = 0; v < names.size(); ++v) {
            if (!has_in[v] && weights[v] > 1) {
                throw ParseError("vertex '" + names[v] + "' is a source but has weight " +
                                 std::to_string(weights[v]) +
                                 "; sources have weight 1 (pass normalize to coerce)");
            }
        }
    }
    return WeightedOrientedGraph::create(std::move(names), std::move(weights), std::move(edges));
}

std::string serialize(const WeightedOrientedGraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        doc["vertices"].push_back({{"name", g.name(v)}, {"weight", g.weight(v)}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges()) {
        doc["edges"].push_back({g.name(a), g.name(b)});
    }
    return doc.dump(2) + "\n";
}

}  // namespace wog
