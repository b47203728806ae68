#include "wog/covers.hpp"

#include <algorithm>

namespace wog {

bool is_vertex_cover(const WeightedOrientedGraph& g, VertexSet c) {
    for (auto [a, b] : g.edges()) {
        if (!c.contains(a) && !c.contains(b)) return false;
    }
    return true;
}

CoverPartition partition(const WeightedOrientedGraph& g, VertexSet c) {
    if (!is_vertex_cover(g, c)) {
        throw PreconditionError("vertex set is not a cover of the graph");
    }
    const int n = g.vertex_count();
    const VertexSet outside = c.complement_in(n);

    CoverPartition p;
    p.cover = c;
    c.for_each([&](int x) {
        if (g.out_neighbors(x).intersects(outside)) {
            p.l1.add(x);
        } else if (g.in_neighbors(x).intersects(outside)) {
            p.l2.add(x);
        } else {
            p.l3.add(x);
        }
    });
    const VertexSet eligible = (c - p.l1) & g.v_plus();
    p.l3.for_each([&](int x) {
        if (!g.in_neighbors(x).intersects(eligible)) p.failing.add(x);
    });
    p.strong = p.failing.empty();
    return p;
}

CoverPartition is_strong(const WeightedOrientedGraph& g, VertexSet c) { return partition(g, c); }

bool satisfies_svc(const WeightedOrientedGraph& g, int x, VertexSet c) {
    CoverPartition p = partition(g, c);
    if (!p.l3.contains(x)) {
        throw PreconditionError("vertex '" + g.name(x) + "' is not in L3 of the cover");
    }
    return !p.failing.contains(x);
}

namespace {

// Independent sets of the underlying graph, by include/exclude branching;
// their complements are exactly the vertex covers.
void independent_sets(const WeightedOrientedGraph& g, int v, VertexSet banned,
                      VertexSet chosen, std::vector<VertexSet>& covers) {
    const int n = g.vertex_count();
    if (v == n) {
        covers.push_back(chosen.complement_in(n));
        return;
    }
    independent_sets(g, v + 1, banned, chosen, covers);
    if (!banned.contains(v)) {
        chosen.add(v);
        independent_sets(g, v + 1, banned | g.neighbors(v), chosen, covers);
    }
}

}  // namespace

std::vector<VertexSet> enumerate_vertex_covers(const WeightedOrientedGraph& g,
                                               const Guard& guard) {
    guard.check_vertex_count(g.vertex_count());
    std::vector<VertexSet> covers;
    independent_sets(g, 0, {}, {}, covers);
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<CoverPartition> enumerate_strong_covers(const WeightedOrientedGraph& g,
                                                    const Guard& guard) {
    if (!g.connected()) {
        emit_warning("graph is disconnected; analyzing it as a whole");
    }
    std::vector<CoverPartition> out;
    for (VertexSet c : enumerate_vertex_covers(g, guard)) {
        CoverPartition p = partition(g, c);
        if (p.strong) out.push_back(std::move(p));
    }
    return out;
}

std::vector<CoverPartition> maximal_strong_covers(const WeightedOrientedGraph& g,
                                                  const Guard& guard) {
    std::vector<CoverPartition> strong = enumerate_strong_covers(g, guard);
    std::vector<CoverPartition> out;
    for (const auto& p : strong) {
        bool maximal = true;
        for (const auto& q : strong) {
            if (p.cover != q.cover && p.cover.subset_of(q.cover)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(p);
    }
    return out;
}

VertexSet shrink_to_strong(const WeightedOrientedGraph& g, VertexSet c) {
    // The deletion pool is fixed up front: the vertices failing the SVC
    // condition on the original cover. Deleting one can only eject others
    // from L3, never add new failures among survivors.
    const VertexSet pool = partition(g, c).failing;
    VertexSet current = c;
    for (;;) {
        VertexSet candidates = pool & partition(g, current).l3;
        if (candidates.empty()) return current;
        current.remove(candidates.first());
    }
}

bool weight_power_containment(const WeightedOrientedGraph& g, VertexSet c) {
    for (auto [a, b] : g.edges()) {
        const bool covered = c.contains(b) || (c.contains(a) && g.weight(a) == 1);
        if (!covered) return false;
    }
    return true;
}

bool containment_cover_check(const WeightedOrientedGraph& g, VertexSet c) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_neighbors(v).size() > 1) {
            throw HypothesisError("vertex '" + g.name(v) +
                                  "' has more than one incoming edge; the containment "
                                  "characterization does not apply");
        }
        if (g.degree(v) >= 2 && g.weight(v) < 2) {
            throw HypothesisError("vertex '" + g.name(v) +
                                  "' has degree >= 2 but weight 1; the containment "
                                  "characterization does not apply");
        }
    }
    if (!is_vertex_cover(g, c)) {
        throw PreconditionError("vertex set is not a cover of the graph");
    }
    if (!weight_power_containment(g, c)) return false;
    bool minimal = true;
    c.for_each([&](int v) {
        VertexSet smaller = c;
        smaller.remove(v);
        if (weight_power_containment(g, smaller)) minimal = false;
    });
    return minimal;
}

}  // namespace wog
