#pragma once

#include <vector>

#include "wog/graph.hpp"
#include "wog/guard.hpp"

namespace wog {

// A vertex cover split into the three defining classes:
//   l1: has an out-neighbor outside the cover
//   l2: not in l1, has an in-neighbor outside the cover
//   l3: all neighbors inside the cover
// `failing` lists the l3 vertices that violate the SVC condition;
// the cover is strong exactly when `failing` is empty.
struct CoverPartition {
    VertexSet cover;
    VertexSet l1, l2, l3;
    VertexSet failing;
    bool strong = false;
};

bool is_vertex_cover(const WeightedOrientedGraph& g, VertexSet c);

// Throws PreconditionError when c is not a cover.
CoverPartition partition(const WeightedOrientedGraph& g, VertexSet c);

// Alias of partition(); the verdict of interest is the `strong` flag.
CoverPartition is_strong(const WeightedOrientedGraph& g, VertexSet c);

// SVC condition for x in L3(c): some in-neighbor of x has weight >= 2 and
// lies in c \ L1(c). Throws PreconditionError when x is not in L3(c).
bool satisfies_svc(const WeightedOrientedGraph& g, int x, VertexSet c);

// All vertex covers, each exactly once, ascending by bitmask. Enumerated as
// complements of independent sets of the underlying graph (include/exclude
// branching), so sparse graphs never pay for the full 2^n scan.
std::vector<VertexSet> enumerate_vertex_covers(const WeightedOrientedGraph& g,
                                               const Guard& guard = {});

std::vector<CoverPartition> enumerate_strong_covers(const WeightedOrientedGraph& g,
                                                    const Guard& guard = {});

// Strong covers contained in no other strong cover.
std::vector<CoverPartition> maximal_strong_covers(const WeightedOrientedGraph& g,
                                                  const Guard& guard = {});

// Shrinks a cover to a strong cover C' <= c such that no strong cover
// strictly between C' and c exists: repeatedly deletes, lowest index first,
// members of the initial SVC-failing set that still sit in L3 of the
// current cover. Other deletion orders can reach different (equally valid)
// strong covers; this one is fixed for determinism.
VertexSet shrink_to_strong(const WeightedOrientedGraph& g, VertexSet c);

// True when the edge ideal is contained in (x^w(x) : x in c).
// No structural hypothesis needed; helper for containment_cover_check.
bool weight_power_containment(const WeightedOrientedGraph& g, VertexSet c);

// True iff I(g) lies in (x^w(x) : x in c) and no proper subset of c has that
// property. Requires the graph to satisfy "at most one edge oriented into
// each vertex, and w(x) >= 2 whenever deg(x) >= 2"; throws HypothesisError
// otherwise, because without it a maximal strong cover need not give a
// containment at all.
bool containment_cover_check(const WeightedOrientedGraph& g, VertexSet c);

}  // namespace wog
