#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wog/symbolic.hpp"

namespace wog {

// Outcome of a closed-form equality predicate plus (optionally) its
// computational verification. A predicate never guesses: when the graph is
// outside the predicate's shape or standing assumptions, applicable=false.
// "Unequal" predictions promise inequality at *some* s >= 2 without a bound;
// verification tries s up to a cutoff and sets `inconclusive` instead of
// passing silently when none is found.
struct ClassificationVerdict {
    bool applicable = false;
    bool predicted_equal_all_s = false;
    std::string case_label;  // which clause fired, "" when inapplicable
    std::string reason;
    std::optional<int> l, k;  // run start indices, when the clause has them
    std::vector<std::pair<int, bool>> verified_s;  // (s, computed equal)
    bool inconclusive = false;
};

// Naturally oriented path x1 -> ... -> xn with the given weights
// (weights[0] must be 1). Equality for all s >= 2 holds exactly when the
// non-trivially weighted interior vertices form one contiguous run ending
// at x_{n-1} (or there are none).
ClassificationVerdict path_condition(const std::vector<int>& weights);

// Union of two naturally oriented paths with a common sink z (the shape of
// make_two_path_sink with middle 0 or 1, any sink weight), recognized
// structurally with arbitrary vertex labels. Case split on the weights of
// the two sink-adjacent vertices.
ClassificationVerdict two_path_sink_condition(const WeightedOrientedGraph& g);

// Same but with two weight-1 junction vertices between the arms (the
// make_two_path_sink middle=2 shape).
ClassificationVerdict two_path_two_sink_condition(const WeightedOrientedGraph& g);

// Rooted tree with pendant root (degree 1) and w(x) >= 2 wherever
// deg(x) >= 2: predicts equality for all s >= 2.
ClassificationVerdict tree_condition(const WeightedOrientedGraph& g);

// Every sink's weight reset to 1; equality of ordinary and symbolic powers
// is invariant under this.
WeightedOrientedGraph sink_trivialize(const WeightedOrientedGraph& g);

// Transfer hypothesis for induced digraphs: for every maximal strong cover
// C of g, the strong covers of the induced digraph on t that lie inside C
// must have a single maximal element (i.e. a greatest one). When this holds,
// inequality at some s for the induced digraph forces inequality for g.
bool induced_hypothesis_check(const WeightedOrientedGraph& g, VertexSet t,
                              const Guard& guard = {});

// Scans for an induced naturally oriented path a->b->c->d with w(b) >= 2 and
// w(c) = 1; such a pattern forces I^(3) != I^3. Requires at most one edge
// oriented into each vertex of g (HypothesisError otherwise).
std::optional<std::array<int, 4>> atmost_pattern_scan(const WeightedOrientedGraph& g);

// Runs compare_powers to fill verified_s: on an "equal" prediction every s
// in 2..max_equal_s must agree; on "unequal", s = 2..max_unequal_s are tried
// until an inequality appears, else the verdict is marked inconclusive.
void verify_verdict(ClassificationVerdict& v, const WeightedOrientedGraph& g,
                    const Guard& guard = {}, int max_equal_s = 3, int max_unequal_s = 4);

}  // namespace wog
