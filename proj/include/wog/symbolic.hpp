#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "wog/covers.hpp"
#include "wog/monomial.hpp"

namespace wog {

// I(g): one generator x_i * x_j^w(x_j) per directed edge (x_i, x_j).
MonomialIdeal edge_ideal(const WeightedOrientedGraph& g);

// I_C: L1 variables at exponent 1, L2 and L3 variables at their weights.
// c may be any cover, strong or not.
MonomialIdeal irreducible_ideal(const WeightedOrientedGraph& g, const CoverPartition& c);

struct DecompositionComponent {
    CoverPartition cover;
    MonomialIdeal ideal;
};

// The irredundant irreducible decomposition of the edge ideal: one I_C per
// strong cover. The identity  intersection of all I_C == I(g)  is verified
// on every call; a mismatch throws std::logic_error (implementation bug,
// never a property of the input).
std::vector<DecompositionComponent> decomposition(const WeightedOrientedGraph& g,
                                                  const Guard& guard = {});

// Supports of the associated primes: exactly the strong covers.
std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& g,
                                         const Guard& guard = {});

// I_{<=C} for a *maximal* strong cover C, by the closed generator formula:
//   (L1) + (x^w(x) : x in L2) + (x_i x_j^w(x_j) : (x_i,x_j) edge,
//                                x_i in L2 u L3, x_j in L3).
// Membership of c among the maximal strong covers is checked; pass
// check_maximal=false when the caller has already established it.
MonomialIdeal i_sub_c_formula(const WeightedOrientedGraph& g, const CoverPartition& c,
                              const Guard& guard = {}, bool check_maximal = true);

// Same ideal, brute force: intersection of I_C' over all strong covers
// C' <= c. Requires c strong. Independent of the formula path on purpose.
MonomialIdeal i_sub_c_bruteforce(const WeightedOrientedGraph& g, const CoverPartition& c,
                                 const Guard& guard = {});

// s-th symbolic power as the intersection of (I_{<=C})^s over the maximal
// strong covers, with I_{<=C} from the generator formula.
MonomialIdeal symbolic_power(const WeightedOrientedGraph& g, int s, const Guard& guard = {});

// Same power via localization: intersection over the maximal strong covers
// of restrict(I^s, C). Restricting to a smaller support only enlarges the
// ideal, so the non-maximal associated primes never cut anything.
MonomialIdeal symbolic_power_oracle(const WeightedOrientedGraph& g, int s,
                                    const Guard& guard = {});

struct PowerComparison {
    int s = 0;
    bool equal = false;
    std::optional<Monomial> witness;  // in I^(s) \ I^s; present iff !equal
    std::optional<int> gen_count_ordinary;
    int gen_count_symbolic = 0;
    std::chrono::milliseconds elapsed{0};
};

// Decides I^(s) == I^s (s >= 2) by sweeping the minimal generators of the
// symbolic power through member_of_power; the witness, when any, is the
// first failing generator in canonical order and is re-verified on both
// sides before being reported. I^s itself is computed for the generator
// count and the containment sanity check; with full_equality the verdict is
// additionally cross-checked against literal ideal equality.
PowerComparison compare_powers(const WeightedOrientedGraph& g, int s,
                               const Guard& guard = {}, bool full_equality = false);

}  // namespace wog
