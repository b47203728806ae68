#include "wog/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wog {

MonomialIdeal edge_ideal(const WeightedOrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size());
    for (auto [a, b] : g.edges()) {
        Monomial m(n);
        m[a] += 1;
        m[b] += static_cast<Exponent>(g.weight(b));
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal irreducible_ideal(const WeightedOrientedGraph& g, const CoverPartition& c) {
    const int n = g.vertex_count();
    std::vector<Monomial> gens;
    c.l1.for_each([&](int v) { gens.push_back(Monomial::variable(n, v)); });
    (c.l2 | c.l3).for_each([&](int v) {
        gens.push_back(Monomial::variable(n, v, static_cast<Exponent>(g.weight(v))));
    });
    return MonomialIdeal::from_generators(n, std::move(gens));
}

std::vector<DecompositionComponent> decomposition(const WeightedOrientedGraph& g,
                                                  const Guard& guard) {
    std::vector<DecompositionComponent> out;
    std::vector<MonomialIdeal> ideals;
    for (auto& p : enumerate_strong_covers(g, guard)) {
        MonomialIdeal ic = irreducible_ideal(g, p);
        ideals.push_back(ic);
        out.push_back({std::move(p), std::move(ic)});
    }
    if (intersect_all(std::move(ideals), g.vertex_count(), guard) != edge_ideal(g)) {
        throw std::logic_error(
            "irreducible decomposition does not intersect back to the edge ideal; "
            "this is a bug, please report the input graph");
    }
    return out;
}

std::vector<VertexSet> associated_primes(const WeightedOrientedGraph& g, const Guard& guard) {
    std::vector<VertexSet> out;
    for (const auto& p : enumerate_strong_covers(g, guard)) out.push_back(p.cover);
    return out;
}

namespace {

MonomialIdeal i_sub_c_formula_unchecked(const WeightedOrientedGraph& g, const CoverPartition& c) {
    const int n = g.vertex_count();
    std::vector<Monomial> gens;
    c.l1.for_each([&](int v) { gens.push_back(Monomial::variable(n, v)); });
    c.l2.for_each([&](int v) {
        gens.push_back(Monomial::variable(n, v, static_cast<Exponent>(g.weight(v))));
    });
    const VertexSet tails = c.l2 | c.l3;
    for (auto [a, b] : g.edges()) {
        if (tails.contains(a) && c.l3.contains(b)) {
            Monomial m(n);
            m[a] += 1;
            m[b] += static_cast<Exponent>(g.weight(b));
            gens.push_back(std::move(m));
        }
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace

MonomialIdeal i_sub_c_formula(const WeightedOrientedGraph& g, const CoverPartition& c,
                              const Guard& guard, bool check_maximal) {
    if (check_maximal) {
        bool found = false;
        for (const auto& p : maximal_strong_covers(g, guard)) {
            if (p.cover == c.cover) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw PreconditionError("the generator formula applies to maximal strong covers only");
        }
    }
    return i_sub_c_formula_unchecked(g, c);
}

MonomialIdeal i_sub_c_bruteforce(const WeightedOrientedGraph& g, const CoverPartition& c,
                                 const Guard& guard) {
    if (!c.strong) {
        throw PreconditionError("i_sub_c_bruteforce needs a strong cover");
    }
    std::vector<MonomialIdeal> parts;
    for (const auto& p : enumerate_strong_covers(g, guard)) {
        if (p.cover.subset_of(c.cover)) parts.push_back(irreducible_ideal(g, p));
    }
    return intersect_all(std::move(parts), g.vertex_count(), guard);
}

MonomialIdeal symbolic_power(const WeightedOrientedGraph& g, int s, const Guard& guard) {
    guard.check_s(s);
    std::vector<MonomialIdeal> powers;
    for (const auto& p : maximal_strong_covers(g, guard)) {
        powers.push_back(power(i_sub_c_formula_unchecked(g, p), s, guard));
    }
    return intersect_all(std::move(powers), g.vertex_count(), guard);
}

MonomialIdeal symbolic_power_oracle(const WeightedOrientedGraph& g, int s, const Guard& guard) {
    guard.check_s(s);
    const MonomialIdeal is = power(edge_ideal(g), s, guard);
    std::vector<MonomialIdeal> parts;
    for (const auto& p : maximal_strong_covers(g, guard)) {
        parts.push_back(restrict_to(is, p.cover));
    }
    return intersect_all(std::move(parts), g.vertex_count(), guard);
}

PowerComparison compare_powers(const WeightedOrientedGraph& g, int s, const Guard& guard,
                               bool full_equality) {
    if (s < 2) {
        throw PreconditionError("compare_powers needs s >= 2; at s = 1 both sides are the "
                                "edge ideal by the decomposition identity");
    }
    const auto start = std::chrono::steady_clock::now();

    PowerComparison result;
    result.s = s;
    const MonomialIdeal ideal = edge_ideal(g);
    const MonomialIdeal symbolic = symbolic_power(g, s, guard);
    result.gen_count_symbolic = symbolic.generator_count();

    result.equal = true;
    for (const auto& m : symbolic.generators()) {
        if (!member_of_power(m, ideal, s)) {
            result.equal = false;
            result.witness = m;
            break;
        }
    }

    const MonomialIdeal ordinary = power(ideal, s, guard);
    result.gen_count_ordinary = ordinary.generator_count();
    for (const auto& m : ordinary.generators()) {
        if (!contains_monomial(symbolic, m)) {
            throw std::logic_error("ordinary power escapes the symbolic power; this is a bug");
        }
    }
    if (full_equality && result.equal != (ordinary == symbolic)) {
        throw std::logic_error("membership sweep and full ideal comparison disagree; "
                               "this is a bug");
    }
    if (result.witness) {
        // re-verify the witness on both sides before reporting it
        if (!contains_monomial(symbolic, *result.witness) ||
            member_of_power(*result.witness, ideal, s)) {
            throw std::logic_error("invalid witness certificate; this is a bug");
        }
    }

    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace wog
