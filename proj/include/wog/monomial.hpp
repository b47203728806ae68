#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wog/errors.hpp"
#include "wog/guard.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

using Exponent = std::uint32_t;

// Monomial over a fixed ambient variable set: just its exponent vector.
// The zero vector is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int dim) : e_(dim, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {}

    static Monomial variable(int dim, int v, Exponent exp = 1);

    int dim() const { return static_cast<int>(e_.size()); }
    Exponent operator[](int v) const { return e_[v]; }
    Exponent& operator[](int v) { return e_[v]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    bool is_unit() const;
    std::uint64_t total_degree() const;
    VertexSet support() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;  // overflow-checked
    Monomial quotient(const Monomial& divisor) const; // caller must know divisor | *this

    // zero every exponent outside `keep`
    Monomial restricted_to(VertexSet keep) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }  // lex

    // "x1*x2^3"; the unit monomial prints as "1"
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Exponent> e_;
};

// Monomial ideal held by its unique minimal generating set, sorted
// lexicographically by exponent vector. Zero ideal = no generators;
// unit ideal = the single unit monomial.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int dim) : dim_(dim) {}

    static MonomialIdeal zero(int dim) { return MonomialIdeal(dim); }
    static MonomialIdeal unit(int dim);
    static MonomialIdeal from_generators(int dim, std::vector<Monomial> gens);

    int dim() const { return dim_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.dim_ == b.dim_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int dim_;
    std::vector<Monomial> gens_;  // minimal antichain, lex-sorted
};

bool divides(const Monomial& a, const Monomial& b);  // checked dimensions

MonomialIdeal minimalize(int dim, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        const Guard& guard = {});
// Folds pairwise, smallest generator sets first; that ordering keeps the
// intermediate antichains small, which dominates symbolic power cost.
MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals, int dim,
                            const Guard& guard = {});

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b,
                      const Guard& guard = {});
MonomialIdeal power(const MonomialIdeal& a, int s, const Guard& guard = {});

bool contains_monomial(const MonomialIdeal& i, const Monomial& m);

// True iff m is divisible by a product of s generators of j (repetition
// allowed). Depth-first over generators dividing the running quotient,
// generators in descending total degree, memoized on (quotient, depth),
// pruned by total degree.
bool member_of_power(const Monomial& m, const MonomialIdeal& j, int s);

// Monomial localization: zero all exponents outside `keep`, re-minimalize.
MonomialIdeal restrict_to(const MonomialIdeal& i, VertexSet keep);

}  // namespace wog
