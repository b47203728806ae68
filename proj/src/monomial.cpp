#include "wog/monomial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "wog/kernels.hpp"

namespace wog {

namespace {

void check_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw PreconditionError(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

Monomial Monomial::variable(int dim, int v, Exponent exp) {
    if (v < 0 || v >= dim) throw PreconditionError("variable index out of range");
    Monomial m(dim);
    m.e_[v] = exp;
    return m;
}

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (Exponent e : e_) d += e;
    return d;
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (int v = 0; v < dim(); ++v) {
        if (e_[v] > 0) s.add(v);
    }
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    check_same_dim(dim(), other.dim(), "divides");
    for (int v = 0; v < dim(); ++v) {
        if (e_[v] > other.e_[v]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    check_same_dim(dim(), other.dim(), "lcm");
    Monomial out(dim());
    for (int v = 0; v < dim(); ++v) out.e_[v] = std::max(e_[v], other.e_[v]);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_dim(dim(), other.dim(), "product");
    Monomial out(dim());
    for (int v = 0; v < dim(); ++v) {
        Exponent sum = e_[v] + other.e_[v];
        if (sum < e_[v]) throw Error("exponent overflow in monomial product");
        out.e_[v] = sum;
    }
    return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    check_same_dim(dim(), divisor.dim(), "quotient");
    Monomial out(dim());
    for (int v = 0; v < dim(); ++v) {
        if (divisor.e_[v] > e_[v]) throw PreconditionError("quotient by a non-divisor");
        out.e_[v] = e_[v] - divisor.e_[v];
    }
    return out;
}

Monomial Monomial::restricted_to(VertexSet keep) const {
    Monomial out(dim());
    for (int v = 0; v < dim(); ++v) out.e_[v] = keep.contains(v) ? e_[v] : 0;
    return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (int v = 0; v < dim(); ++v) {
        if (e_[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (e_[v] > 1) out += "^" + std::to_string(e_[v]);
    }
    return out.empty() ? "1" : out;
}

MonomialIdeal MonomialIdeal::unit(int dim) {
    MonomialIdeal i(dim);
    i.gens_.push_back(Monomial(dim));
    return i;
}

MonomialIdeal MonomialIdeal::from_generators(int dim, std::vector<Monomial> gens) {
    for (const auto& g : gens) check_same_dim(g.dim(), dim, "from_generators");
    MonomialIdeal i(dim);
    i.gens_ = kernels::minimalize(std::move(gens));
    return i;
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_unit();
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string(names);
    }
    return out + ")";
}

bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

MonomialIdeal minimalize(int dim, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(dim, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const Guard& guard) {
    check_same_dim(a.dim(), b.dim(), "intersect");
    guard.check_generator_count(a.generators().size() * b.generators().size());
    return MonomialIdeal::from_generators(a.dim(),
                                          kernels::lcm_grid(a.generators(), b.generators()));
}

MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals, int dim, const Guard& guard) {
    if (ideals.empty()) return MonomialIdeal::unit(dim);
    std::sort(ideals.begin(), ideals.end(), [](const MonomialIdeal& x, const MonomialIdeal& y) {
        return x.generator_count() < y.generator_count();
    });
    MonomialIdeal acc = std::move(ideals.front());
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i], guard);
    return acc;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, const Guard& guard) {
    check_same_dim(a.dim(), b.dim(), "product");
    guard.check_generator_count(a.generators().size() * b.generators().size());
    return MonomialIdeal::from_generators(a.dim(),
                                          kernels::product_grid(a.generators(), b.generators()));
}

MonomialIdeal power(const MonomialIdeal& a, int s, const Guard& guard) {
    guard.check_s(s);
    MonomialIdeal acc = a;
    for (int k = 1; k < s; ++k) acc = product(acc, a, guard);
    return acc;
}

bool contains_monomial(const MonomialIdeal& i, const Monomial& m) {
    check_same_dim(i.dim(), m.dim(), "contains_monomial");
    for (const auto& g : i.generators()) {
        if (g.divides(m)) return true;
    }
    return false;
}

namespace {

struct QuotientKey {
    std::vector<Exponent> exps;
    int remaining;
    bool operator==(const QuotientKey&) const = default;
};

struct QuotientKeyHash {
    std::size_t operator()(const QuotientKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Exponent e : k.exps) {
            h ^= e;
            h *= 1099511628211ull;
        }
        h ^= static_cast<std::uint64_t>(k.remaining);
        h *= 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

bool member_rec(const Monomial& quotient, const std::vector<Monomial>& gens, int remaining,
                std::uint64_t min_degree,
                std::unordered_map<QuotientKey, bool, QuotientKeyHash>& memo) {
    if (remaining == 0) return true;
    if (quotient.total_degree() < min_degree * static_cast<std::uint64_t>(remaining)) return false;
    QuotientKey key{quotient.exponents(), remaining};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
        if (g.divides(quotient) &&
            member_rec(quotient.quotient(g), gens, remaining - 1, min_degree, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(std::move(key), ok);
    return ok;
}

}  // namespace

bool member_of_power(const Monomial& m, const MonomialIdeal& j, int s) {
    check_same_dim(m.dim(), j.dim(), "member_of_power");
    if (s < 1) throw PreconditionError("member_of_power needs s >= 1");
    if (j.is_zero()) return false;
    std::vector<Monomial> gens = j.generators();
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.total_degree() > b.total_degree();
    });
    std::uint64_t min_degree = std::numeric_limits<std::uint64_t>::max();
    for (const auto& g : gens) min_degree = std::min(min_degree, g.total_degree());
    std::unordered_map<QuotientKey, bool, QuotientKeyHash> memo;
    return member_rec(m, gens, s, min_degree, memo);
}

MonomialIdeal restrict_to(const MonomialIdeal& i, VertexSet keep) {
    std::vector<Monomial> gens;
    gens.reserve(i.generators().size());
    for (const auto& g : i.generators()) gens.push_back(g.restricted_to(keep));
    return MonomialIdeal::from_generators(i.dim(), std::move(gens));
}

}  // namespace wog
