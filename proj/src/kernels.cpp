#include "wog/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wog::kernels {

namespace {

std::atomic<bool> parallel_flag = [] {
#ifdef _OPENMP
    const char* env = std::getenv("WOG_SERIAL");
    return !(env && env[0] == '1');
#else
    return false;
#endif
}();

// Sort candidates by (total degree, lex) and deduplicate; any divisor of a
// monomial has smaller or equal degree, so a single forward pass against the
// survivors suffices.
std::vector<Monomial> sort_unique(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.total_degree(), db = b.total_degree();
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

std::vector<Monomial> finalize(std::vector<Monomial> keep) {
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace

bool parallel_enabled() { return parallel_flag.load(); }
void set_parallel(bool enabled) {
#ifdef _OPENMP
    parallel_flag.store(enabled);
#else
    (void)enabled;
    parallel_flag.store(false);
#endif
}

std::vector<Monomial> minimalize_serial(std::vector<Monomial> gens) {
    gens = sort_unique(std::move(gens));
    std::vector<Monomial> keep;
    keep.reserve(gens.size());
    for (auto& m : gens) {
        bool dominated = false;
        for (const auto& k : keep) {
            if (k.divides(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(std::move(m));
    }
    return finalize(std::move(keep));
}

std::vector<Monomial> minimalize_parallel(std::vector<Monomial> gens) {
    gens = sort_unique(std::move(gens));
    const auto n = static_cast<std::ptrdiff_t>(gens.size());
    if (n < 256) return minimalize_serial(std::move(gens));

    // After sort_unique, a strict divisor always sorts earlier, so each
    // element only has to scan its prefix; rows are independent.
    std::vector<char> dominated(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < i; ++j) {
            if (gens[j].divides(gens[i])) {
                dominated[i] = 1;
                break;
            }
        }
    }
    std::vector<Monomial> keep;
    keep.reserve(n);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (!dominated[i]) keep.push_back(std::move(gens[i]));
    }
    return finalize(std::move(keep));
}

namespace {

template <typename Combine>
std::vector<Monomial> grid_serial(const std::vector<Monomial>& a, const std::vector<Monomial>& b,
                                  Combine&& combine) {
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(combine(x, y));
    }
    return out;
}

template <typename Combine>
std::vector<Monomial> grid_parallel(const std::vector<Monomial>& a, const std::vector<Monomial>& b,
                                    Combine&& combine) {
    const auto na = static_cast<std::ptrdiff_t>(a.size());
    const auto nb = static_cast<std::ptrdiff_t>(b.size());
    if (na * nb < 4096) return grid_serial(a, b, combine);
    std::vector<Monomial> out(static_cast<std::size_t>(na * nb));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < na; ++i) {
        for (std::ptrdiff_t j = 0; j < nb; ++j) out[i * nb + j] = combine(a[i], b[j]);
    }
    return out;
}

const auto lcm_of = [](const Monomial& x, const Monomial& y) { return x.lcm(y); };
const auto product_of = [](const Monomial& x, const Monomial& y) { return x * y; };

}  // namespace

std::vector<Monomial> lcm_grid_serial(const std::vector<Monomial>& a,
                                      const std::vector<Monomial>& b) {
    return grid_serial(a, b, lcm_of);
}
std::vector<Monomial> lcm_grid_parallel(const std::vector<Monomial>& a,
                                        const std::vector<Monomial>& b) {
    return grid_parallel(a, b, lcm_of);
}
std::vector<Monomial> product_grid_serial(const std::vector<Monomial>& a,
                                          const std::vector<Monomial>& b) {
    return grid_serial(a, b, product_of);
}
std::vector<Monomial> product_grid_parallel(const std::vector<Monomial>& a,
                                            const std::vector<Monomial>& b) {
    return grid_parallel(a, b, product_of);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    return parallel_enabled() ? minimalize_parallel(std::move(gens))
                              : minimalize_serial(std::move(gens));
}
std::vector<Monomial> lcm_grid(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    return parallel_enabled() ? lcm_grid_parallel(a, b) : lcm_grid_serial(a, b);
}
std::vector<Monomial> product_grid(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    return parallel_enabled() ? product_grid_parallel(a, b) : product_grid_serial(a, b);
}

}  // namespace wog::kernels
