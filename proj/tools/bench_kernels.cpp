// Benchmark of the serial reference kernels against the OpenMP ones on
// random generator sets shaped like the ones symbolic power computations
// produce. Build and run:  ./bench_kernels [count] [dim] [max_exp]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "wog/kernels.hpp"

using namespace wog;

namespace {

std::vector<Monomial> random_monomials(int count, int dim, int max_exp, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<Monomial> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Monomial m(dim);
        for (int v = 0; v < dim; ++v) m[v] = static_cast<Exponent>(exp(rng));
        out.push_back(std::move(m));
    }
    return out;
}

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::atoi(argv[1]) : 4000;
    const int dim = argc > 2 ? std::atoi(argv[2]) : 12;
    const int max_exp = argc > 3 ? std::atoi(argv[3]) : 6;
    std::mt19937_64 rng(8457);

    const auto gens = random_monomials(count, dim, max_exp, rng);
    const auto more = random_monomials(count / 4, dim, max_exp, rng);

    std::vector<Monomial> out_serial, out_parallel;
    const double min_s = time_ms([&] { out_serial = kernels::minimalize_serial(gens); });
    const double min_p = time_ms([&] { out_parallel = kernels::minimalize_parallel(gens); });
    if (out_serial != out_parallel) {
        std::fprintf(stderr, "minimalize kernels disagree!\n");
        return 1;
    }
    std::printf("minimalize   %6d gens -> %5zu   serial %8.2f ms   parallel %8.2f ms   x%.2f\n",
                count, out_serial.size(), min_s, min_p, min_s / min_p);

    const double grid_s = time_ms([&] { out_serial = kernels::lcm_grid_serial(gens, more); });
    const double grid_p = time_ms([&] { out_parallel = kernels::lcm_grid_parallel(gens, more); });
    if (out_serial != out_parallel) {
        std::fprintf(stderr, "lcm kernels disagree!\n");
        return 1;
    }
    std::printf("lcm_grid     %6zu pairs        serial %8.2f ms   parallel %8.2f ms   x%.2f\n",
                gens.size() * more.size(), grid_s, grid_p, grid_s / grid_p);

    const double prod_s = time_ms([&] { out_serial = kernels::product_grid_serial(gens, more); });
    const double prod_p =
        time_ms([&] { out_parallel = kernels::product_grid_parallel(gens, more); });
    if (out_serial != out_parallel) {
        std::fprintf(stderr, "product kernels disagree!\n");
        return 1;
    }
    std::printf("product_grid %6zu pairs        serial %8.2f ms   parallel %8.2f ms   x%.2f\n",
                gens.size() * more.size(), prod_s, prod_p, prod_s / prod_p);
    return 0;
}
