#pragma once

#include <vector>

#include "wog/monomial.hpp"

namespace wog::kernels {

// The hot loops of the ideal arithmetic. Each kernel has a serial reference
// implementation and an OpenMP one; they produce identical output (duplicate
// monomials keep the lowest-index survivor, result sorted lex). The serial
// versions stay as the oracle for the parallel ones in tests, and
// tools/bench_kernels compares their throughput.

// Drop every monomial strictly divisible by another (and repeated copies),
// returning the sorted minimal antichain.
std::vector<Monomial> minimalize_serial(std::vector<Monomial> gens);
std::vector<Monomial> minimalize_parallel(std::vector<Monomial> gens);

// All pairwise lcms / products, unminimalized.
std::vector<Monomial> lcm_grid_serial(const std::vector<Monomial>& a,
                                      const std::vector<Monomial>& b);
std::vector<Monomial> lcm_grid_parallel(const std::vector<Monomial>& a,
                                        const std::vector<Monomial>& b);
std::vector<Monomial> product_grid_serial(const std::vector<Monomial>& a,
                                          const std::vector<Monomial>& b);
std::vector<Monomial> product_grid_parallel(const std::vector<Monomial>& a,
                                            const std::vector<Monomial>& b);

// Global dispatch. Parallel by default when built with OpenMP; WOG_SERIAL=1
// in the environment or set_parallel(false) forces the reference path.
bool parallel_enabled();
void set_parallel(bool enabled);

std::vector<Monomial> minimalize(std::vector<Monomial> gens);
std::vector<Monomial> lcm_grid(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
std::vector<Monomial> product_grid(const std::vector<Monomial>& a, const std::vector<Monomial>& b);

}  // namespace wog::kernels
