#pragma once

#include <cstddef>
#include <vector>

#include "arrtop/rational.hpp"
#include "arrtop/supersolvable.hpp"

namespace arrtop {

// phi_1..phi_max_k with prod_k (1 - t^k)^{phi_k} = prod_i (1 - d_i t).
// Index 0 of the result is phi_1. NonIntegerRank if some phi_k is not integral.
std::vector<Integer> lcs_ranks(const ExponentData& e, std::size_t max_k);

// Coefficients 0..max_degree of prod_k (1 - t^k)^{phi_k} (phi[0] = phi_1).
std::vector<Integer> lcs_product(const std::vector<Integer>& phi, std::size_t max_degree);

// Ranks l_1..l_max_degree of the free graded Lie algebra on generators with
// generator_dims[q-1] generators in degree q. Degrees follow the
// Lie-algebra grading L_q = pi_{q+1} (x) Q: odd q contributes (1 + t^q)^{l_q}
// to the enveloping series, even q contributes (1 - t^q)^{-l_q}.
std::vector<Integer> free_graded_lie_ranks(const std::vector<Integer>& generator_dims, std::size_t max_degree);

}  // namespace arrtop
