#pragma once

// Kostant's q-partition function and Lusztig's q-analogue of weight
// multiplicity.

#include "spherical/context.hpp"
#include "spherical/laurent.hpp"

#include <vector>

namespace spherical {

// Sum over ways of writing beta as a sum of positive roots of q^(number of
// roots used). Zero when beta is outside the positive root cone.
QPoly kostant_q(const GroupContext& ctx, const Weight& beta);

// K_{lambda mu}(q) = sum_w (-1)^l(w) P_q(w(lambda + rho) - (mu + rho)).
// Zero unless mu <= lambda. Both weights must be dominant.
QPoly lusztig_q_analogue(const GroupContext& ctx, const Weight& lambda, const Weight& mu);

// Matrix of chi_lambda in the basis 1_{K mu K}:
// m[i][j] = v^{-2<rho_B, mu_j>} K_{lambda_i mu_j}(q^{-1}).
// Every weight must have sigma-grade k.
std::vector<std::vector<LaurentCoeff>> kl_matrix(const GroupContext& ctx, int k,
                                                 const std::vector<Weight>& lambdas);

}  // namespace spherical
